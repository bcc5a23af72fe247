#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace multval {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sgn(const Int& n) { return n.sign(); }
inline int sgn(const Rat& q) { return q.sign(); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs(const Int& n) { return boost::multiprecision::abs(n); }

/// Structured error with a stable machine-readable code, e.g. "ZeroOperator".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

inline Sign sign_of_int(int s) {
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline Sign negate(Sign s) { return sign_of_int(-static_cast<int>(s)); }

inline Cmp cmp_from_sign(Sign s) {
  switch (s) {
    case Sign::Negative: return Cmp::Less;
    case Sign::Zero: return Cmp::Equal;
    default: return Cmp::Greater;
  }
}

}  // namespace multval
