#include "multval/hensel.hpp"

#include <algorithm>
#include <numeric>

namespace multval::hensel {

EventualOrder eventual_order(const Rho& rho, const std::vector<AffineFn>& fns) {
  for (size_t i = 0; i < fns.size(); ++i)
    for (size_t j = i + 1; j < fns.size(); ++j)
      if (rho.sign(fns[i].slope - fns[j].slope) == Sign::Zero)
        throw Error("DuplicateSlope", "slopes must be pairwise sign-distinct");

  EventualOrder out;
  out.order.resize(fns.size());
  std::iota(out.order.begin(), out.order.end(), size_t{0});
  std::sort(out.order.begin(), out.order.end(), [&](size_t i, size_t j) {
    return rho.compare(fns[i].slope, fns[j].slope) == Cmp::Less;
  });

  out.threshold = gamma::zero();
  for (size_t a = 0; a < out.order.size(); ++a)
    for (size_t b = a + 1; b < out.order.size(); ++b) {
      const AffineFn& lo = fns[out.order[a]];
      const AffineFn& hi = fns[out.order[b]];
      // crossing of c_lo + n_lo x and c_hi + n_hi x, with n_hi - n_lo > 0
      GammaElem cross = gamma::divide(rho, gamma::sub(rho, lo.intercept, hi.intercept),
                                      hi.slope - lo.slope);
      if (gamma::less(rho, out.threshold, cross)) out.threshold = cross;
    }
  return out;
}

}  // namespace multval::hensel
