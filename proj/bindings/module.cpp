// Python bindings: a Context owns the rho order type and the residue field
// choice; values travel as exact text in the same grammars the CLI uses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multval/text.hpp"

namespace py = pybind11;
using namespace multval;

namespace {

std::string sign_str(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    default: return "positive";
  }
}

std::string cmp_str(Cmp c) {
  switch (c) {
    case Cmp::Less: return "less";
    case Cmp::Equal: return "equal";
    default: return "greater";
  }
}

std::string status_str(hensel::LiftStatus s) {
  switch (s) {
    case hensel::LiftStatus::RootFound: return "RootFound";
    case hensel::LiftStatus::PrecisionReached: return "PrecisionReached";
    case hensel::LiftStatus::SolverFailed: return "SolverFailed";
    default: return "NotInConfiguration";
  }
}

class Context {
  Rho rho_;
  bool shift_;

  GammaElem g(const std::string& s) const { return text::parse_gamma(rho_, s); }
  template <class F>
  hahn::Series<F> ser(const std::string& s) const {
    return text::parse_series<F>(rho_, s);
  }
  template <class F>
  sigma_poly::SigmaPoly<F> pol(const std::string& s) const {
    return text::parse_sigma_poly<F>(rho_, s);
  }
  template <class Fn>
  auto dispatch(Fn&& fn) const {
    return shift_ ? fn(QsField{}) : fn(QField{});
  }

 public:
  Context(const std::string& rho_spec, const std::string& residue)
      : rho_(text::parse_rho_spec(rho_spec)), shift_(residue == "rational-shift") {
    if (residue != "rational-id" && residue != "rational-shift")
      throw Error("ConfigError", "unknown residue instance: " + residue);
  }

  std::string sign(const std::string& op) const {
    return sign_str(rho_.sign(text::parse_linop(op)));
  }
  std::string compare(const std::string& a, const std::string& b) const {
    return cmp_str(rho_.compare(text::parse_linop(a), text::parse_linop(b)));
  }
  std::string reduce(const std::string& op) const {
    return text::str(rho_.reduce(text::parse_linop(op)));
  }

  std::string gamma_add(const std::string& a, const std::string& b) const {
    return text::str(rho_, gamma::add(rho_, g(a), g(b)));
  }
  std::string gamma_compare(const std::string& a, const std::string& b) const {
    return cmp_str(gamma::compare(rho_, g(a), g(b)));
  }
  std::string gamma_scalar_mul(const std::string& op, const std::string& a) const {
    return text::str(rho_, gamma::scalar_mul(rho_, text::parse_linop(op), g(a)));
  }
  std::string gamma_divide(const std::string& a, const std::string& op) const {
    return text::str(rho_, gamma::divide(rho_, g(a), text::parse_linop(op)));
  }

  std::string series_add(const std::string& x, const std::string& y) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      return text::str(rho_, hahn::add(rho_, ser<F>(x), ser<F>(y)));
    });
  }
  std::string series_mul(const std::string& x, const std::string& y) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      return text::str(rho_, hahn::mul(rho_, ser<F>(x), ser<F>(y)));
    });
  }
  std::string series_sigma(const std::string& x) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      return text::str(rho_, hahn::sigma(rho_, ser<F>(x)));
    });
  }
  std::string valuation(const std::string& x) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      return text::str(rho_, hahn::valuation(ser<F>(x)));
    });
  }
  std::string residue(const std::string& x) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      return text::carrier_str<F>(hahn::residue_pi(rho_, ser<F>(x)));
    });
  }
  std::string invert(const std::string& x, const std::string& cutoff) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      return text::str(rho_, hahn::invert(rho_, ser<F>(x), g(cutoff)));
    });
  }

  std::string poly_eval(const std::string& p, const std::string& a) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      return text::str(rho_, sigma_poly::eval(rho_, pol<F>(p), ser<F>(a)));
    });
  }
  std::string taylor(const std::string& p, const std::string& idx) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      auto sp = pol<F>(p);
      MultiIndex i = text::parse_multi_index(idx);
      i.resize(sp.nvars(), 0);
      return text::str(rho_, sigma_poly::taylor_coeff(sp, i));
    });
  }
  py::tuple complexity(const std::string& p) const {
    Complexity c = dispatch([&](auto f) {
      using F = decltype(f);
      return sigma_poly::complexity(pol<F>(p));
    });
    auto part = [](int v) -> py::object {
      if (v == Complexity::kNegInf) return py::none();
      return py::int_(v);
    };
    return py::make_tuple(part(c.order), part(c.top_degree), part(c.degree));
  }

  py::object hensel_config(const std::string& p, const std::string& a) const {
    return dispatch([&](auto f) -> py::object {
      using F = decltype(f);
      auto cfg = hensel::config(rho_, pol<F>(p), ser<F>(a));
      if (!cfg) return py::none();
      py::dict d;
      d["gamma"] = text::str(rho_, cfg->gamma);
      d["minimizing"] = cfg->minimizing;
      d["strict"] = cfg->strict;
      return d;
    });
  }

  py::dict hensel_lift(const std::string& p, const std::string& a,
                       const std::string& target, long max_iter) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      auto rep = hensel::lift(rho_, pol<F>(p), ser<F>(a), g(target), max_iter);
      py::dict d;
      d["status"] = status_str(rep.status);
      d["final"] = text::str(rho_, rep.final);
      py::list trace;
      for (const auto& t : rep.trace)
        trace.append(py::make_tuple(text::str(rho_, t.gamma), text::str(rho_, t.v_after)));
      d["trace"] = trace;
      if (rep.failure) {
        py::list eq;
        for (const auto& al : rep.failure->alphas) eq.append(text::carrier_str<F>(al));
        d["equation"] = eq;
      }
      return d;
    });
  }

  std::string rv_of(const std::string& x) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      return text::str(rho_, rv::of(ser<F>(x)));
    });
  }
  std::optional<std::string> rv_sum(const std::vector<std::string>& rs) const {
    return dispatch([&](auto f) -> std::optional<std::string> {
      using F = decltype(f);
      std::vector<rv::RVElem<F>> elems;
      for (const auto& r : rs) elems.push_back(text::parse_rv<F>(rho_, r));
      auto s = rv::sum(rho_, elems);
      if (!s) return std::nullopt;
      return text::str(rho_, *s);
    });
  }

  py::dict pc_check(const std::vector<std::string>& seq, size_t eta0) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      std::vector<hahn::Series<F>> xs;
      for (const auto& s : seq) xs.push_back(ser<F>(s));
      auto rep = hensel::pc_check(rho_, xs, eta0);
      py::dict d;
      d["is_pc"] = rep.is_pc;
      py::list gs;
      for (const auto& gv : rep.gammas) gs.append(text::str(rho_, gv));
      d["gammas"] = gs;
      d["violations"] = rep.violations;
      return d;
    });
  }

  bool is_pseudo_limit(const std::string& a, const std::vector<std::string>& seq,
                       size_t eta0) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      std::vector<hahn::Series<F>> xs;
      for (const auto& s : seq) xs.push_back(ser<F>(s));
      return hensel::is_pseudo_limit(rho_, ser<F>(a), xs, eta0);
    });
  }

  std::optional<std::string> make_generic(const std::vector<std::string>& ps,
                                          const std::string& gm, size_t budget) const {
    return dispatch([&](auto f) -> std::optional<std::string> {
      using F = decltype(f);
      std::vector<sigma_poly::SigmaPoly<F>> polys;
      for (const auto& p : ps) polys.push_back(pol<F>(p));
      auto out = sigma_poly::make_generic(rho_, polys, g(gm), budget);
      if (!out) return std::nullopt;
      return text::str(rho_, *out);
    });
  }

  py::tuple axiom4_witness(const std::string& gm) const {
    return dispatch([&](auto f) {
      using F = decltype(f);
      auto w = rv::axiom4_witness<F>(rho_, g(gm));
      return py::make_tuple(
          text::str(rho_, w.value),
          w.status == rv::WitnessStatus::Verified ? "verified" : "not-applicable");
    });
  }

  py::tuple eventual_order(const std::vector<std::pair<std::string, std::string>>& fns) const {
    std::vector<hensel::AffineFn> affine;
    for (const auto& [c, slope] : fns)
      affine.push_back({g(c), text::parse_linop(slope)});
    auto eo = hensel::eventual_order(rho_, affine);
    return py::make_tuple(eo.order, text::str(rho_, eo.threshold));
  }
};

}  // namespace

PYBIND11_MODULE(_multval, m) {
  m.doc() = "exact arithmetic in multiplicative valued difference fields";

  py::register_exception<Error>(m, "MathError");

  py::class_<Context>(m, "Context")
      .def(py::init<const std::string&, const std::string&>(), py::arg("rho"),
           py::arg("residue") = "rational-id")
      .def("sign", &Context::sign)
      .def("compare", &Context::compare)
      .def("reduce", &Context::reduce)
      .def("gamma_add", &Context::gamma_add)
      .def("gamma_compare", &Context::gamma_compare)
      .def("gamma_scalar_mul", &Context::gamma_scalar_mul)
      .def("gamma_divide", &Context::gamma_divide)
      .def("series_add", &Context::series_add)
      .def("series_mul", &Context::series_mul)
      .def("series_sigma", &Context::series_sigma)
      .def("valuation", &Context::valuation)
      .def("residue", &Context::residue)
      .def("invert", &Context::invert)
      .def("poly_eval", &Context::poly_eval)
      .def("taylor", &Context::taylor)
      .def("complexity", &Context::complexity)
      .def("hensel_config", &Context::hensel_config)
      .def("hensel_lift", &Context::hensel_lift, py::arg("p"), py::arg("a"),
           py::arg("target"), py::arg("max_iter") = 32)
      .def("rv", &Context::rv_of)
      .def("rv_sum", &Context::rv_sum)
      .def("pc_check", &Context::pc_check, py::arg("seq"), py::arg("eta0") = 0)
      .def("is_pseudo_limit", &Context::is_pseudo_limit, py::arg("a"), py::arg("seq"),
           py::arg("eta0") = 0)
      .def("make_generic", &Context::make_generic, py::arg("polys"), py::arg("gamma"),
           py::arg("budget") = 1000)
      .def("axiom4_witness", &Context::axiom4_witness)
      .def("eventual_order", &Context::eventual_order);

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
