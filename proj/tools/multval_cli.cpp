// multval: exact arithmetic in multiplicative valued difference fields.
//
// Every subcommand takes the rho order type via --rho (or a config file named
// by MULTVAL_RHO_FILE) and, where coefficients matter, a residue field via
// --residue. Output is exact operator/rational text, never floating point.
// Exit codes: 0 success, 1 structured mathematical failure, 2 usage/parse.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "multval/text.hpp"

using namespace multval;

namespace {

enum class ResidueKind { RationalId, RationalShift };

struct Options {
  std::string rho_text;
  std::string residue_text = "rational-id";
  std::string command;
  std::vector<std::string> args;
  std::string file;
  std::string gamma_opt;
  std::string target;
  std::string cutoff;
  long max_iter = 32;
  long eta0 = 0;
  long budget = 1000;
};

void load_config_file(Options& opt) {
  const char* path = std::getenv("MULTVAL_RHO_FILE");
  if (!path) return;
  std::ifstream in(path);
  if (!in) throw Error("ConfigError", std::string("cannot open config file ") + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t");
      size_t e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "rho" && opt.rho_text.empty()) opt.rho_text = value;
    if (key == "residue") opt.residue_text = value;
  }
}

Rho require_rho(const Options& opt) {
  if (opt.rho_text.empty())
    throw Error("ConfigError", "no rho specified: pass --rho or set MULTVAL_RHO_FILE");
  return text::parse_rho_spec(opt.rho_text);
}

ResidueKind residue_kind(const Options& opt) {
  if (opt.residue_text == "rational-id") return ResidueKind::RationalId;
  if (opt.residue_text == "rational-shift") return ResidueKind::RationalShift;
  throw Error("ConfigError", "unknown residue instance: " + opt.residue_text);
}

std::vector<std::string> sequence_inputs(const Options& opt, size_t skip = 0) {
  std::vector<std::string> out(opt.args.begin() + long(skip), opt.args.end());
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) throw Error("ConfigError", "cannot open sequence file " + opt.file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t") != std::string::npos) out.push_back(line);
    }
  }
  return out;
}

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

std::string complexity_str(const Complexity& c) {
  auto part = [](int v) {
    return v == Complexity::kNegInf ? std::string("-inf") : std::to_string(v);
  };
  return "(" + part(c.order) + ", " + part(c.top_degree) + ", " + part(c.degree) + ")";
}

template <class F>
std::string equation_str(const std::vector<typename F::Elem>& alphas) {
  std::string out = "1";
  for (size_t j = 0; j < alphas.size(); ++j) {
    if (F::is_zero(alphas[j])) continue;
    auto [neg, mag] = text::sign_split<F>(alphas[j]);
    out += neg ? " - " : " + ";
    bool unit = F::is_zero(F::sub(mag, F::one()));
    if (!unit) out += text::carrier_str<F>(mag) + "*";
    if (j == 0)
      out += "x";
    else if (j == 1)
      out += "s(x)";
    else
      out += "s^" + std::to_string(j) + "(x)";
  }
  return out + " = 0";
}

const std::string& arg(const Options& opt, size_t i) {
  if (i >= opt.args.size()) throw Error("ConfigError", "missing argument");
  return opt.args[i];
}

template <class F>
int run_typed(const Options& opt) {
  Rho rho = require_rho(opt);
  std::ostream& os = std::cout;

  if (opt.command == "veval") {
    auto x = text::parse_series<F>(rho, arg(opt, 0));
    os << text::str(rho, hahn::valuation(x)) << "\n";
    return 0;
  }
  if (opt.command == "peval") {
    auto p = text::parse_sigma_poly<F>(rho, arg(opt, 0));
    auto a = text::parse_series<F>(rho, arg(opt, 1));
    os << text::str(rho, sigma_poly::eval(rho, p, a)) << "\n";
    return 0;
  }
  if (opt.command == "taylor") {
    auto p = text::parse_sigma_poly<F>(rho, arg(opt, 0));
    MultiIndex idx = text::parse_multi_index(arg(opt, 1));
    idx.resize(p.nvars(), 0);
    os << text::str(rho, sigma_poly::taylor_coeff(p, idx)) << "\n";
    return 0;
  }
  if (opt.command == "complexity") {
    auto p = text::parse_sigma_poly<F>(rho, arg(opt, 0));
    os << complexity_str(sigma_poly::complexity(p)) << "\n";
    return 0;
  }
  if (opt.command == "config") {
    auto p = text::parse_sigma_poly<F>(rho, arg(opt, 0));
    auto a = text::parse_series<F>(rho, arg(opt, 1));
    auto cfg = hensel::config(rho, p, a);
    if (!cfg) {
      os << "not in configuration\n";
      return 0;
    }
    os << "gamma=" << text::str(rho, cfg->gamma) << " minimizing={";
    for (size_t i = 0; i < cfg->minimizing.size(); ++i)
      os << (i ? "," : "") << cfg->minimizing[i];
    os << "} strict=" << (cfg->strict ? "yes" : "no") << "\n";
    return 0;
  }
  if (opt.command == "step") {
    auto p = text::parse_sigma_poly<F>(rho, arg(opt, 0));
    auto a = text::parse_series<F>(rho, arg(opt, 1));
    auto cfg = hensel::config(rho, p, a);
    if (!cfg) {
      os << "not in configuration\n";
      return 1;
    }
    auto res = hensel::step(rho, p, a, *cfg);
    if (std::holds_alternative<hensel::SolverFailure<F>>(res)) {
      os << "SolverFailed residue equation: "
         << equation_str<F>(std::get<hensel::SolverFailure<F>>(res).alphas) << "\n";
      return 1;
    }
    os << text::str(rho, std::get<hahn::Series<F>>(res)) << "\n";
    return 0;
  }
  if (opt.command == "lift") {
    auto p = text::parse_sigma_poly<F>(rho, arg(opt, 0));
    auto a = text::parse_series<F>(rho, arg(opt, 1));
    if (opt.target.empty()) throw Error("ConfigError", "lift needs --target");
    GammaElem target = text::parse_gamma(rho, opt.target);
    auto rep = hensel::lift(rho, p, a, target, opt.max_iter);
    for (size_t k = 0; k < rep.trace.size(); ++k)
      os << "iter " << (k + 1) << ": gamma=" << text::str(rho, rep.trace[k].gamma)
         << " vP=" << text::str(rho, rep.trace[k].v_after) << "\n";
    switch (rep.status) {
      case hensel::LiftStatus::RootFound:
        os << "RootFound b = " << text::str(rho, rep.final) << "\n";
        return 0;
      case hensel::LiftStatus::PrecisionReached:
        os << "PrecisionReached b = " << text::str(rho, rep.final) << "\n";
        return 0;
      case hensel::LiftStatus::SolverFailed:
        os << "SolverFailed residue equation: " << equation_str<F>(rep.failure->alphas)
           << "\n";
        return 1;
      case hensel::LiftStatus::NotInConfiguration:
        os << "NotInConfiguration b = " << text::str(rho, rep.final) << "\n";
        return 1;
    }
    return 1;
  }
  if (opt.command == "rv") {
    auto x = text::parse_series<F>(rho, arg(opt, 0));
    os << text::str(rho, rv::of(x)) << "\n";
    return 0;
  }
  if (opt.command == "rvsum") {
    std::vector<rv::RVElem<F>> rs;
    for (const auto& a : opt.args) rs.push_back(text::parse_rv<F>(rho, a));
    auto s = rv::sum(rho, rs);
    if (!s) {
      os << "undefined\n";
      return 0;
    }
    os << text::str(rho, *s) << "\n";
    return 0;
  }
  if (opt.command == "pc-check") {
    std::vector<hahn::Series<F>> seq;
    for (const auto& s : sequence_inputs(opt)) seq.push_back(text::parse_series<F>(rho, s));
    auto rep = hensel::pc_check(rho, seq, size_t(opt.eta0));
    os << "pc: " << (rep.is_pc ? "yes" : "no") << "\n";
    os << "gammas:";
    for (const auto& g : rep.gammas) os << " " << text::str(rho, g);
    os << "\n";
    for (const auto& v : rep.violations) os << "violation: " << v << "\n";
    return 0;
  }
  if (opt.command == "pseudo-limit") {
    auto cand = text::parse_series<F>(rho, arg(opt, 0));
    std::vector<hahn::Series<F>> seq;
    for (const auto& s : sequence_inputs(opt, 1))
      seq.push_back(text::parse_series<F>(rho, s));
    os << "pseudo-limit: "
       << (hensel::is_pseudo_limit(rho, cand, seq, size_t(opt.eta0)) ? "yes" : "no")
       << "\n";
    return 0;
  }
  if (opt.command == "generic") {
    if (opt.gamma_opt.empty()) throw Error("ConfigError", "generic needs --gamma");
    GammaElem g = text::parse_gamma(rho, opt.gamma_opt);
    std::vector<sigma_poly::SigmaPoly<F>> ps;
    for (const auto& a : opt.args) ps.push_back(text::parse_sigma_poly<F>(rho, a));
    auto out = sigma_poly::make_generic(rho, ps, g, size_t(opt.budget));
    if (!out) {
      os << "none (residue search exhausted)\n";
      return 1;
    }
    os << text::str(rho, *out) << "\n";
    return 0;
  }
  if (opt.command == "witness") {
    if (opt.gamma_opt.empty()) throw Error("ConfigError", "witness needs --gamma");
    GammaElem g = text::parse_gamma(rho, opt.gamma_opt);
    auto w = rv::axiom4_witness<F>(rho, g);
    os << "witness: " << text::str(rho, w.value) << "\n";
    os << "axiom4: "
       << (w.status == rv::WitnessStatus::Verified ? "verified" : "not-applicable") << "\n";
    return 0;
  }
  throw Error("ConfigError", "unknown command " + opt.command);
}

int run(const Options& opt) {
  std::ostream& os = std::cout;
  // commands independent of the residue field
  if (opt.command == "sign") {
    Rho rho = require_rho(opt);
    os << sign_str(rho.sign(text::parse_linop(arg(opt, 0)))) << "\n";
    return 0;
  }
  if (opt.command == "cmp") {
    Rho rho = require_rho(opt);
    os << cmp_str(rho.compare(text::parse_linop(arg(opt, 0)),
                              text::parse_linop(arg(opt, 1))))
       << "\n";
    return 0;
  }
  if (opt.command == "reduce") {
    Rho rho = require_rho(opt);
    os << text::str(rho.reduce(text::parse_linop(arg(opt, 0)))) << "\n";
    return 0;
  }
  if (opt.command == "gadd") {
    Rho rho = require_rho(opt);
    GammaElem a = text::parse_gamma(rho, arg(opt, 0));
    GammaElem b = text::parse_gamma(rho, arg(opt, 1));
    os << text::str(rho, gamma::add(rho, a, b)) << "\n";
    return 0;
  }
  if (opt.command == "gdiv") {
    Rho rho = require_rho(opt);
    GammaElem a = text::parse_gamma(rho, arg(opt, 0));
    LinOp l = text::parse_linop(arg(opt, 1));
    os << text::str(rho, gamma::divide(rho, a, l)) << "\n";
    return 0;
  }
  if (opt.command == "eventual-order") {
    Rho rho = require_rho(opt);
    std::vector<hensel::AffineFn> fns;
    for (const auto& a : opt.args) {
      text::Lexer lx(a);
      GammaElem c = text::parse_gamma(rho, lx);
      lx.expect_sym(';');
      LinOp slope = text::parse_linop(lx);
      lx.expect_end();
      fns.push_back({std::move(c), std::move(slope)});
    }
    auto eo = hensel::eventual_order(rho, fns);
    os << "order:";
    for (size_t i : eo.order) os << " " << i;
    os << "\n";
    os << "threshold: " << text::str(rho, eo.threshold) << "\n";
    return 0;
  }
  switch (residue_kind(opt)) {
    case ResidueKind::RationalId: return run_typed<QField>(opt);
    case ResidueKind::RationalShift: return run_typed<QsField>(opt);
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiplicative valued difference field calculator"};
  app.require_subcommand(1);

  Options opt;

  static const std::vector<std::pair<std::string, std::string>> kCommands = {
      {"sign", "sign of a linear difference operator"},
      {"cmp", "compare two operators"},
      {"reduce", "canonical representative modulo the kernel"},
      {"gadd", "add two value-group elements"},
      {"gdiv", "divide a value-group element by an operator"},
      {"veval", "valuation of a series"},
      {"peval", "evaluate a sigma-polynomial at a series"},
      {"taylor", "taylor coefficient P_(I)"},
      {"complexity", "complexity triple of a sigma-polynomial"},
      {"config", "sigma-hensel configuration of (P, a)"},
      {"step", "one sigma-hensel improvement step"},
      {"lift", "iterated sigma-hensel lifting"},
      {"rv", "leading-term datum of a series"},
      {"rvsum", "partial sum in RV"},
      {"pc-check", "pseudo-convergence check for a sequence"},
      {"pseudo-limit", "test a candidate pseudo-limit"},
      {"eventual-order", "eventual ordering of affine functions"},
      {"generic", "construct a generic element of given valuation"},
      {"witness", "axiom-4 witness at gamma"},
  };
  for (const auto& [name, desc] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--rho", opt.rho_text,
                    "rho order type, e.g. 'algebraic [-2,0,1] in (1,2)'");
    sub->add_option("--residue", opt.residue_text,
                    "residue field: rational-id | rational-shift");
    sub->add_option("args", opt.args, "positional arguments");
    sub->add_option("--file", opt.file, "read series, one per line");
    sub->add_option("--gamma", opt.gamma_opt, "value-group element");
    sub->add_option("--target", opt.target, "target valuation");
    sub->add_option("--cutoff", opt.cutoff, "cutoff valuation");
    sub->add_option("--max-iter", opt.max_iter, "iteration cap");
    sub->add_option("--eta0", opt.eta0, "starting index");
    sub->add_option("--budget", opt.budget, "candidate budget");
    sub->callback([&opt, name = name] { opt.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    load_config_file(opt);
    return run(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == "ParseError" || e.code() == "ConfigError" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
