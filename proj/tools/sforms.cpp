// sforms: command-line front end for the singular_forms library.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "singular_forms/singular_forms.hpp"

namespace {

using namespace sforms;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string vars;
  std::string f;
  std::string weights;
  std::string plist;
  int p = -1;
  std::optional<std::uint64_t> budget;
  bool json = false;
  bool no_timing = false;
  long degree_prefix = 8;
  long r = 0;
  std::string a;
  int dim = 0;
  long rmax = 10;
};

std::vector<long> parse_long_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError(std::string("malformed ") + what + " list '" + text + "'");
    }
  }
  if (out.empty()) throw InputError(std::string("empty ") + what + " list");
  return out;
}

std::uint64_t resolve_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("SF_BUDGET")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::logic_error&) {
    }
    throw InputError(std::string("SF_BUDGET must be a positive integer, got '") + env + "'");
  }
  return kDefaultBudget;
}

Polynomial read_polynomial(const Options& o) {
  if (o.vars.empty()) throw InputError("--vars is required (e.g. --vars x,y,z)");
  if (o.f.empty()) throw InputError("--f is required (e.g. --f \"x^2+y^2+z^2\")");
  auto names = split_names(o.vars);
  MonomialOrder order(OrderKind::GRevLex);
  if (!o.weights.empty()) {
    auto w = parse_long_list(o.weights, "weight");
    if (w.size() != names.size())
      throw InputError("--weights has " + std::to_string(w.size()) + " entries for " + std::to_string(names.size()) +
                       " variables");
    std::vector<int> wi;
    for (long x : w) {
      if (x < 1) throw InputError("weights must be positive integers");
      wi.push_back(static_cast<int>(x));
    }
    order = MonomialOrder(OrderKind::GRevLex, wi);
  }
  return parse_poly(o.f, make_ring(names, order));
}

Json polynomial_input(const Options& o) {
  Json j{{"vars", o.vars}, {"f", o.f}};
  if (!o.weights.empty()) j["weights"] = o.weights;
  return j;
}

class Timer {
 public:
  long elapsed_ms(bool suppress) const {
    if (suppress) return 0;
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count());
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Options& o, const std::string& command, Json input, Json result, const std::string& text,
          const Timer& timer) {
  if (o.json)
    std::cout << envelope(command, std::move(input), std::move(result), timer.elapsed_ms(o.no_timing)).dump(2)
              << "\n";
  else
    std::cout << text;
}

int hypersurface_analyze(const Options& o) {
  Timer timer;
  AnalyzeOptions opts;
  opts.budget = resolve_budget(o);
  if (!o.plist.empty())
    for (long p : parse_long_list(o.plist, "degree")) opts.plist.push_back(static_cast<int>(p));
  if (o.p >= 0) opts.plist.push_back(o.p);
  auto report = analyze_hypersurface(read_polynomial(o), opts);
  Json input = polynomial_input(o);
  if (!opts.plist.empty()) input["plist"] = opts.plist;
  emit(o, "hypersurface analyze", input, Json(report), render_text(report), timer);
  return kExitOk;
}

int koszul_cohomology_cmd(const Options& o) {
  Timer timer;
  if (o.p < 0) throw InputError("--p is required");
  KoszulOptions opts;
  opts.budget = resolve_budget(o);
  opts.degree_prefix = o.degree_prefix;
  if (o.degree_prefix < 0) throw InputError("--degree-prefix must be non-negative");
  auto K = build_koszul(read_polynomial(o), opts.budget);
  auto H = koszul_cohomology(K, o.p, opts);
  Json input = polynomial_input(o);
  input["p"] = o.p;
  input["degree_prefix"] = o.degree_prefix;
  emit(o, "koszul cohomology", input, cohomology_json(H), render_text(H, o.degree_prefix), timer);
  return kExitOk;
}

int koszul_pattern_cmd(const Options& o) {
  Timer timer;
  KoszulOptions opts;
  opts.budget = resolve_budget(o);
  auto v = vanishing_pattern(read_polynomial(o), opts);
  emit(o, "koszul pattern", polynomial_input(o), pattern_json(v), render_text(v), timer);
  return kExitOk;
}

int quotient_analyze_cmd(const Options& o) {
  Timer timer;
  if (o.r < 1) throw InputError("--r must be a positive integer");
  if (o.a.empty()) throw InputError("--a is required (e.g. --a 1,1,1)");
  auto a = parse_long_list(o.a, "weight");
  int p = o.p >= 0 ? o.p : static_cast<int>(a.size()) - 1;
  auto q = analyze_quotient(o.r, a, p);
  Json input{{"r", o.r}, {"a", a}, {"p", p}};
  emit(o, "quotient analyze", input, quotient_json(q), render_text(q), timer);
  return kExitOk;
}

int quotient_classify_cmd(const Options& o) {
  Timer timer;
  auto types = classify_dimension(o.dim, o.rmax);
  Json input{{"dim", o.dim}, {"rmax", o.rmax}};
  emit(o, "quotient classify", input, classification_json(o.dim, o.rmax, types), render_text(o.dim, o.rmax, types),
       timer);
  return kExitOk;
}

int selftest_cmd(const Options&) {
  int failures = 0;
  auto check = [&](const std::string& name, const std::function<bool()>& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      std::cout << name << ": exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "ok    " : "FAIL  ") << name << "\n";
    if (!ok) ++failures;
  };
  auto poly = [](const std::string& vars, const std::string& f) { return parse_poly(f, make_ring(split_names(vars))); };
  check("reduced basis of (x^2+y^2, xy)", [&] {
    auto I = groebner_basis(Ideal(make_ring({"x", "y"}), {poly("x,y", "x^2+y^2"), poly("x,y", "x*y")}));
    std::vector<std::string> got;
    for (auto& g : I.basis_polynomials()) got.push_back(g.to_string());
    std::sort(got.begin(), got.end());
    return got == std::vector<std::string>{"x*y", "x^2+y^2", "y^3"};
  });
  check("quadric cone vanishing pattern", [&] {
    auto v = vanishing_pattern(poly("x,y,z", "x^2+y^2+z^2"));
    return v.zero == std::vector<bool>{true, true, false, false};
  });
  check("Tjurina number of x^3+y^3+z^3", [&] { return tjurina_dimension(poly("x,y,z", "x^3+y^3+z^3")) == 8; });
  check("1/2(1,1,1) reflexive 2-forms free", [&] { return reflexive_freeness({2, {1, 1, 1}}, 2).free; });
  check("1/3(1,1,2) reflexive 2-forms not free", [&] {
    auto q = reflexive_freeness({3, {1, 1, 2}}, 2);
    return !q.free && q.generator_count == 5;
  });
  check("classification in dimension 3", [&] {
    auto c = classify_dimension(3, 10);
    return c.size() == 2 && c[0].type.r == 1 && c[1].type == QuotientType{2, {1, 1, 1}};
  });
  std::cout << (failures ? "selftest failed" : "selftest passed") << "\n";
  return failures ? kExitInternal : kExitOk;
}

void add_polynomial_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--vars", o.vars, "comma-separated variable names, defining the ring")->required();
  cmd->add_option("--f", o.f, "polynomial expression")->required();
  cmd->add_option("--weights", o.weights, "comma-separated positive weights for weighted-homogeneous f");
  cmd->add_option("--budget", o.budget, "reduction step budget per Groebner run (default: SF_BUDGET or 1000000)")
      ->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "emit the JSON report");
  cmd->add_flag("--no-timing", o.no_timing, "report timing_ms as 0 for reproducible output");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Torsion, cotorsion and freeness of differential forms on singularities", "sforms"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::function<int(const Options&)> action;

  auto* hyp = app.add_subcommand("hypersurface", "hypersurface singularities");
  hyp->require_subcommand(1);
  auto* analyze = hyp->add_subcommand("analyze", "full singularity report");
  add_polynomial_flags(analyze, o);
  analyze->add_option("--plist", o.plist, "comma-separated form degrees (default 1..n)");
  analyze->add_option("--p", o.p, "single form degree")->check(CLI::NonNegativeNumber);
  add_output_flags(analyze, o);
  analyze->callback([&] { action = hypersurface_analyze; });

  auto* kos = app.add_subcommand("koszul", "the complex of wedge with df");
  kos->require_subcommand(1);
  auto* coh = kos->add_subcommand("cohomology", "one cohomology module H^p(K)");
  add_polynomial_flags(coh, o);
  coh->add_option("--p", o.p, "cohomological degree")->required()->check(CLI::NonNegativeNumber);
  coh->add_option("--degree-prefix", o.degree_prefix, "Hilbert function truncation degree");
  add_output_flags(coh, o);
  coh->callback([&] { action = koszul_cohomology_cmd; });
  auto* pat = kos->add_subcommand("pattern", "vanishing of H^p(K) for all p");
  add_polynomial_flags(pat, o);
  add_output_flags(pat, o);
  pat->callback([&] { action = koszul_pattern_cmd; });

  auto* quo = app.add_subcommand("quotient", "cyclic quotient singularities");
  quo->require_subcommand(1);
  auto* qa = quo->add_subcommand("analyze", "one type 1/r(a_1,...,a_n)");
  qa->add_option("--r", o.r, "group order")->required();
  qa->add_option("--a", o.a, "comma-separated weights")->required();
  qa->add_option("--p", o.p, "form degree (default n-1)")->check(CLI::NonNegativeNumber);
  add_output_flags(qa, o);
  qa->callback([&] { action = quotient_analyze_cmd; });
  auto* qc = quo->add_subcommand("classify", "types with free reflexive (n-1)-forms");
  qc->add_option("--dim", o.dim, "dimension n")->required();
  qc->add_option("--rmax", o.rmax, "largest group order searched");
  add_output_flags(qc, o);
  qc->callback([&] { action = quotient_classify_cmd; });

  auto* self = app.add_subcommand("selftest", "run built-in consistency checks");
  self->callback([&] { action = selftest_cmd; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "sforms: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    return action(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "sforms: " << e.what() << " (raise --budget or SF_BUDGET)\n";
    return kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "sforms: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "sforms: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
