#pragma once

// JSON and fixed-width text rendering of analysis results.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "singular_forms/hypersurface.hpp"
#include "singular_forms/koszul.hpp"
#include "singular_forms/quotient.hpp"

namespace sforms {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "singular-forms/1";

#ifdef SFORMS_VERSION
inline constexpr const char* kToolVersion = SFORMS_VERSION;
#else
inline constexpr const char* kToolVersion = "1.0.0";
#endif

inline Json envelope(const std::string& command, Json input, Json result, long timing_ms) {
  Json j;
  j["schema"] = kSchema;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  j["timing_ms"] = timing_ms;
  return j;
}

// ---- hypersurface ----

inline void to_json(Json& j, const CorankProfile& c) {
  j = Json{{"p", c.p}, {"at_origin", c.at_origin}, {"generic", c.generic}};
}
inline void from_json(const Json& j, CorankProfile& c) {
  c.p = j.at("p").get<int>();
  c.at_origin = j.at("at_origin").get<long>();
  c.generic = j.at("generic").get<long>();
}

inline void to_json(Json& j, const FreenessVerdict& v) {
  j = Json{{"object", v.object},   {"p", v.p},
           {"free", v.free},       {"min_gens", v.min_gens},
           {"generic_rank", v.generic_rank}, {"rationale", v.rationale}};
}
inline void from_json(const Json& j, FreenessVerdict& v) {
  v.object = j.at("object").get<std::string>();
  v.p = j.at("p").get<int>();
  v.free = j.at("free").get<bool>();
  v.min_gens = j.at("min_gens").get<long>();
  v.generic_rank = j.at("generic_rank").get<long>();
  v.rationale = j.at("rationale").get<std::string>();
}

inline void to_json(Json& j, const TheoremCheck& t) {
  j = Json{{"theorem", t.theorem}, {"status", t.status}, {"detail", t.detail}};
}
inline void from_json(const Json& j, TheoremCheck& t) {
  t.theorem = j.at("theorem").get<std::string>();
  t.status = j.at("status").get<std::string>();
  t.detail = j.at("detail").get<std::string>();
}

inline void to_json(Json& j, const SingularityReport& r) {
  j = Json::object();
  j["f"] = r.f;
  j["vars"] = r.vars;
  j["weights"] = r.weights;
  j["n"] = r.n;
  j["m"] = r.m;
  if (r.smooth)
    j["d"] = "smooth";
  else
    j["d"] = r.d;
  j["normal"] = r.normal;
  j["e"] = r.e;
  j["vanishing"] = r.vanishing;
  j["tor"] = r.tor_table;
  j["cotor"] = r.cotor_table;
  if (r.tjurina)
    j["tjurina"] = *r.tjurina;
  else
    j["tjurina"] = "infinite";
  j["coranks"] = r.coranks;
  j["reflexive"] = r.reflexive;
  j["torsion_free"] = r.torsion_free;
  j["kahler"] = r.kahler;
  j["verdicts"] = r.verdicts;
}

inline void from_json(const Json& j, SingularityReport& r) {
  r.f = j.at("f").get<std::string>();
  r.vars = j.at("vars").get<std::vector<std::string>>();
  r.weights = j.at("weights").get<std::vector<int>>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.smooth = j.at("d").is_string();
  r.d = r.smooth ? r.n + 2 : j.at("d").get<int>();
  r.normal = j.at("normal").get<bool>();
  r.e = j.at("e").get<int>();
  r.vanishing = j.at("vanishing").get<std::vector<bool>>();
  r.tor_table = j.at("tor").get<std::vector<bool>>();
  r.cotor_table = j.at("cotor").get<std::vector<bool>>();
  if (j.at("tjurina").is_string())
    r.tjurina.reset();
  else
    r.tjurina = j.at("tjurina").get<long>();
  r.coranks = j.at("coranks").get<std::vector<CorankProfile>>();
  r.reflexive = j.at("reflexive").get<std::vector<FreenessVerdict>>();
  r.torsion_free = j.at("torsion_free").get<std::vector<FreenessVerdict>>();
  r.kahler = j.at("kahler").get<std::vector<FreenessVerdict>>();
  r.verdicts = j.at("verdicts").get<std::vector<TheoremCheck>>();
}

// ---- koszul ----

inline Json cohomology_json(const CohomologyModule& h) {
  Json j;
  j["p"] = h.p;
  j["ambient_rank"] = h.presentation.rank;
  j["is_zero"] = h.is_zero;
  j["min_gen_count"] = h.min_gen_count;
  j["min_gen_degrees"] = h.min_gen_degrees;
  j["hilbert_prefix"] = h.hilbert_prefix;
  if (h.total_dimension)
    j["total_dimension"] = h.total_dimension->get_si();
  else
    j["total_dimension"] = "infinite";
  return j;
}

inline Json pattern_json(const VanishingPattern& v) {
  return Json{{"n", v.n}, {"vanishing", v.zero}, {"tor", v.tor_nonzero}, {"cotor", v.cotor_nonzero}};
}

// ---- quotient ----

inline std::vector<std::string> quotient_variable_names(std::size_t n) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(n <= 4 ? small[i] : "x" + std::to_string(i + 1));
  return out;
}

/// "x^2*dx∧dy", "dz", "1"
inline std::string form_string(const InvariantForm& g) {
  auto names = quotient_variable_names(g.m.size());
  std::string mono;
  for (std::size_t i = 0; i < g.m.size(); ++i) {
    if (!g.m[i]) continue;
    if (!mono.empty()) mono += '*';
    mono += names[i];
    if (g.m[i] > 1) mono += "^" + std::to_string(g.m[i]);
  }
  std::string wedge;
  for (int i : g.I) wedge += (wedge.empty() ? "d" : "∧d") + names[i];
  if (mono.empty()) return wedge.empty() ? "1" : wedge;
  return wedge.empty() ? mono : mono + "*" + wedge;
}

inline Json type_json(const QuotientType& t) { return Json{{"type", t.to_string()}, {"r", t.r}, {"a", t.a}}; }

struct QuotientAnalysis {
  QuotientType type;
  long reduced_by = 1;
  QuotientType canonical;
  int p = 0;
  QuotientFreeness freeness;
  std::vector<InvariantForm> generators;
  bool terminal = false;
  bool gorenstein = false;
  bool isolated = false;
};

inline QuotientAnalysis analyze_quotient(long r, const std::vector<long>& a, int p) {
  auto v = validate_type(r, a);
  QuotientAnalysis q;
  q.type = v.type;
  q.reduced_by = v.reduced_by;
  q.canonical = canonical_type(v.type);
  q.p = p;
  q.generators = invariant_form_generators(v.type, p);
  q.freeness = reflexive_freeness(v.type, p);
  q.terminal = reid_tai_terminal(v.type);
  q.gorenstein = gorenstein_check(v.type);
  q.isolated = is_isolated(v.type);
  return q;
}

inline Json quotient_json(const QuotientAnalysis& q) {
  Json j = type_json(q.type);
  j["normalized_by_gcd"] = q.reduced_by;
  j["canonical"] = q.canonical.to_string();
  j["p"] = q.p;
  j["free_p"] = q.freeness.free;
  j["generator_count"] = q.freeness.generator_count;
  j["rank"] = q.freeness.rank;
  Json gens = Json::array();
  for (auto& g : q.generators) {
    std::vector<int> I1;
    for (int i : g.I) I1.push_back(i + 1);
    gens.push_back(Json{{"I", I1}, {"m", g.m}, {"form", form_string(g)}});
  }
  j["generators"] = gens;
  j["terminal"] = q.terminal;
  j["gorenstein"] = q.gorenstein;
  j["isolated"] = q.isolated;
  return j;
}

inline Json classification_json(int n, long r_max, const std::vector<ClassifiedType>& types) {
  Json list = Json::array();
  for (auto& c : types) {
    Json j = type_json(c.type);
    j["free_p"] = true;
    j["terminal"] = c.terminal;
    j["gorenstein"] = c.gorenstein;
    j["isolated"] = c.isolated;
    j["generator_count"] = c.generator_count;
    list.push_back(std::move(j));
  }
  return Json{{"dim", n}, {"rmax", r_max}, {"p", n - 1}, {"types", list}};
}

// ---- text ----

namespace detail {

/// Columns occupied by a UTF-8 string, one per code point.
inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// Rows "tor" and "cotor" over columns p = 0..n+1; cells "0" or "≠0".
inline std::string tor_cotor_table(const std::vector<bool>& tor, const std::vector<bool>& cotor) {
  constexpr std::size_t label = 6, cell = 5;
  std::ostringstream os;
  os << detail::pad_left("p", label);
  for (std::size_t p = 0; p < tor.size(); ++p) os << detail::pad_left(std::to_string(p), cell);
  os << '\n';
  auto row = [&](const char* name, const std::vector<bool>& v) {
    os << detail::pad_left(name, label);
    for (bool b : v) os << detail::pad_left(b ? "≠0" : "0", cell);
    os << '\n';
  };
  row("tor", tor);
  row("cotor", cotor);
  return os.str();
}

inline std::string verdict_line(const FreenessVerdict& v) {
  std::ostringstream os;
  os << v.object << " p=" << v.p << ": " << (v.free ? "free" : "not free") << " (minimal generators " << v.min_gens
     << ", rank " << v.generic_rank << ")";
  return os.str();
}

inline std::string render_text(const SingularityReport& r) {
  std::ostringstream os;
  os << "f = " << r.f << "\n";
  os << "vars: ";
  for (std::size_t i = 0; i < r.vars.size(); ++i) os << (i ? "," : "") << r.vars[i];
  os << "  weights: ";
  for (std::size_t i = 0; i < r.weights.size(); ++i) os << (i ? "," : "") << r.weights[i];
  os << "\n";
  os << "n = " << r.n << ", m = " << r.m << ", e = " << r.e << "\n";
  os << "singular locus: " << (r.smooth ? "empty (smooth)" : "codimension d = " + std::to_string(r.d)) << "\n";
  os << "normal: " << detail::yes_no(r.normal) << "\n";
  os << "tjurina: " << (r.tjurina ? std::to_string(*r.tjurina) : "infinite") << "\n\n";
  os << tor_cotor_table(r.tor_table, r.cotor_table) << "\n";
  os << "corank (origin/generic):";
  for (auto& c : r.coranks) os << " p=" << c.p << ": " << c.at_origin << "/" << c.generic;
  os << "\n";
  for (auto* group : {&r.reflexive, &r.torsion_free, &r.kahler})
    for (auto& v : *group) os << verdict_line(v) << "\n";
  os << "\n";
  for (auto& t : r.verdicts) os << t.theorem << ": " << t.status << " (" << t.detail << ")\n";
  return os.str();
}

inline std::string render_text(const CohomologyModule& h, long degree_prefix) {
  std::ostringstream os;
  os << "H^" << h.p << "(K): " << (h.is_zero ? "zero" : "nonzero") << "\n";
  os << "minimal generators: " << h.min_gen_count;
  if (!h.min_gen_degrees.empty()) {
    os << " (degrees";
    for (int d : h.min_gen_degrees) os << " " << d;
    os << ")";
  }
  os << "\n";
  os << "hilbert function, degrees 0.." << degree_prefix << ":";
  for (long v : h.hilbert_prefix) os << " " << v;
  os << "\n";
  os << "total dimension: " << (h.total_dimension ? h.total_dimension->get_str() : "infinite") << "\n";
  return os.str();
}

inline std::string render_text(const VanishingPattern& v) {
  std::ostringstream os;
  os << "H^p(K) for p = 0.." << v.n + 1 << ":";
  for (bool z : v.zero) os << " " << (z ? "0" : "≠0");
  os << "\n\n" << tor_cotor_table(v.tor_nonzero, v.cotor_nonzero);
  return os.str();
}

inline std::string render_text(const QuotientAnalysis& q) {
  std::ostringstream os;
  os << "type " << q.type.to_string();
  if (q.reduced_by > 1) os << " (reduced by gcd " << q.reduced_by << ")";
  os << "  canonical " << q.canonical.to_string() << "\n";
  os << "reflexive " << q.p << "-forms generated by:";
  for (std::size_t i = 0; i < q.generators.size(); ++i) os << (i ? ", " : " ") << form_string(q.generators[i]);
  os << "\n";
  const auto& f = q.freeness;
  std::string binom = "C(" + std::to_string(q.type.n()) + "," + std::to_string(q.p) + ")";
  os << "free: " << (f.free ? "yes (" + std::to_string(f.generator_count) + " = " + binom + ")"
                            : "no (" + std::to_string(f.generator_count) + " > " + binom + " = " +
                                  std::to_string(f.rank) + ")");
  os << "; terminal: " << detail::yes_no(q.terminal) << "; gorenstein: " << detail::yes_no(q.gorenstein)
     << "; isolated: " << detail::yes_no(q.isolated) << "\n";
  return os.str();
}

inline std::string render_text(int n, long r_max, const std::vector<ClassifiedType>& types) {
  std::ostringstream os;
  os << "dimension " << n << ", r <= " << r_max << ": " << types.size() << " types with free reflexive " << n - 1
     << "-forms\n";
  for (auto& c : types)
    os << "  " << c.type.to_string() << "  terminal: " << detail::yes_no(c.terminal)
       << "  isolated: " << detail::yes_no(c.isolated) << "  gorenstein: " << detail::yes_no(c.gorenstein)
       << "  generators: " << c.generator_count << "\n";
  return os.str();
}

}  // namespace sforms
