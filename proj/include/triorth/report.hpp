#ifndef TRIORTH_REPORT_HPP
#define TRIORTH_REPORT_HPP

// Report records emitted by the command-line tool and their JSON encoding.
// Optional fields are omitted from the JSON when absent, and decoding restores
// exactly the same record.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "triorth/gf2.hpp"
#include "triorth/quantum.hpp"
#include "triorth/triortho.hpp"

namespace triorth::report {

using json = nlohmann::json;

struct Generator {
  std::vector<std::string> g1;
  std::vector<std::string> g0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct Witness {
  std::string kind;
  std::vector<std::size_t> rows;  // 1-based
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ExtensionSummary {
  std::uint64_t odd_count = 0;
  std::uint64_t even_count = 0;
  friend bool operator==(const ExtensionSummary&, const ExtensionSummary&) = default;
};

struct AnalysisReport {
  std::vector<std::string> input;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t hull_dim = 0;
  bool is_even = false;
  std::optional<bool> is_triorthogonal;  // absent if the search limit was hit
  std::optional<Generator> triorthogonal_generator;
  bool csst_verified = false;
  bool square_in_sum = false;
  bool square_equals_sum = false;
  std::optional<QuantumParams> quantum;
  std::optional<bool> maximal;
  std::optional<bool> paper_minimal;
  std::optional<bool> computed_minimal;
  std::optional<ExtensionSummary> extension_summary;
  std::optional<bool> all_ones_obstruction;
  std::optional<Witness> violation_witness;
  std::vector<std::string> budget_exceeded;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct CheckReport {
  std::vector<std::string> input;
  std::size_t n = 0;
  std::size_t rows = 0;
  bool triorthogonal = false;
  std::optional<Witness> violation_witness;
  std::optional<bool> code_is_triorthogonal;
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct ExtensionStep {
  std::optional<std::string> added;
  std::optional<std::string> parity;
  Generator generator;
  std::size_t hull_dim = 0;
  std::optional<QuantumParams> quantum;
  bool maximal = false;
  friend bool operator==(const ExtensionStep&, const ExtensionStep&) = default;
};

struct ExtensionReport {
  std::string mode;
  std::vector<ExtensionStep> steps;
  friend bool operator==(const ExtensionReport&, const ExtensionReport&) = default;
};

struct CensusEntry {
  std::size_t dim = 0;
  std::size_t hull_dim = 0;
  bool maximal = false;
  bool minimal = false;
  std::uint64_t count = 0;
  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

struct CodeRecord {
  std::vector<std::string> basis;
  std::size_t dim = 0;
  std::size_t hull_dim = 0;
  Generator generator;
  bool maximal = false;
  bool computed_minimal = false;
  bool paper_minimal = false;
  friend bool operator==(const CodeRecord&, const CodeRecord&) = default;
};

struct EnumerationSummary {
  std::size_t n = 0;
  std::uint64_t subspaces_visited = 0;
  std::uint64_t triorthogonal_count = 0;
  std::vector<CensusEntry> census;
  bool maximal_characterization_holds = false;
  bool one_dim_even_codes_minimal = false;
  std::uint64_t computed_minimal_count = 0;
  std::vector<std::vector<std::string>> minimal_discrepancies;  // bases of codes where the predicates disagree
  friend bool operator==(const EnumerationSummary&, const EnumerationSummary&) = default;
};

inline std::vector<std::string> rows_of(const Matrix& m) {
  std::vector<std::string> out;
  for (const auto& r : m) out.push_back(r.to_string());
  return out;
}

inline Generator generator_of(const TriorthogonalForm& t) { return {rows_of(t.g1()), rows_of(t.g0())}; }

inline Witness witness_of(const ViolationWitness& w) {
  Witness out{to_string(w.kind), {}};
  for (auto i : w.rows) out.rows.push_back(i + 1);
  return out;
}

inline BoundKind bound_kind_from_string(const std::string& s) {
  if (s == "css-generic") return BoundKind::css_generic;
  if (s == "csst") return BoundKind::csst;
  if (s == "triorthogonal") return BoundKind::triorthogonal;
  throw std::invalid_argument("unknown bound kind '" + s + "'");
}

// --- JSON -------------------------------------------------------------------

namespace detail {

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get(const json& j, const char* key, std::optional<T>& v) {
  if (auto it = j.find(key); it != j.end()) {
    v = it->template get<T>();
  } else {
    v.reset();
  }
}

}  // namespace detail

inline void to_json(json& j, const Generator& g) { j = json{{"g1", g.g1}, {"g0", g.g0}}; }
inline void from_json(const json& j, Generator& g) {
  j.at("g1").get_to(g.g1);
  j.at("g0").get_to(g.g0);
}

inline void to_json(json& j, const Witness& w) { j = json{{"kind", w.kind}, {"rows", w.rows}}; }
inline void from_json(const json& j, Witness& w) {
  j.at("kind").get_to(w.kind);
  j.at("rows").get_to(w.rows);
}

inline void to_json(json& j, const ExtensionSummary& e) {
  j = json{{"odd_count", e.odd_count}, {"even_count", e.even_count}};
}
inline void from_json(const json& j, ExtensionSummary& e) {
  j.at("odd_count").get_to(e.odd_count);
  j.at("even_count").get_to(e.even_count);
}

}  // namespace triorth::report

namespace triorth {

inline void to_json(nlohmann::json& j, const QuantumParams& q) {
  j = nlohmann::json{{"n", q.n}, {"k", q.k}, {"d_bound", q.d_bound}, {"bound_kind", to_string(q.bound_kind)}};
  if (q.d_exact) j["d_exact"] = *q.d_exact;
}

inline void from_json(const nlohmann::json& j, QuantumParams& q) {
  j.at("n").get_to(q.n);
  j.at("k").get_to(q.k);
  j.at("d_bound").get_to(q.d_bound);
  q.bound_kind = report::bound_kind_from_string(j.at("bound_kind").get<std::string>());
  report::detail::get(j, "d_exact", q.d_exact);
}

}  // namespace triorth

namespace triorth::report {

inline void to_json(json& j, const AnalysisReport& r) {
  j = json{{"input", r.input},
           {"n", r.n},
           {"k", r.k},
           {"hull_dim", r.hull_dim},
           {"is_even", r.is_even},
           {"csst_verified", r.csst_verified},
           {"square_in_sum", r.square_in_sum},
           {"square_equals_sum", r.square_equals_sum},
           {"budget_exceeded", r.budget_exceeded}};
  detail::put(j, "is_triorthogonal", r.is_triorthogonal);
  detail::put(j, "triorthogonal_generator", r.triorthogonal_generator);
  detail::put(j, "quantum", r.quantum);
  detail::put(j, "maximal", r.maximal);
  detail::put(j, "paper_minimal", r.paper_minimal);
  detail::put(j, "computed_minimal", r.computed_minimal);
  detail::put(j, "extension_summary", r.extension_summary);
  detail::put(j, "all_ones_obstruction", r.all_ones_obstruction);
  detail::put(j, "violation_witness", r.violation_witness);
}

inline void from_json(const json& j, AnalysisReport& r) {
  j.at("input").get_to(r.input);
  j.at("n").get_to(r.n);
  j.at("k").get_to(r.k);
  j.at("hull_dim").get_to(r.hull_dim);
  j.at("is_even").get_to(r.is_even);
  j.at("csst_verified").get_to(r.csst_verified);
  j.at("square_in_sum").get_to(r.square_in_sum);
  j.at("square_equals_sum").get_to(r.square_equals_sum);
  j.at("budget_exceeded").get_to(r.budget_exceeded);
  detail::get(j, "is_triorthogonal", r.is_triorthogonal);
  detail::get(j, "triorthogonal_generator", r.triorthogonal_generator);
  detail::get(j, "quantum", r.quantum);
  detail::get(j, "maximal", r.maximal);
  detail::get(j, "paper_minimal", r.paper_minimal);
  detail::get(j, "computed_minimal", r.computed_minimal);
  detail::get(j, "extension_summary", r.extension_summary);
  detail::get(j, "all_ones_obstruction", r.all_ones_obstruction);
  detail::get(j, "violation_witness", r.violation_witness);
}

inline void to_json(json& j, const CheckReport& r) {
  j = json{{"input", r.input}, {"n", r.n}, {"rows", r.rows}, {"triorthogonal", r.triorthogonal}};
  detail::put(j, "violation_witness", r.violation_witness);
  detail::put(j, "code_is_triorthogonal", r.code_is_triorthogonal);
}

inline void from_json(const json& j, CheckReport& r) {
  j.at("input").get_to(r.input);
  j.at("n").get_to(r.n);
  j.at("rows").get_to(r.rows);
  j.at("triorthogonal").get_to(r.triorthogonal);
  detail::get(j, "violation_witness", r.violation_witness);
  detail::get(j, "code_is_triorthogonal", r.code_is_triorthogonal);
}

inline void to_json(json& j, const ExtensionStep& s) {
  j = json{{"generator", s.generator}, {"hull_dim", s.hull_dim}, {"maximal", s.maximal}};
  detail::put(j, "added", s.added);
  detail::put(j, "parity", s.parity);
  detail::put(j, "quantum", s.quantum);
}

inline void from_json(const json& j, ExtensionStep& s) {
  j.at("generator").get_to(s.generator);
  j.at("hull_dim").get_to(s.hull_dim);
  j.at("maximal").get_to(s.maximal);
  detail::get(j, "added", s.added);
  detail::get(j, "parity", s.parity);
  detail::get(j, "quantum", s.quantum);
}

inline void to_json(json& j, const ExtensionReport& r) { j = json{{"mode", r.mode}, {"steps", r.steps}}; }
inline void from_json(const json& j, ExtensionReport& r) {
  j.at("mode").get_to(r.mode);
  j.at("steps").get_to(r.steps);
}

inline void to_json(json& j, const CensusEntry& e) {
  j = json{{"dim", e.dim}, {"hull_dim", e.hull_dim}, {"maximal", e.maximal}, {"minimal", e.minimal}, {"count", e.count}};
}
inline void from_json(const json& j, CensusEntry& e) {
  j.at("dim").get_to(e.dim);
  j.at("hull_dim").get_to(e.hull_dim);
  j.at("maximal").get_to(e.maximal);
  j.at("minimal").get_to(e.minimal);
  j.at("count").get_to(e.count);
}

inline void to_json(json& j, const CodeRecord& r) {
  j = json{{"basis", r.basis},       {"dim", r.dim},
           {"hull_dim", r.hull_dim}, {"generator", r.generator},
           {"maximal", r.maximal},   {"computed_minimal", r.computed_minimal},
           {"paper_minimal", r.paper_minimal}};
}
inline void from_json(const json& j, CodeRecord& r) {
  j.at("basis").get_to(r.basis);
  j.at("dim").get_to(r.dim);
  j.at("hull_dim").get_to(r.hull_dim);
  j.at("generator").get_to(r.generator);
  j.at("maximal").get_to(r.maximal);
  j.at("computed_minimal").get_to(r.computed_minimal);
  j.at("paper_minimal").get_to(r.paper_minimal);
}

inline void to_json(json& j, const EnumerationSummary& s) {
  j = json{{"n", s.n},
           {"subspaces_visited", s.subspaces_visited},
           {"triorthogonal_count", s.triorthogonal_count},
           {"census", s.census},
           {"maximal_characterization_holds", s.maximal_characterization_holds},
           {"one_dim_even_codes_minimal", s.one_dim_even_codes_minimal},
           {"computed_minimal_count", s.computed_minimal_count},
           {"minimal_discrepancies", s.minimal_discrepancies}};
}
inline void from_json(const json& j, EnumerationSummary& s) {
  j.at("n").get_to(s.n);
  j.at("subspaces_visited").get_to(s.subspaces_visited);
  j.at("triorthogonal_count").get_to(s.triorthogonal_count);
  j.at("census").get_to(s.census);
  j.at("maximal_characterization_holds").get_to(s.maximal_characterization_holds);
  j.at("one_dim_even_codes_minimal").get_to(s.one_dim_even_codes_minimal);
  j.at("computed_minimal_count").get_to(s.computed_minimal_count);
  j.at("minimal_discrepancies").get_to(s.minimal_discrepancies);
}

/// Serializes to the single-line machine format.
template <typename Report>
std::string to_machine(const Report& r) {
  return json(r).dump();
}

template <typename Report>
Report from_machine(const std::string& text) {
  return json::parse(text).get<Report>();
}

}  // namespace triorth::report

#endif  // TRIORTH_REPORT_HPP
