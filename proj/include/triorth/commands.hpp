#ifndef TRIORTH_COMMANDS_HPP
#define TRIORTH_COMMANDS_HPP

// The check / analyze / extend / enumerate commands. Each builds a report
// record, writes it in text or machine form, and returns the process exit code.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "triorth/codes.hpp"
#include "triorth/errors.hpp"
#include "triorth/matrix_io.hpp"
#include "triorth/poset.hpp"
#include "triorth/quantum.hpp"
#include "triorth/report.hpp"
#include "triorth/triortho.hpp"

namespace triorth::cli {

enum ExitCode : int { exit_ok = 0, exit_negative = 1, exit_input_error = 2, exit_budget = 3 };

enum class OutputFormat { text, machine };

struct Options {
  OutputFormat output = OutputFormat::text;
  std::uint64_t distance_budget = default_distance_budget;
  std::uint64_t search_limit = default_search_limit;
  bool exact_distance = false;
  // Enumeration-backed minimality in analyze is computed up to this length.
  std::size_t minimality_enumeration_limit = 6;
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join(const std::vector<std::string>& rows, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += sep;
    out += rows[i];
  }
  return out;
}

inline std::string describe(const report::Witness& w) {
  std::string s = w.kind + " (rows";
  for (auto r : w.rows) s += " " + std::to_string(r);
  return s + ")";
}

inline void print_error(std::ostream& out, const Options& opt, const std::string& message) {
  if (opt.output == OutputFormat::machine) {
    out << report::json{{"error", message}}.dump() << '\n';
  } else {
    out << "error: " << message << '\n';
  }
}

}  // namespace detail

// --- check ----------------------------------------------------------------

inline report::CheckReport check_report(const Matrix& m, const Options& opt) {
  report::CheckReport r;
  r.input = report::rows_of(m);
  r.n = m.cols();
  r.rows = m.rows();
  const auto w = find_violation(m);
  r.triorthogonal = !w.has_value();
  if (w) r.violation_witness = report::witness_of(*w);
  const auto code = LinearCode::from_generators(m);
  if (!code.is_zero()) {
    const auto d = decide_triorthogonal(code, opt.search_limit);
    if (std::holds_alternative<TriorthogonalForm>(d)) r.code_is_triorthogonal = true;
    if (std::holds_alternative<NotTriorthogonal>(d)) r.code_is_triorthogonal = false;
  }
  return r;
}

inline void print(std::ostream& out, const report::CheckReport& r) {
  out << "matrix: " << r.rows << " x " << r.n << '\n';
  out << "triorthogonal matrix: " << detail::yes_no(r.triorthogonal) << '\n';
  if (r.violation_witness) out << "violation: " << detail::describe(*r.violation_witness) << '\n';
  if (r.code_is_triorthogonal) {
    out << "code admits a triorthogonal generator: " << detail::yes_no(*r.code_is_triorthogonal) << '\n';
  }
}

inline int run_check(const std::string& path, const Options& opt, std::ostream& out) {
  Matrix m;
  try {
    m = read_matrix_file(path);
  } catch (const std::exception& e) {
    detail::print_error(out, opt, e.what());
    return exit_input_error;
  }
  const auto r = check_report(m, opt);
  if (opt.output == OutputFormat::machine) {
    out << report::to_machine(r) << '\n';
  } else {
    print(out, r);
  }
  return r.triorthogonal ? exit_ok : exit_negative;
}

// --- analyze --------------------------------------------------------------

/// Computed minimality of `t` inside the full poset of its length.
inline bool computed_minimality(const TriorthogonalForm& t, std::uint64_t search_limit) {
  const auto e = enumerate_triorthogonal(t.length(), search_limit);
  return is_minimal_in(t, e.nodes);
}

/// Throws DomainError for the zero code.
inline report::AnalysisReport analysis_report(const Matrix& m, const Options& opt) {
  report::AnalysisReport r;
  r.input = report::rows_of(m);
  const auto c = LinearCode::from_generators(m);
  if (c.is_zero()) throw DomainError("matrix generates the zero code");
  const auto h = hull(c);
  const auto sq = schur_square(c);
  const auto c_plus_dual = sum(c, dual(c));
  r.n = c.length();
  r.k = c.dimension();
  r.hull_dim = h.dimension();
  r.is_even = is_even(c);
  r.csst_verified = std::holds_alternative<CssTPair>(csst_check(c, h));
  r.square_in_sum = c_plus_dual.contains(sq);
  r.square_equals_sum = r.square_in_sum && sq == c_plus_dual;
  if (auto w = find_violation(m)) r.violation_witness = report::witness_of(*w);

  const auto decision = decide_triorthogonal(c, opt.search_limit);
  if (std::holds_alternative<SearchBudgetExceeded>(decision)) {
    r.budget_exceeded.push_back("is_triorthogonal");
    return r;
  }
  const auto* t = std::get_if<TriorthogonalForm>(&decision);
  r.is_triorthogonal = t != nullptr;
  if (!t) return r;

  r.triorthogonal_generator = report::generator_of(*t);
  try {
    r.quantum = tri_quantum_params(*t, opt.exact_distance, opt.distance_budget);
  } catch (const ResourceError&) {
    r.budget_exceeded.push_back("quantum");
  }
  r.maximal = is_maximal(*t);
  r.paper_minimal = paper_minimal_predicate(*t);
  if (t->length() <= opt.minimality_enumeration_limit) {
    try {
      r.computed_minimal = computed_minimality(*t, opt.search_limit);
    } catch (const ResourceError&) {
      r.budget_exceeded.push_back("computed_minimal");
    }
  }
  const auto counts = extension_counts(*t);
  r.extension_summary = report::ExtensionSummary{counts.odd, counts.even};
  r.all_ones_obstruction = obstruction_all_ones(*t);
  return r;
}

inline void print(std::ostream& out, const report::AnalysisReport& r) {
  out << "code: n = " << r.n << ", k = " << r.k << ", hull dimension = " << r.hull_dim << '\n';
  out << "even code: " << detail::yes_no(r.is_even) << '\n';
  if (r.violation_witness) {
    out << "input matrix is not triorthogonal: " << detail::describe(*r.violation_witness) << '\n';
  }
  out << "C^2 inside C + C^perp: " << detail::yes_no(r.square_in_sum)
      << (r.square_equals_sum ? " (equality holds)" : "") << '\n';
  out << "(C, hull(C)) is a CSS-T pair: " << detail::yes_no(r.csst_verified) << '\n';
  if (r.is_triorthogonal) {
    out << "triorthogonal code: " << detail::yes_no(*r.is_triorthogonal) << '\n';
  } else {
    out << "triorthogonal code: unknown (search limit exceeded)\n";
  }
  if (r.triorthogonal_generator) {
    out << "  G1 (odd rows):  " << detail::join(r.triorthogonal_generator->g1) << '\n';
    out << "  G0 (even rows): " << detail::join(r.triorthogonal_generator->g0) << '\n';
  }
  if (r.quantum) {
    out << "quantum triorthogonal code: " << to_string(*r.quantum) << '\n';
    if (r.quantum->d_exact) out << "  distance of C + C^perp: " << *r.quantum->d_exact << '\n';
  }
  if (r.maximal) out << "maximal: " << detail::yes_no(*r.maximal) << '\n';
  if (r.paper_minimal) out << "one-dimensional even: " << detail::yes_no(*r.paper_minimal) << '\n';
  if (r.computed_minimal) out << "minimal in the enumerated poset: " << detail::yes_no(*r.computed_minimal) << '\n';
  if (r.extension_summary) {
    out << "extension candidates: " << r.extension_summary->odd_count << " odd, " << r.extension_summary->even_count
        << " even\n";
  }
  if (r.all_ones_obstruction) out << "all-ones vector in C^2: " << detail::yes_no(*r.all_ones_obstruction) << '\n';
  if (!r.budget_exceeded.empty()) out << "budget exceeded: " << detail::join(r.budget_exceeded, ", ") << '\n';
}

inline int run_analyze(const std::string& path, const Options& opt, std::ostream& out) {
  report::AnalysisReport r;
  try {
    r = analysis_report(read_matrix_file(path), opt);
  } catch (const ParseError& e) {
    detail::print_error(out, opt, e.what());
    return exit_input_error;
  } catch (const IoError& e) {
    detail::print_error(out, opt, e.what());
    return exit_input_error;
  } catch (const DomainError& e) {
    detail::print_error(out, opt, e.what());
    return exit_input_error;
  }
  if (opt.output == OutputFormat::machine) {
    out << report::to_machine(r) << '\n';
  } else {
    print(out, r);
  }
  if (!r.budget_exceeded.empty()) return exit_budget;
  return r.is_triorthogonal.value_or(false) ? exit_ok : exit_negative;
}

// --- extend ---------------------------------------------------------------

inline report::ExtensionStep step_of(const TriorthogonalForm& t, const std::optional<Vector>& added,
                                     const Options& opt) {
  report::ExtensionStep s;
  if (added) {
    s.added = added->to_string();
    s.parity = added->parity() ? "odd" : "even";
  }
  s.generator = report::generator_of(t);
  s.hull_dim = t.k0();
  s.quantum = tri_quantum_params(t, opt.exact_distance, opt.distance_budget);
  s.maximal = is_maximal(t);
  return s;
}

inline void print(std::ostream& out, const report::ExtensionReport& r) {
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& s = r.steps[i];
    out << "step " << i << ": ";
    if (s.added) {
      out << "added " << *s.added << " (" << *s.parity << ")";
    } else {
      out << "start";
    }
    out << ", hull dimension " << s.hull_dim;
    if (s.quantum) out << ", " << to_string(*s.quantum);
    if (s.maximal) out << ", maximal";
    out << '\n';
    out << "  G1: " << detail::join(s.generator.g1) << '\n';
    out << "  G0: " << detail::join(s.generator.g0) << '\n';
  }
}

/// Either `vector` is set (one step) or `automatic` is true (saturate).
inline int run_extend(const std::string& path, const std::optional<std::string>& vector, bool automatic,
                      const Options& opt, std::ostream& out) {
  Matrix m;
  std::optional<Vector> v;
  try {
    m = read_matrix_file(path);
    if (vector) {
      v = parse_vector(*vector);
      if (v->size() != m.cols()) {
        throw ParseError(0, "vector length " + std::to_string(v->size()) + " does not match code length " +
                                std::to_string(m.cols()));
      }
    }
  } catch (const std::exception& e) {
    detail::print_error(out, opt, e.what());
    return exit_input_error;
  }
  if (vector.has_value() == automatic) {
    detail::print_error(out, opt, "extend needs exactly one of --vector or --auto");
    return exit_input_error;
  }
  const auto c = LinearCode::from_generators(m);
  if (c.is_zero()) {
    detail::print_error(out, opt, "matrix generates the zero code");
    return exit_input_error;
  }
  auto decision = decide_triorthogonal(c, opt.search_limit);
  if (std::holds_alternative<SearchBudgetExceeded>(decision)) {
    detail::print_error(out, opt, "search limit exceeded while deciding triorthogonality");
    return exit_budget;
  }
  if (!std::holds_alternative<TriorthogonalForm>(decision)) {
    detail::print_error(out, opt, "input code is not triorthogonal");
    return exit_negative;
  }
  const auto& start = std::get<TriorthogonalForm>(decision);

  report::ExtensionReport r;
  try {
    if (v) {
      r.mode = "vector";
      const auto next = extend(start, *v);
      r.steps.push_back(step_of(start, std::nullopt, opt));
      r.steps.push_back(step_of(next, v, opt));
    } else {
      r.mode = "auto";
      const auto chain = saturate(start);
      r.steps.push_back(step_of(chain.front(), std::nullopt, opt));
      for (std::size_t i = 1; i < chain.size(); ++i) {
        // The added vector is the first row of whichever block grew.
        const bool odd = chain[i].k1() > chain[i - 1].k1();
        const Vector& added = odd ? chain[i].g1().row(0) : chain[i].g0().row(0);
        r.steps.push_back(step_of(chain[i], added, opt));
      }
    }
  } catch (const PreconditionError& e) {
    detail::print_error(out, opt, e.what());
    return exit_negative;
  } catch (const ResourceError& e) {
    detail::print_error(out, opt, e.what());
    return exit_budget;
  }
  if (opt.output == OutputFormat::machine) {
    out << report::to_machine(r) << '\n';
  } else {
    print(out, r);
  }
  return exit_ok;
}

// --- enumerate ------------------------------------------------------------

enum class EnumerationMode { census, full };

struct EnumerationResult {
  report::EnumerationSummary summary;
  std::vector<report::CodeRecord> records;
};

inline EnumerationResult enumeration_result(std::size_t n, const Options& opt) {
  const auto e = enumerate_triorthogonal(n, opt.search_limit);
  EnumerationResult out;
  auto& s = out.summary;
  s.n = n;
  s.subspaces_visited = e.subspaces_visited;
  s.triorthogonal_count = e.nodes.size();
  s.maximal_characterization_holds = true;
  s.one_dim_even_codes_minimal = true;

  const PosetOrder order(e.nodes);
  const auto minimal_flags = order.minimal();
  const auto maximal_flags = order.maximal();
  std::map<std::tuple<std::size_t, std::size_t, bool, bool>, std::uint64_t> census;
  for (std::size_t i = 0; i < e.nodes.size(); ++i) {
    const auto& node = e.nodes[i];
    const bool maximal = is_maximal(node.form);
    const bool poset_maximal = maximal_flags[i];
    const bool minimal = minimal_flags[i];
    const bool paper_minimal = paper_minimal_predicate(node.form);
    if (maximal != poset_maximal) s.maximal_characterization_holds = false;
    if (paper_minimal && !minimal) s.one_dim_even_codes_minimal = false;
    if (minimal) ++s.computed_minimal_count;
    if (minimal != paper_minimal) s.minimal_discrepancies.push_back(report::rows_of(node.code().basis()));
    ++census[{node.code_dim, node.hull_dim, maximal, minimal}];
    out.records.push_back({report::rows_of(node.code().basis()), node.code_dim, node.hull_dim,
                           report::generator_of(node.form), maximal, minimal, paper_minimal});
  }
  for (const auto& [key, count] : census) {
    const auto& [dim, hull_dim, maximal, minimal] = key;
    s.census.push_back({dim, hull_dim, maximal, minimal, count});
  }
  return out;
}

inline void print(std::ostream& out, const report::EnumerationSummary& s) {
  out << "length " << s.n << ": " << s.subspaces_visited << " subspaces visited, " << s.triorthogonal_count
      << " triorthogonal codes\n";
  out << "dim  hull  maximal  minimal  count\n";
  for (const auto& c : s.census) {
    out << c.dim << "    " << c.hull_dim << "     " << (c.maximal ? "yes" : "no ") << "      "
        << (c.minimal ? "yes" : "no ") << "      " << c.count << '\n';
  }
  out << "maximal <=> (C^2)^perp = hull(C): " << (s.maximal_characterization_holds ? "holds" : "FAILS") << '\n';
  out << "one-dimensional even codes are minimal: " << (s.one_dim_even_codes_minimal ? "holds" : "FAILS") << '\n';
  out << "computed minimal elements: " << s.computed_minimal_count << '\n';
  if (!s.minimal_discrepancies.empty()) {
    out << "minimal but not one-dimensional even (flagged): " << s.minimal_discrepancies.size() << '\n';
    for (const auto& b : s.minimal_discrepancies) out << "  span{" << detail::join(b, ", ") << "}\n";
  }
}

inline void print(std::ostream& out, const report::CodeRecord& r) {
  out << "span{" << detail::join(r.basis, ", ") << "}  dim " << r.dim << "  hull " << r.hull_dim
      << (r.maximal ? "  maximal" : "") << (r.computed_minimal ? "  minimal" : "")
      << (r.paper_minimal ? "  one-dim-even" : "") << '\n';
}

inline int run_enumerate(std::size_t n, EnumerationMode mode, const Options& opt, std::ostream& out) {
  if (n < 1 || n > max_enumeration_length) {
    detail::print_error(out, opt,
                        "--n must lie in [1, " + std::to_string(max_enumeration_length) + "], got " + std::to_string(n));
    return exit_input_error;
  }
  EnumerationResult r;
  try {
    r = enumeration_result(n, opt);
  } catch (const ResourceError& e) {
    detail::print_error(out, opt, e.what());
    return exit_budget;
  }
  if (mode == EnumerationMode::full) {
    for (const auto& rec : r.records) {
      if (opt.output == OutputFormat::machine) {
        out << report::to_machine(rec) << '\n';
      } else {
        print(out, rec);
      }
    }
  }
  if (opt.output == OutputFormat::machine) {
    out << report::to_machine(r.summary) << '\n';
  } else {
    print(out, r.summary);
  }
  return exit_ok;
}

}  // namespace triorth::cli

#endif  // TRIORTH_COMMANDS_HPP
