// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <data-dir> <cli-binary>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "triorth/commands.hpp"
#include "triorth/oracle.hpp"
#include "triorth/report.hpp"

using namespace triorth;
using namespace triorth::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  double limit_ms = 0;  // 0: no runtime bound
  double elapsed_ms = 0;
};

/// Accumulates failures with a short reason; the first few are kept for the report.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) reasons_ += (reasons_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string reasons() const { return reasons_ + (failures_ > 3 ? " (+" + std::to_string(failures_ - 3) + " more)" : ""); }

 private:
  std::size_t failures_ = 0;
  std::string reasons_;
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Every TriorthogonalForm produced by the other criteria, checked by criterion 3.
std::vector<TriorthogonalForm> produced;

void keep(const TriorthogonalForm& t) { produced.push_back(t); }

std::vector<PosetNode> enumerate(std::size_t n) {
  auto nodes = enumerate_triorthogonal(n).nodes;
  for (const auto& node : nodes) keep(node.form);
  return nodes;
}

Matrix block_identity(std::size_t k1, std::size_t k0) {
  Matrix g = Matrix::zeros(k1 + k0, k1 + k0);
  for (std::size_t i = 0; i < k1; ++i) g.set(i, i);
  return g;
}

// --- criteria --------------------------------------------------------------

Outcome counterexample() {
  Check ck;
  const auto start = std::chrono::steady_clock::now();
  const auto c = LinearCode::from_generators(Matrix::from_strings({"11000", "01100", "00011"}));
  const auto d = dual(c);
  const auto sq = schur_square(c);
  const auto s = sum(c, d);
  const auto h = hull(c);
  const auto decision = decide_triorthogonal(c);
  const bool even = is_even(c);
  const double elapsed = ms_since(start);
  ck.expect(d == span({"11100", "00011"}), "dual");
  ck.expect(sq == span({"10000", "01000", "00100", "00011"}), "schur square");
  ck.expect(sq == s, "square = C + dual");
  ck.expect(h == span({"00011"}), "hull");
  ck.expect(std::holds_alternative<NotTriorthogonal>(decision), "decision");
  ck.expect(even, "even");
  return {ck.ok(), ck.ok() ? "all six facts hold" : ck.reasons(), 1.0, elapsed};
}

Outcome square_condition(double& small_ms) {
  Check ck;
  std::size_t codes = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& node : enumerate(n)) {
      ++codes;
      const auto& c = node.code();
      ck.expect(sum(c, dual(c)).contains(schur_square(c)), "square not inside C + dual");
      ck.expect(std::holds_alternative<CssTPair>(csst_check(c, hull(c))), "CSS-T check failed");
    }
    if (n == 5) small_ms = ms_since(start);
  }
  const double elapsed = ms_since(start);
  return {ck.ok() && small_ms < 5000,
          ck.ok() ? std::to_string(codes) + " codes, n = 2..6; n <= 5 took " + std::to_string(small_ms) + " ms (limit 5000)"
                  : ck.reasons(),
          0, elapsed};
}

Outcome form_identities() {
  Check ck;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& t : produced) {
    const auto& c = t.code();
    ck.expect(gram(t.stacked()) == block_identity(t.k1(), t.k0()), "Gram block identity");
    ck.expect(LinearCode::from_generators(t.g0()) == hull(c), "Rowsp(G0) = hull");
    ck.expect(hull(c) == relative_hull(c, schur_square(c)), "hull = relative hull w.r.t. square");
  }
  return {ck.ok(), ck.ok() ? std::to_string(produced.size()) + " forms checked" : ck.reasons(), 0, ms_since(start)};
}

Outcome invertible_triorthogonal() {
  Check ck;
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t gl[] = {0, 0, 6, 168, 20160};
  const std::uint64_t fact[] = {0, 0, 2, 6, 24};
  std::string counts;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::uint64_t nonsingular = 0, triorthogonal = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      Matrix m(n);
      for (std::size_t i = 0; i < n; ++i) m.push_back(Vector::from_mask(n, (bits >> (i * n)) & ((1U << n) - 1)));
      if (!is_nonsingular(m)) continue;
      ++nonsingular;
      const bool tri = is_triorthogonal_matrix(m);
      triorthogonal += tri;
      ck.expect(tri == is_permutation(m), "triorthogonal != permutation at n = " + std::to_string(n));
    }
    ck.expect(nonsingular == gl[n], "|GL(" + std::to_string(n) + ")|");
    ck.expect(triorthogonal == fact[n], "permutation count at n = " + std::to_string(n));
    counts += (counts.empty() ? "" : ", ") + std::to_string(triorthogonal) + "/" + std::to_string(nonsingular);
  }
  return {ck.ok(), ck.ok() ? "triorthogonal/nonsingular: " + counts : ck.reasons(), 10000, ms_since(start)};
}

Outcome block_transforms() {
  Check ck;
  std::mt19937_64 rng(20261015);
  const auto start = std::chrono::steady_clock::now();
  // (a) block transforms, with their rows shuffled, always give triorthogonal matrices
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = random_triorthogonal(1 + rng() % 10, rng);
    keep(t);
    const std::size_t k1 = t.k1(), k0 = t.k0(), k = k1 + k0;
    const auto p = random_permutation(k1, rng);
    const auto m2 = random_matrix(k1, k0, rng);
    const auto m4 = random_nonsingular(k0, rng);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < k1; ++i) {
      Vector r(k);
      for (std::size_t j = 0; j < k1; ++j) r.set(j, p.get(i, j));
      for (std::size_t j = 0; j < k0; ++j) r.set(k1 + j, m2.get(i, j));
      rows.push_back(r);
    }
    for (std::size_t i = 0; i < k0; ++i) {
      Vector r(k);
      for (std::size_t j = 0; j < k0; ++j) r.set(k1 + j, m4.get(i, j));
      rows.push_back(r);
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    const Matrix m(k, rows);
    ck.expect(is_triorthogonal_matrix(m * t.stacked()), "block transform broke triorthogonality");
    ck.expect(std::holds_alternative<BlockTransform>(check_transform(t, m)), "block transform not classified");
  }
  // (b) random nonsingular M: triorthogonal M G  <=>  block-admissible
  std::size_t positive = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = random_triorthogonal(1 + rng() % 10, rng);
    const auto m = random_nonsingular(t.k1() + t.k0(), rng);
    const bool direct = is_triorthogonal_matrix(m * t.stacked());
    const bool block = std::holds_alternative<BlockTransform>(check_transform(t, m));
    ck.expect(direct == block, "classification disagrees with direct check");
    positive += direct;
  }
  return {ck.ok(), ck.ok() ? "1000 block transforms ok; 1000 random transforms agree (" + std::to_string(positive) +
                                 " admissible)"
                           : ck.reasons(),
          0, ms_since(start)};
}

Outcome extension_effects() {
  Check ck;
  std::size_t odd = 0, even = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& node : enumerate(n)) {
      const auto before = tri_quantum_params(node.form);
      for (const auto& cand : extension_candidates(node.form)) {
        const auto ext = extend(node.form, cand.vector);
        keep(ext);
        ck.expect(is_triorthogonal_matrix(ext.stacked()), "extension not triorthogonal");
        ck.expect(std::holds_alternative<TriorthogonalForm>(decide_triorthogonal(ext.code())), "decision disagrees");
        const auto after = tri_quantum_params(ext);
        const auto h = hull(ext.code());
        if (cand.odd) {
          ++odd;
          ck.expect(h == node.hull, "odd extension changed hull");
          ck.expect(after.k == before.k + 1, "odd extension did not raise k");
          ck.expect(after.d_bound == before.d_bound, "odd extension changed d_bound");
        } else {
          ++even;
          ck.expect(h.dimension() == node.hull_dim + 1, "even extension did not grow hull");
          ck.expect(before.d_bound <= after.d_bound, "even extension lowered d_bound");
        }
      }
    }
  }
  return {ck.ok(), ck.ok() ? std::to_string(odd) + " odd and " + std::to_string(even) + " even extensions" : ck.reasons(),
          0, ms_since(start)};
}

Outcome poset_extremes() {
  Check ck;
  std::string minimal_report;
  std::size_t discrepancies = 0;
  std::uint64_t visited5 = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto e = enumerate_triorthogonal(n);
    if (n == 5) visited5 = e.subspaces_visited;
    const PosetOrder order(e.nodes);
    const auto maximal = order.maximal();
    const auto minimal = order.minimal();
    std::size_t min_count = 0;
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
      const auto& t = e.nodes[i].form;
      ck.expect(maximal[i] == is_maximal(t), "maximal set differs at n = " + std::to_string(n));
      if (paper_minimal_predicate(t)) ck.expect(minimal[i], "one-dimensional even code not minimal");
      min_count += minimal[i];
      if (minimal[i] != paper_minimal_predicate(t)) ++discrepancies;
    }
    minimal_report += (minimal_report.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
                      std::to_string(min_count) + " minimal";
  }
  ck.expect(visited5 == 374, "n = 5 visited " + std::to_string(visited5) + " subspaces");
  return {ck.ok(),
          ck.ok() ? minimal_report + "; " + std::to_string(discrepancies) +
                        " flagged discrepancies (one-dimensional odd codes)"
                  : ck.reasons(),
          5000, ms_since(start)};
}

Outcome all_ones_obstruction() {
  Check ck;
  std::size_t obstructed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& node : enumerate(n)) {
      if (!obstruction_all_ones(node.form)) continue;
      ++obstructed;
      for (const auto& cand : extension_candidates(node.form)) ck.expect(!cand.odd, "odd candidate under obstruction");
      ck.expect(extension_counts(node.form).odd == 0, "odd count under obstruction");
    }
  }
  return {ck.ok(), ck.ok() ? std::to_string(obstructed) + " obstructed codes, all candidates even" : ck.reasons(), 0,
          ms_since(start)};
}

Outcome oracles() {
  Check ck;
  std::mt19937_64 rng(9);
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto c = random_code(n, 1 + rng() % std::min<std::size_t>(n, 8), rng);
    ck.expect(oracle::brute_codewords(dual(c)) == oracle::brute_dual(c), "dual");
    ck.expect(oracle::brute_codewords(schur_square(c)) == oracle::brute_schur_square(c), "schur square");
    if (!c.is_zero()) ck.expect(min_distance(c) == oracle::brute_min_distance(c), "min distance");
  }
  std::size_t codes = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& c : all_codes(n, 4)) {
      ++codes;
      const bool fast = std::holds_alternative<TriorthogonalForm>(decide_triorthogonal(c));
      ck.expect(fast == oracle::brute_triorthogonal(c), "decision vs brute force");
    }
  }
  return {ck.ok(), ck.ok() ? "200 random codes; " + std::to_string(codes) + " small codes decided" : ck.reasons(), 60000,
          ms_since(start)};
}

Outcome enumeration_integrity() {
  Check ck;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n : {4, 5, 6}) {
    const auto visited = enumerate_triorthogonal(n).subspaces_visited;
    ck.expect(visited == gaussian_binomial_total(n), "visited count at n = " + std::to_string(n));
  }
  ck.expect(gaussian_binomial_total(4) == 67 && gaussian_binomial_total(5) == 374 && gaussian_binomial_total(6) == 2825,
            "Gaussian binomial sums");
  ck.expect(enumerate(2).size() == 4, "census n = 2");
  ck.expect(enumerate(3).size() == 14, "census n = 3");
  return {ck.ok(), ck.ok() ? "67, 374, 2825 subspaces; census 4 and 14" : ck.reasons(), 0, ms_since(start)};
}

// --- CLI contract ------------------------------------------------------------

int run_binary(const std::string& cli, const std::string& args) {
  const int status = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string last_line(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line)) {
    if (!line.empty()) last = line;
  }
  return last;
}

template <typename Report>
bool round_trips(const std::string& line) {
  const auto r = report::from_machine<Report>(line);
  return report::to_machine(r) == line && report::from_machine<Report>(report::to_machine(r)) == r;
}

Outcome cli_contract(const std::string& data, const std::string& cli) {
  Check ck;
  const auto start = std::chrono::steady_clock::now();
  const std::string counterexample_file = data + "/even_counterexample.txt";
  const std::string seven = data + "/two_odd_rows.txt";
  const fs::path one_row = fs::temp_directory_path() / "triorth_acceptance_one_row.txt";
  std::ofstream(one_row) << "1110000\n";

  cli::Options machine;
  machine.output = cli::OutputFormat::machine;

  // check
  {
    std::ostringstream out;
    ck.expect(cli::run_check(counterexample_file, machine, out) == cli::exit_negative, "check counterexample exit");
    const auto line = last_line(out.str());
    const auto r = report::from_machine<report::CheckReport>(line);
    ck.expect(r.violation_witness && r.violation_witness->kind == "odd-pair" &&
                  r.violation_witness->rows == std::vector<std::size_t>{1, 2},
              "check counterexample witness");
    ck.expect(r.code_is_triorthogonal == false, "check counterexample code-level verdict");
    ck.expect(round_trips<report::CheckReport>(line), "check round trip");
    std::ostringstream ok;
    ck.expect(cli::run_check(seven, machine, ok) == cli::exit_ok, "check 7-column exit");
  }
  // analyze
  {
    std::ostringstream out;
    ck.expect(cli::run_analyze(counterexample_file, machine, out) == cli::exit_negative, "analyze counterexample exit");
    const auto line = last_line(out.str());
    const auto r = report::from_machine<report::AnalysisReport>(line);
    ck.expect(r.is_triorthogonal == false && r.square_equals_sum && r.is_even, "analyze counterexample report");
    ck.expect(round_trips<report::AnalysisReport>(line), "analyze round trip");

    std::ostringstream ok;
    ck.expect(cli::run_analyze(seven, machine, ok) == cli::exit_ok, "analyze 7-column exit");
    const auto line7 = last_line(ok.str());
    const auto r7 = report::from_machine<report::AnalysisReport>(line7);
    ck.expect(r7.is_triorthogonal == true && r7.quantum && to_string(*r7.quantum) == "[[7, 2, >= 1]]" &&
                  r7.maximal == false,
              "analyze 7-column report");
    ck.expect(round_trips<report::AnalysisReport>(line7), "analyze round trip (7-column)");
  }
  // extend
  {
    std::ostringstream out;
    ck.expect(cli::run_extend(one_row.string(), std::string("0001000"), false, machine, out) == cli::exit_ok,
              "extend --vector exit");
    const auto line = last_line(out.str());
    const auto r = report::from_machine<report::ExtensionReport>(line);
    ck.expect(r.steps.size() == 2 && to_string(*r.steps[0].quantum) == "[[7, 1, >= 1]]" &&
                  to_string(*r.steps[1].quantum) == "[[7, 2, >= 1]]",
              "extend --vector chain");
    ck.expect(round_trips<report::ExtensionReport>(line), "extend round trip");

    std::ostringstream a;
    ck.expect(cli::run_extend(seven, std::nullopt, true, machine, a) == cli::exit_ok, "extend --auto 7-column exit");
    const auto chain = report::from_machine<report::ExtensionReport>(last_line(a.str()));
    ck.expect(!chain.steps.empty() && chain.steps.back().maximal, "extend --auto ends maximal");
    std::ostringstream bad;
    ck.expect(cli::run_extend(counterexample_file, std::nullopt, true, machine, bad) == cli::exit_negative, "extend counterexample exit");
  }
  // enumerate
  {
    for (auto [n, expected] : {std::pair<std::size_t, std::uint64_t>{2, 4}, {3, 14}}) {
      std::ostringstream out;
      ck.expect(cli::run_enumerate(n, cli::EnumerationMode::census, machine, out) == cli::exit_ok, "enumerate exit");
      const auto line = last_line(out.str());
      ck.expect(report::from_machine<report::EnumerationSummary>(line).triorthogonal_count == expected,
                "enumerate census n = " + std::to_string(n));
      ck.expect(round_trips<report::EnumerationSummary>(line), "enumerate round trip");
    }
    std::ostringstream full;
    cli::run_enumerate(3, cli::EnumerationMode::full, machine, full);
    std::istringstream in(full.str());
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    ck.expect(lines.size() == 15, "full enumeration record count");
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
      ck.expect(round_trips<report::CodeRecord>(lines[i]), "code record round trip");
    }
  }
  // the installed binary: exit codes end to end
  ck.expect(run_binary(cli, "check " + counterexample_file) == 1, "binary check counterexample");
  ck.expect(run_binary(cli, "check " + seven) == 0, "binary check 7-column");
  ck.expect(run_binary(cli, "analyze " + counterexample_file) == 1, "binary analyze counterexample");
  ck.expect(run_binary(cli, "analyze " + seven) == 0, "binary analyze 7-column");
  ck.expect(run_binary(cli, "extend " + one_row.string() + " --vector 0001000") == 0, "binary extend --vector");
  ck.expect(run_binary(cli, "extend " + seven + " --auto") == 0, "binary extend --auto");
  ck.expect(run_binary(cli, "extend " + seven + " --vector 1000000") == 1, "binary extend inadmissible");
  ck.expect(run_binary(cli, "enumerate --n 3 --report census") == 0, "binary enumerate");
  ck.expect(run_binary(cli, "enumerate --n 8") == 2, "binary enumerate out of range");
  ck.expect(run_binary(cli, "check /nonexistent/file.txt") == 2, "binary unreadable path");

  // row-permutation invariance of check
  std::mt19937_64 rng(4);
  std::size_t permutations = 0;
  const auto t = normal_form(Matrix::from_strings({"1110000", "0001000", "0000110", "1100000"}));
  keep(t);
  auto rows = t.stacked().row_vectors();
  const fs::path shuffled = fs::temp_directory_path() / "triorth_acceptance_shuffled.txt";
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(rows.begin(), rows.end(), rng);
    std::ofstream(shuffled) << format_matrix(Matrix(t.length(), rows));
    std::ostringstream out;
    ck.expect(cli::run_check(shuffled.string(), {}, out) == cli::exit_ok, "permuted rows rejected");
    ++permutations;
  }
  fs::remove(shuffled);
  fs::remove(one_row);
  return {ck.ok(), ck.ok() ? "4 commands, round trips, " + std::to_string(permutations) + " row permutations"
                           : ck.reasons(),
          0, ms_since(start)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <data-dir> <cli-binary>\n";
    return 2;
  }
  const std::string data = argv[1];
  const std::string cli = argv[2];

  std::vector<std::pair<std::string, Outcome>> results(11);
  double small_ms = 0;
  results[0] = {"counterexample facts", counterexample()};
  results[1] = {"square inside C + dual, CSS-T hull pair", square_condition(small_ms)};
  results[3] = {"nonsingular triorthogonal matrices are permutations", invertible_triorthogonal()};
  results[4] = {"block transforms characterize triorthogonal generators", block_transforms()};
  results[5] = {"extension steps", extension_effects()};
  results[6] = {"maximal and minimal elements", poset_extremes()};
  results[7] = {"all-ones obstruction", all_ones_obstruction()};
  results[8] = {"oracle equivalence", oracles()};
  results[9] = {"enumeration integrity", enumeration_integrity()};
  results[10] = {"CLI contract", cli_contract(data, cli)};
  results[2] = {"Gram identity and hull of every form", form_identities()};

  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& [name, o] = results[i];
    const bool in_time = o.limit_ms == 0 || o.elapsed_ms < o.limit_ms;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::printf("%s C%zu %s: %s [%.2f ms", pass ? "PASS" : "FAIL", i + 1, name.c_str(), o.detail.c_str(), o.elapsed_ms);
    if (o.limit_ms > 0) std::printf(", limit %.0f ms%s", o.limit_ms, in_time ? "" : ", EXCEEDED");
    std::printf("]\n");
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
