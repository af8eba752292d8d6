#ifndef TRIORTH_TRIORTHO_HPP
#define TRIORTH_TRIORTHO_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "triorth/codes.hpp"
#include "triorth/errors.hpp"
#include "triorth/gf2.hpp"

namespace triorth {

struct ViolationWitness {
  enum class Kind { odd_pair, odd_triple, duplicate_row };

  Kind kind;
  std::vector<std::size_t> rows;  // 0-based, ascending; two or three entries

  friend bool operator==(const ViolationWitness&, const ViolationWitness&) = default;
};

inline const char* to_string(ViolationWitness::Kind k) {
  switch (k) {
    case ViolationWitness::Kind::odd_pair: return "odd-pair";
    case ViolationWitness::Kind::odd_triple: return "odd-triple";
    case ViolationWitness::Kind::duplicate_row: return "duplicate-row";
  }
  return "unknown";
}

/// Re-evaluates the rows a witness cites; true iff they really violate triorthogonality.
inline bool reproduces(const ViolationWitness& w, const Matrix& g) {
  for (auto i : w.rows) {
    if (i >= g.rows()) return false;
  }
  switch (w.kind) {
    case ViolationWitness::Kind::duplicate_row:
      return w.rows.size() == 2 && w.rows[0] != w.rows[1] && g.row(w.rows[0]) == g.row(w.rows[1]);
    case ViolationWitness::Kind::odd_pair:
      return w.rows.size() == 2 && dot(g.row(w.rows[0]), g.row(w.rows[1]));
    case ViolationWitness::Kind::odd_triple:
      return w.rows.size() == 3 && triple_parity(g.row(w.rows[0]), g.row(w.rows[1]), g.row(w.rows[2]));
  }
  return false;
}

/// First violation of triorthogonality, or nullopt if the matrix is triorthogonal.
/// Duplicate rows are reported before any parity condition is examined.
inline std::optional<ViolationWitness> find_violation(const Matrix& g) {
  using Kind = ViolationWitness::Kind;
  const auto& r = g.row_vectors();
  const std::size_t m = r.size();

  std::unordered_map<Vector, std::size_t> first_seen;
  for (std::size_t i = 0; i < m; ++i) {
    auto [it, inserted] = first_seen.emplace(r[i], i);
    if (!inserted) return ViolationWitness{Kind::duplicate_row, {it->second, i}};
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (dot(r[i], r[j])) return ViolationWitness{Kind::odd_pair, {i, j}};
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector ij = r[i] * r[j];
      for (std::size_t k = j + 1; k < m; ++k) {
        if (dot(ij, r[k])) return ViolationWitness{Kind::odd_triple, {i, j, k}};
      }
    }
  }
  return std::nullopt;
}

inline bool is_triorthogonal_matrix(const Matrix& g) { return !find_violation(g).has_value(); }

/// G G^t.
inline Matrix gram(const Matrix& g) { return g * g.transpose(); }

class NotTriorthogonalError : public std::invalid_argument {
 public:
  explicit NotTriorthogonalError(ViolationWitness w)
      : std::invalid_argument(std::string("matrix is not triorthogonal: ") + to_string(w.kind)), witness_(std::move(w)) {}
  const ViolationWitness& witness() const noexcept { return witness_; }

 private:
  ViolationWitness witness_;
};

/// A certified triorthogonal generator matrix split into odd rows (g1) over even rows (g0).
class TriorthogonalForm {
 public:
  const LinearCode& code() const noexcept { return code_; }
  const Matrix& g1() const noexcept { return g1_; }
  const Matrix& g0() const noexcept { return g0_; }
  std::size_t k1() const noexcept { return g1_.rows(); }
  std::size_t k0() const noexcept { return g0_.rows(); }
  std::size_t length() const noexcept { return code_.length(); }

  Matrix stacked() const { return Matrix::stack(g1_, g0_); }

  friend TriorthogonalForm normal_form(const Matrix& g);

 private:
  TriorthogonalForm(LinearCode code, Matrix g1, Matrix g0)
      : code_(std::move(code)), g1_(std::move(g1)), g0_(std::move(g0)) {}

  LinearCode code_;
  Matrix g1_;
  Matrix g0_;
};

/// Stable odd/even partition of a full-rank triorthogonal matrix.
/// Throws NotTriorthogonalError, RankError, or std::logic_error if the even rows
/// fail to span the hull (which cannot happen for a correct implementation).
inline TriorthogonalForm normal_form(const Matrix& g) {
  if (auto w = find_violation(g)) throw NotTriorthogonalError(std::move(*w));
  if (rank(g) != g.rows()) throw RankError("normal_form: generator matrix is not of full row rank");
  Matrix g1(g.cols());
  Matrix g0(g.cols());
  for (const auto& r : g) {
    if (r.parity()) {
      g1.push_back(r);
    } else {
      g0.push_back(r);
    }
  }
  auto code = LinearCode::from_generators(g);
  if (LinearCode::from_generators(g0) != hull(code)) {
    throw std::logic_error("normal_form: even rows do not span the hull");
  }
  return TriorthogonalForm(std::move(code), std::move(g1), std::move(g0));
}

struct NotTriorthogonal {
  enum class Reason { hull_not_orthogonal_to_square, no_compatible_odd_basis };
  Reason reason;
  std::uint64_t nodes = 0;
};

struct SearchBudgetExceeded {
  std::uint64_t nodes = 0;
};

using Decision = std::variant<TriorthogonalForm, NotTriorthogonal, SearchBudgetExceeded>;

inline constexpr std::uint64_t default_search_limit = 10'000'000;

enum class CandidateOrder { canonical, reversed };

namespace detail {

// Backtracking over odd coset representatives of C / hull(C). Each level picks a
// candidate compatible with everything already chosen (pairwise dot 0, triple
// parity 0 with every chosen pair) and filters the remaining pool accordingly.
class OddBasisSearch {
 public:
  OddBasisSearch(std::vector<Vector> pool, std::size_t needed, std::uint64_t limit)
      : pool_(std::move(pool)), needed_(needed), limit_(limit) {}

  enum class Outcome { found, exhausted, budget };

  Outcome run() {
    std::vector<std::size_t> all(pool_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return descend(all);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::vector<Vector> chosen_rows() const {
    std::vector<Vector> out;
    for (auto i : chosen_) out.push_back(pool_[i]);
    return out;
  }

 private:
  Outcome descend(const std::vector<std::size_t>& open) {
    if (++nodes_ > limit_) return Outcome::budget;
    if (chosen_.size() == needed_) return Outcome::found;
    if (chosen_.size() + open.size() < needed_) return Outcome::exhausted;
    for (std::size_t a = 0; a < open.size(); ++a) {
      if (chosen_.size() + (open.size() - a) < needed_) break;
      const Vector& c = pool_[open[a]];
      std::vector<std::size_t> next;
      for (std::size_t b = a + 1; b < open.size(); ++b) {
        const Vector& d = pool_[open[b]];
        if (dot(c, d)) continue;
        bool ok = true;
        for (auto x : chosen_) {
          if (triple_parity(pool_[x], c, d)) {
            ok = false;
            break;
          }
        }
        if (ok) next.push_back(open[b]);
      }
      chosen_.push_back(open[a]);
      const auto r = descend(next);
      if (r != Outcome::exhausted) return r;
      chosen_.pop_back();
    }
    return Outcome::exhausted;
  }

  std::vector<Vector> pool_;
  std::size_t needed_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace detail

/// Decides whether C admits a triorthogonal generator matrix.
///
/// hull(C) must lie in (C^2)⊥; given that, every condition touching a hull vector
/// holds automatically and all conditions are invariant under adding hull vectors
/// to odd rows. The search therefore runs over canonical odd representatives of
/// C / hull(C), looking for dim C - dim hull(C) mutually compatible ones, and any
/// basis of the hull supplies the even rows.
inline Decision decide_triorthogonal(const LinearCode& c, std::uint64_t search_limit = default_search_limit,
                                     CandidateOrder order = CandidateOrder::canonical) {
  if (c.is_zero()) throw DomainError("decide_triorthogonal: the zero code is excluded");
  const LinearCode h = hull(c);
  const LinearCode square_dual = dual(schur_square(c));
  if (!square_dual.contains(h)) return NotTriorthogonal{NotTriorthogonal::Reason::hull_not_orthogonal_to_square, 0};

  // Complement of the hull inside C, then all nonzero combinations reduced mod hull.
  Matrix complement(c.length());
  Matrix spanned = h.basis();
  for (const auto& r : c.basis()) {
    if (!member(spanned, r)) {
      spanned.push_back(r);
      complement.push_back(h.reduce(r));
    }
  }
  const std::size_t q = complement.rows();
  std::vector<Vector> pool;
  if (q > 0) {
    if (q >= 32) throw ResourceError("decide_triorthogonal: quotient dimension too large", 0, search_limit);
    Vector current(c.length());
    const std::uint64_t total = std::uint64_t{1} << q;
    for (std::uint64_t i = 1; i < total; ++i) {
      current += complement.row(static_cast<std::size_t>(std::countr_zero(i)));
      Vector rep = h.reduce(current);
      if (rep.parity()) pool.push_back(std::move(rep));
    }
    std::sort(pool.begin(), pool.end());
    if (order == CandidateOrder::reversed) std::reverse(pool.begin(), pool.end());
  }

  detail::OddBasisSearch search(std::move(pool), q, search_limit);
  switch (search.run()) {
    case detail::OddBasisSearch::Outcome::budget: return SearchBudgetExceeded{search.nodes()};
    case detail::OddBasisSearch::Outcome::exhausted:
      return NotTriorthogonal{NotTriorthogonal::Reason::no_compatible_odd_basis, search.nodes()};
    case detail::OddBasisSearch::Outcome::found: break;
  }
  Matrix g(c.length(), search.chosen_rows());
  for (const auto& r : h.basis()) g.push_back(r);
  auto form = normal_form(g);
  if (form.code() != c) throw std::logic_error("decide_triorthogonal: found matrix generates a different code");
  return form;
}

/// Admissible transform M = (P M2; 0 M4) acting on a normal form (after the stable
/// odd/even re-partition of M G).
struct BlockTransform {
  Matrix p;
  Matrix m2;
  Matrix m4;
  std::vector<std::size_t> row_order;  // rows of M, in the order that puts M in block form
};

struct NotAdmissible {
  std::string reason;
};

using TransformClass = std::variant<BlockTransform, NotAdmissible>;

namespace detail {

inline Matrix block(const Matrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  Matrix out(c1 - c0);
  for (std::size_t i = r0; i < r1; ++i) {
    Vector v(c1 - c0);
    for (std::size_t j = c0; j < c1; ++j) v.set(j - c0, m.get(i, j));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Classifies whether M (G1; G0) is triorthogonal by the block shape of M alone.
inline TransformClass check_transform(const TriorthogonalForm& t, const Matrix& m) {
  const std::size_t k = t.k1() + t.k0();
  if (m.rows() != k || m.cols() != k) {
    throw DimensionError("check_transform: expected a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
  }
  if (!is_nonsingular(m)) throw RankError("check_transform: transform is singular");

  // Row i of M G is odd iff the first k1 entries of row i of M have odd weight.
  std::vector<std::size_t> odd;
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < k; ++i) {
    bool parity = false;
    for (std::size_t j = 0; j < t.k1(); ++j) parity ^= m.get(i, j);
    (parity ? odd : even).push_back(i);
  }
  if (odd.size() != t.k1()) {
    return NotAdmissible{"transform yields " + std::to_string(odd.size()) + " odd rows, expected " +
                         std::to_string(t.k1())};
  }
  std::vector<std::size_t> order = odd;
  order.insert(order.end(), even.begin(), even.end());
  Matrix arranged(k);
  for (auto i : order) arranged.push_back(m.row(i));

  const std::size_t k1 = t.k1();
  Matrix m1 = detail::block(arranged, 0, k1, 0, k1);
  Matrix m2 = detail::block(arranged, 0, k1, k1, k);
  Matrix m3 = detail::block(arranged, k1, k, 0, k1);
  Matrix m4 = detail::block(arranged, k1, k, k1, k);
  for (const auto& r : m3) {
    if (!r.is_zero()) return NotAdmissible{"lower-left block is nonzero"};
  }
  if (!is_permutation(m1)) return NotAdmissible{"upper-left block is not a permutation"};
  // M nonsingular with M3 = 0 and M1 invertible forces M4 nonsingular.
  return BlockTransform{std::move(m1), std::move(m2), std::move(m4), std::move(order)};
}

}  // namespace triorth

#endif  // TRIORTH_TRIORTHO_HPP
