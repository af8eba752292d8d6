#ifndef TRIORTH_POSET_HPP
#define TRIORTH_POSET_HPP

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "triorth/codes.hpp"
#include "triorth/errors.hpp"
#include "triorth/gf2.hpp"
#include "triorth/triortho.hpp"

namespace triorth {

/// An element of the triorthogonal poset at a fixed length.
struct PosetNode {
  TriorthogonalForm form;
  LinearCode hull;
  std::size_t hull_dim = 0;
  std::size_t code_dim = 0;

  const LinearCode& code() const noexcept { return form.code(); }
};

inline PosetNode make_node(TriorthogonalForm form) {
  LinearCode h = hull(form.code());
  const std::size_t hd = h.dimension();
  const std::size_t cd = form.code().dimension();
  return PosetNode{std::move(form), std::move(h), hd, cd};
}

/// C ⊆ C' and hull(C) ⊆ hull(C').
inline bool leq(const PosetNode& a, const PosetNode& b) {
  a.code().require_same_length(b.code(), "poset order");
  return b.code().contains(a.code()) && b.hull.contains(a.hull);
}

enum class ExtensionEffect { grows_dimension_same_hull, grows_hull };

struct ExtensionCandidate {
  Vector vector;
  bool odd = false;
  ExtensionEffect predicted_effect = ExtensionEffect::grows_hull;
};

/// (C^2)⊥, the admissible extension vectors.
inline LinearCode extension_space(const LinearCode& c) { return dual(schur_square(c)); }

/// Extends by v, prepending it to the odd block if v is odd and to the even block otherwise.
inline TriorthogonalForm extend(const TriorthogonalForm& t, const Vector& v) {
  if (v.size() != t.length()) throw DimensionError("extend: vector length does not match code length");
  if (t.code().contains(v)) throw PreconditionError("extend: vector already lies in the code");
  if (!extension_space(t.code()).contains(v)) throw PreconditionError("extend: vector is not orthogonal to C^2");
  Matrix g(t.length());
  if (v.parity()) {
    g.push_back(v);
    for (const auto& r : t.g1()) g.push_back(r);
    for (const auto& r : t.g0()) g.push_back(r);
  } else {
    for (const auto& r : t.g1()) g.push_back(r);
    g.push_back(v);
    for (const auto& r : t.g0()) g.push_back(r);
  }
  return normal_form(g);
}

/// One representative per coset of C in (C^2)⊥ + C, excluding C itself, in canonical order.
/// Representatives are taken inside (C^2)⊥ and reduced modulo (C^2)⊥ ∩ C (which is the
/// hull for a triorthogonal C), so their parity is well defined.
inline std::vector<ExtensionCandidate> extension_candidates(const TriorthogonalForm& t) {
  const LinearCode& c = t.code();
  const LinearCode space = extension_space(c);
  const LinearCode common = intersect(space, c);

  Matrix reduced(c.length());
  for (const auto& r : space.basis()) reduced.push_back(common.reduce(r));
  const Matrix quotient = rref(reduced).basis;
  if (quotient.rows() >= 32) throw ResourceError("extension_candidates: too many cosets", 0, 0);

  std::vector<Vector> reps;
  Vector current(c.length());
  const std::uint64_t total = std::uint64_t{1} << quotient.rows();
  for (std::uint64_t i = 1; i < total; ++i) {
    current += quotient.row(static_cast<std::size_t>(std::countr_zero(i)));
    reps.push_back(current);
  }
  std::sort(reps.begin(), reps.end());

  std::vector<ExtensionCandidate> out;
  out.reserve(reps.size());
  const Matrix base = t.stacked();
  for (auto& v : reps) {
    if (!is_triorthogonal_matrix(Matrix::stack(Matrix(c.length(), {v}), base))) {
      throw std::logic_error("extension_candidates: candidate " + v.to_string() + " breaks triorthogonality");
    }
    const bool odd = v.parity();
    out.push_back({std::move(v), odd, odd ? ExtensionEffect::grows_dimension_same_hull : ExtensionEffect::grows_hull});
  }
  return out;
}

struct ExtensionCounts {
  std::uint64_t odd = 0;
  std::uint64_t even = 0;
};

/// Candidate counts by parity without listing them. Parity is a linear form on the
/// quotient, so it is either identically zero or splits the cosets evenly.
inline ExtensionCounts extension_counts(const TriorthogonalForm& t) {
  const LinearCode& c = t.code();
  const LinearCode space = extension_space(c);
  const std::size_t q = space.dimension() - intersect(space, c).dimension();
  if (q == 0) return {};
  if (q >= 64) throw ResourceError("extension_counts: too many cosets", 0, 0);
  const bool has_odd = odd_vectors_exist(space);
  const std::uint64_t half = std::uint64_t{1} << (q - 1);
  return has_odd ? ExtensionCounts{half, half - 1} : ExtensionCounts{0, 2 * half - 1};
}

/// Deletes odd row `index` (0-based) of the odd block.
inline TriorthogonalForm shrink(const TriorthogonalForm& t, std::size_t index) {
  if (index >= t.k1()) {
    throw std::out_of_range("shrink: odd row " + std::to_string(index) + " out of range (k1 = " +
                            std::to_string(t.k1()) + ")");
  }
  if (t.k1() + t.k0() == 1) throw DomainError("shrink: result would be the zero code");
  Matrix g(t.length());
  for (std::size_t i = 0; i < t.k1(); ++i) {
    if (i != index) g.push_back(t.g1().row(i));
  }
  for (const auto& r : t.g0()) g.push_back(r);
  return normal_form(g);
}

/// (C^2)⊥ = hull(C).
inline bool is_maximal(const TriorthogonalForm& t) { return extension_space(t.code()) == hull(t.code()); }

/// One-dimensional even code.
inline bool paper_minimal_predicate(const TriorthogonalForm& t) {
  return t.code().dimension() == 1 && is_even(t.code());
}

/// No other element of `ground` lies strictly below t.
inline bool is_minimal_in(const TriorthogonalForm& t, const std::vector<PosetNode>& ground) {
  const PosetNode self = make_node(t);
  bool present = false;
  bool minimal = true;
  for (const auto& other : ground) {
    if (other.code() == t.code()) {
      present = true;
      continue;
    }
    if (leq(other, self)) minimal = false;
  }
  if (!present) throw ContractError("is_minimal_in: element is not in the ground set");
  return minimal;
}

/// The all-ones vector lies in C^2; every extension is then even and grows the hull.
inline bool obstruction_all_ones(const TriorthogonalForm& t) {
  return schur_square(t.code()).contains(Vector::all_ones(t.length()));
}

/// Extends until maximal, preferring the first odd candidate in canonical order and
/// otherwise the first candidate. Returns the whole chain, starting with t.
inline std::vector<TriorthogonalForm> saturate(const TriorthogonalForm& t) {
  std::vector<TriorthogonalForm> chain{t};
  while (!is_maximal(chain.back())) {
    const auto candidates = extension_candidates(chain.back());
    if (candidates.empty()) throw std::logic_error("saturate: non-maximal code without extension candidates");
    auto pick = std::find_if(candidates.begin(), candidates.end(), [](const auto& c) { return c.odd; });
    if (pick == candidates.end()) pick = candidates.begin();
    chain.push_back(extend(chain.back(), pick->vector));
  }
  return chain;
}

inline constexpr std::size_t max_enumeration_length = 7;

/// Visits every subspace of F2^n exactly once as an RREF matrix, by pivot profile
/// (increasing pivot sets) and then by every filling of the free entries.
/// Returns the number of subspaces visited, the zero space included.
template <typename F>
std::uint64_t for_each_subspace(std::size_t n, F&& visit) {
  if (n == 0 || n > 20) throw DomainError("for_each_subspace: length out of range");
  std::uint64_t visited = 0;
  for (std::uint32_t pivot_mask = 0; pivot_mask < (std::uint32_t{1} << n); ++pivot_mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t j = 0; j < n; ++j) {
      if (pivot_mask & (std::uint32_t{1} << j)) pivots.push_back(j);
    }
    // Free slots: (row, column) with column past the row's pivot and not itself a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      for (std::size_t j = pivots[i] + 1; j < n; ++j) {
        if (!(pivot_mask & (std::uint32_t{1} << j))) free_slots.emplace_back(i, j);
      }
    }
    if (free_slots.size() >= 63) throw ResourceError("for_each_subspace: too many free entries", 0, 0);
    const std::uint64_t fillings = std::uint64_t{1} << free_slots.size();
    for (std::uint64_t fill = 0; fill < fillings; ++fill) {
      Matrix m(n);
      for (auto p : pivots) m.push_back(Vector::unit(n, p));
      for (std::size_t s = 0; s < free_slots.size(); ++s) {
        if ((fill >> s) & 1U) m.set(free_slots[s].first, free_slots[s].second);
      }
      ++visited;
      visit(static_cast<const Matrix&>(m), static_cast<const std::vector<std::size_t>&>(pivots));
    }
  }
  return visited;
}

struct Enumeration {
  std::size_t length = 0;
  std::uint64_t subspaces_visited = 0;
  std::vector<PosetNode> nodes;  // sorted canonically by code
};

/// Every triorthogonal code of length n (1 <= n <= 7), zero code excluded.
inline Enumeration enumerate_triorthogonal(std::size_t n, std::uint64_t search_limit = default_search_limit) {
  if (n < 1 || n > max_enumeration_length) {
    throw DomainError("enumerate_triorthogonal: length must lie in [1, " + std::to_string(max_enumeration_length) + "]");
  }
  Enumeration e;
  e.length = n;
  e.subspaces_visited = for_each_subspace(n, [&](const Matrix& basis, const std::vector<std::size_t>&) {
    if (basis.empty()) return;
    const auto code = LinearCode::from_generators(basis);
    auto decision = decide_triorthogonal(code, search_limit);
    if (auto* form = std::get_if<TriorthogonalForm>(&decision)) {
      e.nodes.push_back(make_node(std::move(*form)));
    } else if (std::holds_alternative<SearchBudgetExceeded>(decision)) {
      throw ResourceError("enumerate_triorthogonal: search limit exceeded", 0, search_limit);
    }
  });
  std::sort(e.nodes.begin(), e.nodes.end(), [](const PosetNode& a, const PosetNode& b) { return a.code() < b.code(); });
  return e;
}

/// No element of the ground set lies strictly above `node`.
inline bool has_no_strict_upper_bound(const PosetNode& node, const std::vector<PosetNode>& ground) {
  for (const auto& other : ground) {
    if (other.code() != node.code() && leq(node, other)) return false;
  }
  return true;
}

/// Minimal/maximal flags for a whole ground set at once. For n <= 7 every code is a
/// subset of 128 vectors, so the order test becomes two bitset inclusions.
class PosetOrder {
 public:
  explicit PosetOrder(const std::vector<PosetNode>& ground) {
    for (const auto& node : ground) {
      if (node.code().length() > max_enumeration_length) {
        throw DomainError("PosetOrder: length must be at most " + std::to_string(max_enumeration_length));
      }
      members_.push_back({membership(node.code()), membership(node.hull)});
    }
  }

  bool leq(std::size_t a, std::size_t b) const {
    return (members_[a].code & ~members_[b].code).none() && (members_[a].hull & ~members_[b].hull).none();
  }

  std::vector<bool> minimal() const { return extremal(true); }
  std::vector<bool> maximal() const { return extremal(false); }

 private:
  using Set = std::bitset<std::size_t{1} << max_enumeration_length>;
  struct Entry {
    Set code;
    Set hull;
  };

  static Set membership(const LinearCode& c) {
    Set s;
    c.for_each_codeword([&](const Vector& w) {
      std::size_t index = 0;
      for (std::size_t i = 0; i < w.size(); ++i) index = (index << 1) | static_cast<std::size_t>(w.test(i));
      s.set(index);
    });
    return s;
  }

  std::vector<bool> extremal(bool below) const {
    std::vector<bool> out(members_.size(), true);
    for (std::size_t i = 0; i < members_.size(); ++i) {
      for (std::size_t j = 0; j < members_.size() && out[i]; ++j) {
        if (i != j && (below ? leq(j, i) : leq(i, j))) out[i] = false;
      }
    }
    return out;
  }

  std::vector<Entry> members_;
};

}  // namespace triorth

#endif  // TRIORTH_POSET_HPP
