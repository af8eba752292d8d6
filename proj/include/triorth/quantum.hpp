#ifndef TRIORTH_QUANTUM_HPP
#define TRIORTH_QUANTUM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "triorth/codes.hpp"
#include "triorth/errors.hpp"
#include "triorth/triortho.hpp"

namespace triorth {

/// A nested pair C2 ⊆ C1. `verified` means C2 ⊆ C1 ∩ (C1^2)⊥ was checked.
struct CssTPair {
  LinearCode c1;
  LinearCode c2;
  bool verified = false;
};

struct NotCssT {
  enum class Reason { not_nested, square_condition };
  Reason reason;
};

inline const char* to_string(NotCssT::Reason r) {
  return r == NotCssT::Reason::not_nested ? "C2 is not a subcode of C1" : "C2 is not contained in C1 ∩ (C1^2)⊥";
}

using CssTCheck = std::variant<CssTPair, NotCssT>;

inline CssTCheck csst_check(const LinearCode& c1, const LinearCode& c2) {
  c1.require_same_length(c2, "csst_check");
  if (!c1.contains(c2)) return NotCssT{NotCssT::Reason::not_nested};
  if (!relative_hull(c1, schur_square(c1)).contains(c2)) return NotCssT{NotCssT::Reason::square_condition};
  return CssTPair{c1, c2, true};
}

/// A nested pair with no CSS-T verification; suitable only for the generic bound.
inline CssTPair css_pair(const LinearCode& c1, const LinearCode& c2) {
  c1.require_same_length(c2, "css_pair");
  if (!c1.contains(c2)) throw PreconditionError("css_pair: C2 is not a subcode of C1");
  return CssTPair{c1, c2, false};
}

enum class BoundKind { css_generic, csst, triorthogonal };

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::css_generic: return "css-generic";
    case BoundKind::csst: return "csst";
    case BoundKind::triorthogonal: return "triorthogonal";
  }
  return "unknown";
}

/// [[n, k, >= d_bound]]. d_bound is the exact minimum distance of the classical code
/// that bounds the quantum distance; d_exact repeats it only when requested.
struct QuantumParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d_bound = 1;
  std::optional<std::size_t> d_exact;
  BoundKind bound_kind = BoundKind::css_generic;

  friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

inline std::string to_string(const QuantumParams& q) {
  return "[[" + std::to_string(q.n) + ", " + std::to_string(q.k) + ", >= " + std::to_string(q.d_bound) + "]]";
}

namespace detail {

// Minimum distance of a bound code; the zero code (only possible as a dual of F2^n)
// contributes no constraint, so n is reported.
inline std::size_t bound_distance(const LinearCode& c, std::uint64_t budget) {
  return c.is_zero() ? c.length() : min_distance(c, budget);
}

}  // namespace detail

inline QuantumParams css_params(const CssTPair& pair, BoundKind kind, bool compute_exact = false,
                                std::uint64_t budget = default_distance_budget) {
  if (!pair.c1.contains(pair.c2)) throw ContractError("css_params: pair is not nested");
  QuantumParams q;
  q.n = pair.c1.length();
  q.k = pair.c1.dimension() - pair.c2.dimension();
  q.bound_kind = kind;
  const std::size_t d2_dual = detail::bound_distance(dual(pair.c2), budget);
  switch (kind) {
    case BoundKind::css_generic: {
      const std::size_t d1 = detail::bound_distance(pair.c1, budget);
      q.d_bound = std::min(d1, d2_dual);
      break;
    }
    case BoundKind::csst:
    case BoundKind::triorthogonal:
      if (!pair.verified) throw ContractError("css_params: CSS-T bound requested for an unverified pair");
      q.d_bound = d2_dual;
      break;
  }
  if (compute_exact) q.d_exact = q.d_bound;
  return q;
}

/// [[n, dim C - dim hull(C), >= d(C + C⊥)]].
inline QuantumParams tri_quantum_params(const TriorthogonalForm& t, bool compute_exact = false,
                                        std::uint64_t budget = default_distance_budget) {
  const LinearCode& c = t.code();
  QuantumParams q;
  q.n = c.length();
  q.k = t.k1();
  q.d_bound = detail::bound_distance(sum(c, dual(c)), budget);
  q.bound_kind = BoundKind::triorthogonal;
  if (compute_exact) q.d_exact = q.d_bound;
  return q;
}

struct StabilizerView {
  LinearCode x_stabilizers;
  LinearCode z_stabilizers;
};

/// X stabilizers from hull(C), Z stabilizers from C⊥.
inline StabilizerView stabilizer_view(const TriorthogonalForm& t) { return {hull(t.code()), dual(t.code())}; }

}  // namespace triorth

#endif  // TRIORTH_QUANTUM_HPP
