#ifndef TRIORTH_CODES_HPP
#define TRIORTH_CODES_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "triorth/errors.hpp"
#include "triorth/gf2.hpp"

namespace triorth {

/// Default number of codewords min_distance may enumerate.
inline constexpr std::uint64_t default_distance_budget = std::uint64_t{1} << 28;

/// A binary linear code held in canonical form: its basis is the RREF of any
/// generator matrix, so two codes are equal iff their bases are identical.
class LinearCode {
 public:
  LinearCode() = default;

  static LinearCode from_generators(const Matrix& generators) { return LinearCode(rref(generators)); }

  static LinearCode zero(std::size_t length) { return from_generators(Matrix(length)); }
  static LinearCode full(std::size_t length) { return from_generators(Matrix::identity(length)); }

  std::size_t length() const noexcept { return echelon_.basis.cols(); }
  std::size_t dimension() const noexcept { return echelon_.basis.rows(); }
  bool is_zero() const noexcept { return dimension() == 0; }

  const Matrix& basis() const noexcept { return echelon_.basis; }
  const std::vector<std::size_t>& pivots() const noexcept { return echelon_.pivots; }
  const Echelon& echelon() const noexcept { return echelon_; }

  /// Canonical representative of v + C: v with every pivot column of C cleared.
  Vector reduce(const Vector& v) const { return triorth::reduce(echelon_, v); }

  bool contains(const Vector& v) const { return reduce(v).is_zero(); }

  bool contains(const LinearCode& other) const {
    require_same_length(other, "code inclusion");
    for (const auto& r : other.basis()) {
      if (!contains(r)) return false;
    }
    return true;
  }

  /// Visits all 2^k codewords in Gray-code order, starting with the zero word.
  template <typename F>
  void for_each_codeword(F&& visit) const {
    Vector current(length());
    visit(static_cast<const Vector&>(current));
    const std::uint64_t total = std::uint64_t{1} << dimension();
    for (std::uint64_t i = 1; i < total; ++i) {
      current += echelon_.basis.row(static_cast<std::size_t>(std::countr_zero(i)));
      visit(static_cast<const Vector&>(current));
    }
  }

  void require_same_length(const LinearCode& other, const char* op) const {
    if (length() != other.length()) {
      throw DimensionError(std::string(op) + ": code lengths differ (" + std::to_string(length()) + " vs " +
                           std::to_string(other.length()) + ")");
    }
  }

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.echelon_.basis == b.echelon_.basis; }

  /// Canonical total order: length, then dimension, then basis rows lexicographically.
  friend std::strong_ordering operator<=>(const LinearCode& a, const LinearCode& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    if (auto c = a.dimension() <=> b.dimension(); c != 0) return c;
    return a.basis().row_vectors() <=> b.basis().row_vectors();
  }

 private:
  explicit LinearCode(Echelon e) : echelon_(std::move(e)) {}

  Echelon echelon_;
};

inline LinearCode dual(const LinearCode& c) { return LinearCode::from_generators(kernel(c.basis())); }

inline LinearCode sum(const LinearCode& c, const LinearCode& d) {
  c.require_same_length(d, "sum");
  return LinearCode::from_generators(Matrix::stack(c.basis(), d.basis()));
}

// Double dualization: C ∩ D = (C⊥ + D⊥)⊥.
inline LinearCode intersect(const LinearCode& c, const LinearCode& d) {
  c.require_same_length(d, "intersect");
  return dual(sum(dual(c), dual(d)));
}

/// C1 ∩ C2⊥.
inline LinearCode relative_hull(const LinearCode& c1, const LinearCode& c2) {
  c1.require_same_length(c2, "relative_hull");
  return intersect(c1, dual(c2));
}

inline LinearCode hull(const LinearCode& c) { return relative_hull(c, c); }

/// Span of c*d over basis rows; bilinearity makes basis pairs sufficient.
inline LinearCode schur_product(const LinearCode& c, const LinearCode& d) {
  c.require_same_length(d, "schur_product");
  Matrix gens(c.length());
  for (const auto& x : c.basis()) {
    for (const auto& y : d.basis()) gens.push_back(x * y);
  }
  return LinearCode::from_generators(gens);
}

inline LinearCode schur_square(const LinearCode& c) {
  const auto& rows = c.basis().row_vectors();
  Matrix gens(c.length());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) gens.push_back(rows[i] * rows[j]);
  }
  return LinearCode::from_generators(gens);
}

inline LinearCode schur_power(const LinearCode& c, unsigned exponent) {
  if (exponent == 0) throw DomainError("schur_power: exponent must be positive");
  LinearCode p = c;
  for (unsigned i = 1; i < exponent; ++i) p = schur_product(p, c);
  return p;
}

/// Exact minimum distance by exhaustive Gray-code enumeration of all 2^k codewords.
inline std::size_t min_distance(const LinearCode& c, std::uint64_t budget = default_distance_budget) {
  if (c.is_zero()) throw DomainError("min_distance: the zero code has no nonzero codeword");
  const std::size_t k = c.dimension();
  const std::uint64_t required = k >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << k;
  if (k >= 64 || required > budget) {
    throw ResourceError("min_distance: 2^" + std::to_string(k) + " codewords exceed the enumeration budget", required,
                        budget);
  }
  std::size_t best = c.length();
  bool first = true;
  c.for_each_codeword([&](const Vector& w) {
    if (first) {
      first = false;
      return;
    }
    if (const auto wt = w.weight(); wt < best) best = wt;
  });
  return best;
}

/// Every codeword has even weight; parity is linear, so checking the basis suffices.
inline bool is_even(const LinearCode& c) {
  for (const auto& r : c.basis()) {
    if (r.parity()) return false;
  }
  return true;
}

inline bool odd_vectors_exist(const LinearCode& c) { return !is_even(c); }

}  // namespace triorth

#endif  // TRIORTH_CODES_HPP
