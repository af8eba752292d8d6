#ifndef TRIORTH_GF2_HPP
#define TRIORTH_GF2_HPP

// Dense bit-packed vectors and matrices over F2.
//
// Column j of a vector lives in word j / 64 at bit 63 - (j % 64), so comparing
// the word arrays as unsigned integers orders vectors lexicographically with
// column 0 most significant. Bits past the length are always zero.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triorth/errors.hpp"

namespace triorth {

class Vector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Vector() = default;
  explicit Vector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

  static Vector zeros(std::size_t length) { return Vector(length); }

  static Vector all_ones(std::size_t length) {
    Vector v(length);
    for (auto& w : v.words_) w = ~word_type{0};
    v.clear_tail();
    return v;
  }

  static Vector unit(std::size_t length, std::size_t index) {
    Vector v(length);
    v.set(index);
    return v;
  }

  /// Parses a string of '0'/'1' characters; anything else throws std::invalid_argument.
  static Vector from_string(std::string_view bits) {
    Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        throw std::invalid_argument("non-binary symbol '" + std::string(1, bits[i]) + "' in vector");
      }
    }
    return v;
  }

  /// Builds a vector from the low `length` bits of `mask`; bit length-1 is column 0.
  static Vector from_mask(std::size_t length, std::uint64_t mask) {
    Vector v(length);
    for (std::size_t i = 0; i < length; ++i) {
      if ((mask >> (length - 1 - i)) & 1U) v.set(i);
    }
    return v;
  }

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  std::span<const word_type> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> shift(i)) & 1U; }
  bool operator[](std::size_t i) const noexcept { return test(i); }

  void set(std::size_t i, bool value = true) noexcept {
    const word_type mask = word_type{1} << shift(i);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }

  void flip(std::size_t i) noexcept { words_[i / word_bits] ^= word_type{1} << shift(i); }

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
  }

  bool parity() const noexcept {
    word_type acc = 0;
    for (auto x : words_) acc ^= x;
    return std::popcount(acc) & 1;
  }

  bool is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type x) { return x == 0; });
  }

  /// Index of the first nonzero column, if any.
  std::optional<std::size_t> leading_index() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * word_bits + static_cast<std::size_t>(std::countl_zero(words_[w]));
    }
    return std::nullopt;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (word_type x = words_[w]; x != 0; x &= x - 1) {
        s.push_back(w * word_bits + word_bits - 1 - static_cast<std::size_t>(std::countr_zero(x)));
      }
    }
    std::sort(s.begin(), s.end());
    return s;
  }

  Vector& operator+=(const Vector& other) {
    require_same_length(other, "vector addition");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  /// Componentwise (Schur) product in place.
  Vector& operator*=(const Vector& other) {
    require_same_length(other, "Schur product");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator*(Vector a, const Vector& b) { return a *= b; }

  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const Vector&, const Vector&) = default;

  /// Shorter vectors first; equal lengths compare lexicographically, column 0 first.
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << v.to_string(); }

  void require_same_length(const Vector& other, const char* op) const {
    if (length_ != other.length_) {
      throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(length_) + " vs " +
                           std::to_string(other.length_) + ")");
    }
  }

 private:
  static std::size_t word_count(std::size_t n) { return (n + word_bits - 1) / word_bits; }
  static unsigned shift(std::size_t i) noexcept { return static_cast<unsigned>(word_bits - 1 - i % word_bits); }

  void clear_tail() noexcept {
    if (const auto r = length_ % word_bits; r != 0 && !words_.empty()) {
      words_.back() &= ~word_type{0} << (word_bits - r);
    }
  }

  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

inline Vector schur(const Vector& u, const Vector& v) { return u * v; }

/// Standard dot product; equals parity(schur(u, v)).
inline bool dot(const Vector& u, const Vector& v) {
  u.require_same_length(v, "dot product");
  Vector::word_type acc = 0;
  const auto a = u.words();
  const auto b = v.words();
  for (std::size_t w = 0; w < a.size(); ++w) acc ^= a[w] & b[w];
  return std::popcount(acc) & 1;
}

/// Parity of the triple Schur product u*v*w without materializing it.
inline bool triple_parity(const Vector& u, const Vector& v, const Vector& w) {
  u.require_same_length(v, "triple product");
  u.require_same_length(w, "triple product");
  Vector::word_type acc = 0;
  const auto a = u.words();
  const auto b = v.words();
  const auto c = w.words();
  for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i] & c[i];
  return std::popcount(acc) & 1;
}

/// An ordered list of equal-length rows. A matrix with no rows still knows its width.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t cols) : cols_(cols) {}

  Matrix(std::size_t cols, std::vector<Vector> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) check_row(r);
  }

  static Matrix zeros(std::size_t rows, std::size_t cols) {
    return Matrix(cols, std::vector<Vector>(rows, Vector(cols)));
  }

  static Matrix identity(std::size_t k) {
    Matrix m(k);
    for (std::size_t i = 0; i < k; ++i) m.rows_.push_back(Vector::unit(k, i));
    return m;
  }

  /// Rows given as '0'/'1' strings; all must share one length.
  static Matrix from_strings(std::initializer_list<std::string_view> rows) {
    return from_strings(std::vector<std::string_view>(rows));
  }

  static Matrix from_strings(const std::vector<std::string_view>& rows) {
    if (rows.empty()) throw DimensionError("from_strings: cannot infer width of an empty row list");
    Matrix m(rows.front().size());
    for (auto r : rows) m.push_back(Vector::from_string(r));
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_.empty(); }

  const Vector& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<Vector>& row_vectors() const noexcept { return rows_; }
  auto begin() const noexcept { return rows_.begin(); }
  auto end() const noexcept { return rows_.end(); }

  bool get(std::size_t i, std::size_t j) const { return rows_.at(i).test(j); }
  void set(std::size_t i, std::size_t j, bool value = true) { rows_.at(i).set(j, value); }

  void push_back(Vector r) {
    check_row(r);
    rows_.push_back(std::move(r));
  }

  /// Rows of `top` followed by rows of `bottom`.
  static Matrix stack(const Matrix& top, const Matrix& bottom) {
    if (top.cols_ != bottom.cols_) throw DimensionError("stack: column count mismatch");
    Matrix m = top;
    m.rows_.insert(m.rows_.end(), bottom.rows_.begin(), bottom.rows_.end());
    return m;
  }

  Matrix transpose() const {
    Matrix t = zeros(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (auto j : rows_[i].support()) t.rows_[j].set(i);
    }
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows()) {
      throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols_) + " times " +
                           std::to_string(b.rows()) + "x" + std::to_string(b.cols_));
    }
    Matrix c(b.cols_);
    c.rows_.reserve(a.rows());
    for (const auto& ar : a.rows_) {
      Vector acc(b.cols_);
      for (auto j : ar.support()) acc += b.rows_[j];
      c.rows_.push_back(std::move(acc));
    }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (const auto& r : m.rows_) os << r << '\n';
    return os;
  }

 private:
  void check_row(const Vector& r) const {
    if (r.size() != cols_) {
      throw DimensionError("matrix row of length " + std::to_string(r.size()) + " in a matrix with " +
                           std::to_string(cols_) + " columns");
    }
  }

  std::size_t cols_ = 0;
  std::vector<Vector> rows_;
};

/// Reduced row echelon form together with its (strictly increasing, 0-based) pivot columns.
struct Echelon {
  Matrix basis;
  std::vector<std::size_t> pivots;
};

inline Echelon rref(const Matrix& m) {
  std::vector<Vector> rows(m.begin(), m.end());
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].test(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].test(col)) rows[i] += rows[rank];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return {Matrix(m.cols(), std::move(rows)), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Reduces v against an echelon basis; the result is zero iff v lies in the row space.
inline Vector reduce(const Echelon& e, Vector v) {
  if (v.size() != e.basis.cols()) throw DimensionError("reduce: vector length does not match matrix width");
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (v.test(e.pivots[i])) v += e.basis.row(i);
  }
  return v;
}

inline bool member(const Echelon& e, const Vector& v) { return reduce(e, v).is_zero(); }
inline bool member(const Matrix& m, const Vector& v) { return member(rref(m), v); }

/// Basis of the right null space {x : m x^t = 0}.
inline Matrix kernel(const Matrix& m) {
  const auto e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix k(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x = Vector::unit(n, f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.basis.get(i, f)) x.set(e.pivots[i]);
    }
    k.push_back(std::move(x));
  }
  return k;
}

inline bool is_nonsingular(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

/// Exactly one 1 in every row and every column.
inline bool is_permutation(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  std::vector<bool> seen(m.cols(), false);
  for (const auto& r : m) {
    if (r.weight() != 1) return false;
    const auto j = *r.leading_index();
    if (seen[j]) return false;
    seen[j] = true;
  }
  return true;
}

}  // namespace triorth

template <>
struct std::hash<triorth::Vector> {
  std::size_t operator()(const triorth::Vector& v) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(v.size());
    for (auto w : v.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

#endif  // TRIORTH_GF2_HPP
