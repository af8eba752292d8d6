#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "triorth/gf2.hpp"

using namespace triorth;
using namespace triorth::testing;

TEST(Vector, WeightParityAndConstructors) {
  EXPECT_EQ(V("10110").weight(), 3U);
  EXPECT_TRUE(V("10110").parity());
  EXPECT_EQ(Vector::all_ones(70).weight(), 70U);
  EXPECT_EQ(Vector::all_ones(5).to_string(), "11111");
  EXPECT_EQ(Vector::unit(4, 2).to_string(), "0010");
  EXPECT_TRUE(Vector::zeros(9).is_zero());
  EXPECT_EQ(Vector::from_mask(5, 0b10011).to_string(), "10011");
  EXPECT_THROW(Vector::from_string("1021"), std::invalid_argument);
}

TEST(Vector, SupportAndLeadingIndexAcrossWords) {
  Vector v(130);
  v.set(3);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.support(), (std::vector<std::size_t>{3, 64, 129}));
  EXPECT_EQ(v.leading_index(), 3U);
  EXPECT_FALSE(Vector(10).leading_index().has_value());
}

TEST(Vector, CanonicalOrderIsLexicographicColumnZeroFirst) {
  EXPECT_LT(V("0011"), V("0100"));
  EXPECT_LT(V("0111"), V("1000"));
  EXPECT_LT(V("111"), V("0000"));  // shorter first
  Vector a(80), b(80);
  a.set(70);
  b.set(10);
  EXPECT_LT(a, b);
}

TEST(Schur, Examples) {
  EXPECT_EQ(schur(V("11000"), V("01100")), V("01000"));
  EXPECT_EQ(schur(V("111"), V("110")), V("110"));
  const auto u = V("1011001");
  EXPECT_EQ(schur(u, u), u);
  EXPECT_THROW(schur(V("11"), V("110")), DimensionError);
}

TEST(Dot, Examples) {
  EXPECT_FALSE(dot(V("11100"), V("11000")));
  EXPECT_TRUE(dot(V("111"), V("001")));
  EXPECT_FALSE(dot(V("10111"), Vector::zeros(5)));
  EXPECT_THROW(dot(V("11"), V("110")), DimensionError);
}

TEST(Vector, AlgebraicIdentitiesOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 150;
    const auto u = random_vector(n, rng);
    const auto v = random_vector(n, rng);
    const auto w = random_vector(n, rng);
    EXPECT_EQ((u + v).weight(), u.weight() + v.weight() - 2 * schur(u, v).weight());
    EXPECT_EQ((u + v).parity(), u.parity() != v.parity());
    EXPECT_EQ(dot(u, v), schur(u, v).parity());
    EXPECT_EQ(dot(u, u), u.parity());
    EXPECT_EQ(schur(u, v), schur(v, u));
    EXPECT_EQ(schur(schur(u, v), w), schur(u, schur(v, w)));
    EXPECT_EQ(triple_parity(u, v, w), schur(schur(u, v), w).parity());
  }
}

TEST(Rref, Examples) {
  const auto e = rref(M({"11000", "01100", "00011"}));
  EXPECT_EQ(e.basis, M({"10100", "01100", "00011"}));
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1, 3}));  // columns 1, 2, 4

  const auto id = rref(Matrix::identity(6));
  EXPECT_EQ(id.basis, Matrix::identity(6));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));

  const auto z = rref(Matrix::zeros(3, 4));
  EXPECT_EQ(z.basis.rows(), 0U);
  EXPECT_EQ(z.basis.cols(), 4U);
  EXPECT_TRUE(z.pivots.empty());
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(M({"10000", "01000", "00100", "00011"})), M({"00011"}));
  EXPECT_EQ(kernel(Matrix::identity(5)).rows(), 0U);
  EXPECT_EQ(kernel(Matrix::zeros(2, 4)), Matrix::identity(4));
}

TEST(MatrixOps, ProductTransposeMember) {
  const auto g = M({"11000", "01100", "00011"});
  EXPECT_EQ(Matrix::identity(3) * g, g);
  EXPECT_EQ(g.transpose().transpose(), g);
  EXPECT_EQ(g.transpose().rows(), 5U);
  EXPECT_THROW(g * g, DimensionError);
  EXPECT_FALSE(member(g, V("11100")));
  EXPECT_TRUE(member(g, Vector::zeros(5)));
  EXPECT_TRUE(member(g, V("10100")));
  EXPECT_THROW(member(g, V("111")), DimensionError);
  EXPECT_THROW(Matrix(3, {V("11")}), DimensionError);
}

TEST(MatrixOps, PermutationAndNonsingular) {
  EXPECT_TRUE(is_permutation(M({"010", "001", "100"})));
  EXPECT_FALSE(is_permutation(M({"010", "010", "100"})));
  EXPECT_FALSE(is_permutation(M({"110", "001", "100"})));
  EXPECT_TRUE(is_nonsingular(M({"110", "011", "001"})));
  EXPECT_FALSE(is_nonsingular(M({"110", "011", "101"})));
}

TEST(Rref, RowspaceAndRankNullityProperties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 100;
    const std::size_t r = rng() % 12;
    const auto m = random_matrix(r, n, rng);
    const auto e = rref(m);
    // same row space, both directions
    for (const auto& row : m) EXPECT_TRUE(member(e, row));
    for (const auto& row : e.basis) EXPECT_TRUE(member(m, row));
    // echelon shape: strictly increasing pivots, each pivot column a unit column
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (i > 0) {
        EXPECT_LT(e.pivots[i - 1], e.pivots[i]);
      }
      for (std::size_t j = 0; j < e.basis.rows(); ++j) EXPECT_EQ(e.basis.get(j, e.pivots[i]), i == j);
    }
    const auto k = kernel(m);
    EXPECT_EQ(e.pivots.size() + k.rows(), n);
    for (const auto& x : k) {
      for (const auto& row : m) EXPECT_FALSE(dot(row, x));
    }
  }
}
