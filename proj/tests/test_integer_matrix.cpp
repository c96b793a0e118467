#include "morseflow/integer_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace morseflow;
using Rational = boost::multiprecision::cpp_rational;

namespace {

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -9, int hi = 9) {
  IntegerMatrix m(rows, cols);
  std::uniform_int_distribution<int> entry(lo, hi);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

// Rank over Q by plain Gaussian elimination on rationals.
std::size_t rational_rank(const IntegerMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rational(a(i, j));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < a.cols(); ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    det += (c % 2 == 0 ? 1 : -1) * m[0][c] * cofactor_det(minor);
  }
  return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: D_k = gcd of all k x k
// minors, d_k = D_k / D_{k-1}.
std::vector<Integer> determinantal_invariants(const IntegerMatrix& a) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
        g = gcd(g, abs(cofactor_det(m)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

IntegerMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  auto m = IntegerMatrix::identity(n);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> f(-3, 3);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const auto a = idx(rng), b = idx(rng);
    if (a == b)
      m.swap_rows(a, (a + 1) % n);
    else
      m.add_row_multiple(a, b, Integer(f(rng)));
  }
  return m;
}

void expect_smith_form(const IntegerMatrix& a, const SmithForm& f) {
  ASSERT_EQ(f.U.rows(), a.rows());
  ASSERT_EQ(f.V.rows(), a.cols());
  EXPECT_EQ(f.U * a * f.V, f.D);
  EXPECT_EQ(abs(determinant(f.U)), 1);
  EXPECT_EQ(abs(determinant(f.V)), 1);
  for (std::size_t i = 0; i < f.D.rows(); ++i)
    for (std::size_t j = 0; j < f.D.cols(); ++j)
      if (i != j) {
        EXPECT_TRUE(f.D(i, j).is_zero());
      }
  const auto inv = f.invariant_factors();
  for (std::size_t i = 0; i < inv.size(); ++i) {
    EXPECT_GT(inv[i], 0);
    EXPECT_EQ(f.D(i, i), inv[i]) << "zero diagonal entries must trail";
    if (i > 0) {
      EXPECT_EQ(inv[i] % inv[i - 1], 0);
    }
  }
  EXPECT_EQ(inv.size(), rational_rank(a));
}

} // namespace

TEST(SmithNormalForm, Diag23) {
  const IntegerMatrix a{{2, 0}, {0, 3}};
  const auto f = smith_normal_form(a);
  EXPECT_EQ(f.D, (IntegerMatrix{{1, 0}, {0, 6}}));
  expect_smith_form(a, f);
}

TEST(SmithNormalForm, TwoByTwo) {
  const IntegerMatrix a{{2, 4}, {6, 8}};
  const auto f = smith_normal_form(a);
  EXPECT_EQ(f.D, (IntegerMatrix{{2, 0}, {0, 4}}));
  expect_smith_form(a, f);
}

TEST(SmithNormalForm, ZeroMatrix) {
  const IntegerMatrix a(3, 5);
  const auto f = smith_normal_form(a);
  EXPECT_TRUE(f.D.is_zero());
  EXPECT_EQ(f.U, IntegerMatrix::identity(3));
  EXPECT_EQ(f.V, IntegerMatrix::identity(5));
}

TEST(SmithNormalForm, EmptyAndDegenerateShapes) {
  EXPECT_TRUE(smith_normal_form(IntegerMatrix(0, 4)).invariant_factors().empty());
  const IntegerMatrix col{{4}, {6}, {10}};
  EXPECT_EQ(smith_normal_form(col).invariant_factors(), std::vector<Integer>{2});
  const IntegerMatrix neg{{-5}};
  EXPECT_EQ(smith_normal_form(neg).D, (IntegerMatrix{{5}}));
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const auto a = random_matrix(rng, n, n);
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    EXPECT_EQ(determinant(a), cofactor_det(rows));
  }
  EXPECT_EQ(determinant(IntegerMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntegerMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(SmithNormalForm, MatchesDeterminantalDivisors) {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    // Small entries and scaled rows produce nontrivial invariant factors.
    auto a = random_matrix(rng, r, c, -3, 3);
    const int scale = std::uniform_int_distribution<int>(1, 4)(rng);
    for (std::size_t j = 0; j < c; ++j) a(0, j) *= scale;
    EXPECT_EQ(smith_invariant_factors(a), determinantal_invariants(a));
  }
}

TEST(SmithNormalForm, RandomPropertySuite) {
  std::mt19937 rng(2026);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const auto a = random_matrix(rng, r, c);
    expect_smith_form(a, smith_normal_form(a));
  }
}

TEST(SmithNormalForm, InvariantUnderUnimodularChangeOfBasis) {
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    // Low rank with repeated factors keeps the test away from the trivial
    // all-ones case.
    auto a = random_matrix(rng, r, std::min<std::size_t>(c, 3), -4, 4) *
             random_matrix(rng, std::min<std::size_t>(c, 3), c, -4, 4);
    const auto p = random_unimodular(rng, r);
    const auto q = random_unimodular(rng, c);
    EXPECT_EQ(smith_invariant_factors(p * a * q), smith_invariant_factors(a));
  }
}
