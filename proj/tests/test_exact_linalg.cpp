#include "toriclci/exact_linalg.hpp"

#include "toriclci/errors.hpp"
#include "toriclci/oracle.hpp"

#include <doctest.h>

#include "test_support.hpp"

#include <random>

using namespace toriclci;
using toriclci::testing::det_cofactor;
using toriclci::testing::random_zmatrix;

namespace {

ZMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  ZMatrix m(static_cast<Eigen::Index>(rows.size()),
            static_cast<Eigen::Index>(rows.empty() ? 0 : rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("det: identity") { CHECK(det(ZMatrix::Identity(3, 3)) == 1); }

TEST_CASE("det: dual generator rows, cofactor oracle") {
  // rows e_1, e_2, m_2 - e_3 for m_2 = (2,1,0)
  ZMatrix m = from_rows({{1, 0, 0}, {0, 1, 0}, {2, 1, -1}});
  CHECK(det(m) == -1);
  CHECK(det_cofactor(m) == -1);
}

TEST_CASE("det: non-square input") {
  CHECK_THROWS_AS(det(ZMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("det: singular and pivoting cases") {
  CHECK(det(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(det(from_rows({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("det agrees with cofactor expansion and is multiplicative") {
  std::mt19937_64 rng(20240511);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 5);
    ZMatrix a = random_zmatrix(rng, n, n, -4, 4);
    ZMatrix b = random_zmatrix(rng, n, n, -4, 4);
    Int da = det(a), db = det(b);
    CHECK(da == det_cofactor(a));
    CHECK(det(mat_mul(a, b)) == da * db);
  }
}

TEST_CASE("mat_mul: identity and shape errors") {
  std::mt19937_64 rng(7);
  ZMatrix a = random_zmatrix(rng, 3, 4, -5, 5);
  CHECK(mat_mul(a, ZMatrix::Identity(4, 4)) == a);
  CHECK(mat_mul(ZMatrix::Identity(3, 3), a) == a);
  CHECK_THROWS_AS(mat_mul(a, ZMatrix::Identity(3, 3)), DimensionError);
}

TEST_CASE("is_mixed") {
  CHECK_FALSE(is_mixed(ZMatrix::Zero(2, 2)));
  CHECK(is_mixed(from_rows({{1}, {-1}})));
  // B for rows [[2],[2,1]]: columns (2,-1,0,-1,0) and (2,1,-1,0,-1)
  ZMatrix b = from_rows({{2, 2}, {-1, 1}, {0, -1}, {-1, 0}, {0, -1}});
  CHECK(is_mixed(b));
  // a column without a negative entry kills mixedness
  CHECK_FALSE(is_mixed(from_rows({{1, 1}, {-1, 2}, {3, 0}})));
}

TEST_CASE("is_dominating: the 2x2 mixed matrix is not dominating") {
  CHECK_FALSE(is_dominating(from_rows({{1, -1}, {-1, 1}})));
}

TEST_CASE("is_dominating: staircase matrices with nonnegative blocks") {
  // the (2d-1) x (d-1) shape with alpha/beta >= 0, -1 subdiagonals and at
  // least one positive entry per column is always dominating
  std::mt19937_64 rng(99);
  for (int it = 0; it < 50; ++it) {
    int d = 3 + static_cast<int>(rng() % 4);
    ZMatrix m = ZMatrix::Zero(2 * d - 1, d - 1);
    for (int j = 1; j <= d - 1; ++j) {
      for (int i = 1; i <= j; ++i) m(i - 1, j - 1) = rng() % 3;
      m(j, j - 1) = -1;
      for (int i = 2; i <= j; ++i) m(d + i - 2, j - 1) = rng() % 3;
      m(d + j - 1, j - 1) = -1;
      bool has_positive = false;
      for (int r = 0; r < 2 * d - 1; ++r) has_positive |= m(r, j - 1) > 0;
      if (!has_positive) m(0, j - 1) = 1 + rng() % 2;
    }
    CHECK(is_dominating(m));
  }
}

TEST_CASE("is_dominating agrees with the literal subset search") {
  std::mt19937_64 rng(314159);
  for (int it = 0; it < 300; ++it) {
    int rows = 1 + static_cast<int>(rng() % 9);
    int cols = 1 + static_cast<int>(rng() % 5);
    ZMatrix m = random_zmatrix(rng, rows, cols, -2, 2);
    CHECK(is_dominating(m) == dominating_brute(m));
  }
}
