#pragma once

#include "toriclci/nakajima.hpp"
#include "toriclci/numeric.hpp"

#include <random>
#include <vector>

namespace toriclci::testing {

// Independent determinant oracle: literal cofactor expansion along the
// first row.  Exponential, fine for the sizes the tests use.
inline Int det_cofactor(const ZMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    ZMatrix minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index j = 0, jj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    Int term = m(0, c) * det_cofactor(minor);
    if (c % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

inline ZMatrix random_zmatrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  ZMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Row-wise rejection sampler for admissible instances: row i is redrawn
// until it pairs nonnegatively with every point of the current family.
// The all-zero row and a nonpositive lead are redrawn as well.
inline FreeParamMatrix random_admissible(std::mt19937_64& rng, int d, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  std::uniform_int_distribution<int> lead(1, hi < 1 ? 1 : hi);
  while (true) {
    FreeParamMatrix m;
    m.d = d;
    m.rows.push_back({Int(lead(rng))});
    bool ok = true;
    for (int i = 2; i <= d - 1 && ok; ++i) {
      VertexFamily fam = vertex_family(m, i);  // rows 1..i-1 determine level i
      bool found = false;
      for (int attempt = 0; attempt < 400 && !found; ++attempt) {
        std::vector<Int> row(static_cast<std::size_t>(i));
        bool zero = true;
        for (auto& e : row) {
          e = entry(rng);
          zero &= e == 0;
        }
        if (zero) continue;
        m.rows.push_back(std::move(row));
        bool nonneg = true;
        for (const ZVector& v : fam.points)
          if (pairing(m.full_row(i), v) < 0) {
            nonneg = false;
            break;
          }
        if (nonneg)
          found = true;
        else
          m.rows.pop_back();
      }
      ok = found;
    }
    if (ok) return m;
  }
}

// Random structurally valid (not necessarily admissible) instance.
inline FreeParamMatrix random_structural(std::mt19937_64& rng, int d, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  std::uniform_int_distribution<int> lead(1, hi < 1 ? 1 : hi);
  FreeParamMatrix m;
  m.d = d;
  m.rows.push_back({Int(lead(rng))});
  for (int i = 2; i <= d - 1; ++i) {
    std::vector<Int> row(static_cast<std::size_t>(i));
    while (true) {
      bool zero = true;
      for (auto& e : row) {
        e = entry(rng);
        if (e != 0) zero = false;
      }
      if (!zero) break;
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

}  // namespace toriclci::testing
