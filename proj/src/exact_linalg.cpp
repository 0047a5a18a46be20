#include "toriclci/exact_linalg.hpp"

#include "toriclci/errors.hpp"

#include <cstdint>
#include <vector>

namespace toriclci {

Int det(const ZMatrix& input) {
  if (input.rows() != input.cols())
    throw DimensionError("det: matrix is " + std::to_string(input.rows()) + "x" +
                         std::to_string(input.cols()));
  const Eigen::Index n = input.rows();
  if (n == 0) return 1;

  ZMatrix m = input;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.row(k).swap(m.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        // exact by the Bareiss identity
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

ZMatrix mat_mul(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  return a * b;
}

bool is_mixed(const ZMatrix& m) {
  if (m.cols() == 0) return true;
  if (m.rows() == 0) return false;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    bool pos = false, neg = false;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      int s = sgn(m(r, c));
      pos |= s > 0;
      neg |= s < 0;
    }
    if (!pos || !neg) return false;
  }
  return true;
}

namespace {

// Enumerate k-subsets of items, calling fn(subset) until it returns true.
bool any_combination(const std::vector<int>& items, int k,
                     const std::function<bool(const std::vector<int>&)>& fn) {
  const int n = static_cast<int>(items.size());
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> subset(k);
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = items[idx[i]];
    if (fn(subset)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_dominating(const ZMatrix& m) {
  const int nr = static_cast<int>(m.rows());
  const int nc = static_cast<int>(m.cols());
  const int max_rho = std::min(nr, nc);

  // Row masks of positive / negative entries per column.  A column lacking
  // one of the signs can never join a mixed submatrix.
  std::vector<std::uint64_t> pos(nc, 0), neg(nc, 0);
  std::vector<int> usable;
  for (int c = 0; c < nc; ++c) {
    for (int r = 0; r < nr; ++r) {
      int s = sgn(m(r, c));
      if (s > 0) pos[c] |= std::uint64_t(1) << r;
      if (s < 0) neg[c] |= std::uint64_t(1) << r;
    }
    if (pos[c] != 0 && neg[c] != 0) usable.push_back(c);
  }

  // 1x1 submatrices are never mixed, so rho starts at 2.
  for (int rho = 2; rho <= max_rho; ++rho) {
    if (rho > static_cast<int>(usable.size())) break;
    bool found = any_combination(usable, rho, [&](const std::vector<int>& cols) {
      std::uint64_t universe = 0;
      for (int c : cols) universe |= pos[c] | neg[c];
      std::vector<int> rows;
      for (int r = 0; r < nr; ++r)
        if (universe & (std::uint64_t(1) << r)) rows.push_back(r);
      if (static_cast<int>(rows.size()) < rho) return false;
      return any_combination(rows, rho, [&](const std::vector<int>& rs) {
        std::uint64_t rmask = 0;
        for (int r : rs) rmask |= std::uint64_t(1) << r;
        for (int c : cols)
          if ((rmask & pos[c]) == 0 || (rmask & neg[c]) == 0) return false;
        return true;  // mixed rho x rho block
      });
    });
    if (found) return false;
  }
  return true;
}

}  // namespace toriclci
