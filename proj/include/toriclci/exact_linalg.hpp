#pragma once

#include "toriclci/numeric.hpp"

namespace toriclci {

// Exact determinant by fraction-free (Bareiss) elimination with row
// pivoting.  Throws DimensionError on non-square input.
Int det(const ZMatrix& m);

template <typename Derived>
Int det(const Eigen::MatrixBase<Derived>& m) {
  return det(ZMatrix(m));
}

// Exact product with an explicit shape check.
ZMatrix mat_mul(const ZMatrix& a, const ZMatrix& b);

// Every column has a strictly positive and a strictly negative entry.
bool is_mixed(const ZMatrix& m);

// No rho x rho submatrix (any row subset x any column subset,
// 1 <= rho <= min(rows, cols)) is mixed.  Subset enumeration with early
// pruning: column subsets whose individual sign patterns cannot produce a
// mixed square block are skipped before row subsets are tried.
bool is_dominating(const ZMatrix& m);

}  // namespace toriclci
