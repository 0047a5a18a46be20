#pragma once

#include "toriclci/numeric.hpp"

#include <vector>

namespace toriclci {

// Exact rational phase-I simplex with Bland's rule: does A x = b admit
// a solution with x >= 0?
bool exists_nonneg_solution(QMatrix a, QVector b);

// p in conv(pts)?  Points carry a leading 1, so the convex-combination
// constraint is part of the linear system.
bool in_convex_hull(const ZVector& p, const std::vector<ZVector>& pts);

// x in pos(gens), all exact.
bool in_nonneg_span(const QVector& x, const std::vector<QVector>& gens);

}  // namespace toriclci
