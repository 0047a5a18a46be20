#include "toriclci/simplex.hpp"

#include "toriclci/errors.hpp"

namespace toriclci {

// Phase-I tableau: minimize the sum of artificial variables.  Rows
// 0..m-1 hold the constraints, row m the reduced-cost row; column n+m is
// the right-hand side.  Bland's rule on both the entering and the leaving
// choice rules out cycling, so termination is unconditional.
bool exists_nonneg_solution(QMatrix a, QVector b) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();

  for (Eigen::Index i = 0; i < m; ++i)
    if (b(i) < 0) {
      a.row(i) = -a.row(i);
      b(i) = -b(i);
    }

  QMatrix t = QMatrix::Zero(m + 1, n + m + 1);
  t.block(0, 0, m, n) = a;
  for (Eigen::Index i = 0; i < m; ++i) {
    t(i, n + i) = 1;
    t(i, n + m) = b(i);
  }
  // reduced costs w.r.t. the all-artificial basis
  for (Eigen::Index j = 0; j < n; ++j) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = -s;
  }
  {
    Rat s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s += b(i);
    t(m, n + m) = -s;  // minus the current objective value
  }

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j)
      if (t(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    Rat best_ratio = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rat ratio = t(i, n + m) / t(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0)
      throw InternalCheckError("UnboundedSearch", "phase-I objective unbounded");

    Rat pivot = t(leave, enter);
    t.row(leave) /= pivot;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave) continue;
      if (t(i, enter) == 0) continue;
      Rat f = t(i, enter);
      t.row(i) -= f * t.row(leave);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  return t(m, n + m) == 0;
}

bool in_convex_hull(const ZVector& p, const std::vector<ZVector>& pts) {
  if (pts.empty()) return false;
  const Eigen::Index d = p.size();
  QMatrix a(d, static_cast<Eigen::Index>(pts.size()));
  QVector b(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    b(i) = Rat(p(i));
    for (std::size_t j = 0; j < pts.size(); ++j)
      a(i, static_cast<Eigen::Index>(j)) = Rat(pts[j](i));
  }
  return exists_nonneg_solution(std::move(a), std::move(b));
}

bool in_nonneg_span(const QVector& x, const std::vector<QVector>& gens) {
  if (gens.empty()) return x.isZero(0);
  const Eigen::Index d = x.size();
  QMatrix a(d, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) a.col(static_cast<Eigen::Index>(j)) = gens[j];
  return exists_nonneg_solution(std::move(a), x);
}

}  // namespace toriclci
