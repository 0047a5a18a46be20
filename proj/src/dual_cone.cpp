#include "toriclci/dual_cone.hpp"

#include "toriclci/errors.hpp"
#include "toriclci/exact_linalg.hpp"

namespace toriclci {

DualGenerators dual_generators(const FreeParamMatrix& m) {
  DualGenerators l;
  l.d = m.d;
  l.gens.reserve(static_cast<std::size_t>(2 * m.d - 1));
  for (int k = 1; k <= m.d; ++k) l.gens.push_back(unit_covector(m.d, k));
  for (int i = 1; i <= m.d - 1; ++i)
    l.gens.push_back(m.full_row(i) - unit_covector(m.d, i + 1));
  return l;
}

std::vector<BasicCone> basic_cones(const FreeParamMatrix& m) {
  const int d = m.d;
  std::vector<BasicCone> cones;
  cones.reserve(std::size_t(1) << (d - 1));
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << (d - 1)); ++mask) {
    BasicCone c;
    c.eps = epsilon_from_mask(mask, d - 1);
    c.gens.push_back(unit_covector(d, 1));
    for (int i = 1; i <= d - 1; ++i) {
      if (c.eps[static_cast<std::size_t>(i - 1)])
        c.gens.push_back(unit_covector(d, i + 1));
      else
        c.gens.push_back(m.full_row(i) - unit_covector(d, i + 1));
    }
    ZMatrix g(d, d);
    for (int r = 0; r < d; ++r) g.row(r) = c.gens[static_cast<std::size_t>(r)];
    Int dg = det(g);
    if (dg != 1 && dg != -1) throw DetNotUnitError(c.eps);
    cones.push_back(std::move(c));
  }
  return cones;
}

EliminationPlan elimination_plan(const FreeParamMatrix& m) {
  const int d = m.d;
  EliminationPlan plan;

  for (int k = 1; k <= d - 1; ++k) {
    const ZCovector target = unit_covector(d, k);
    for (int gamma = k; gamma <= d - 1; ++gamma)
      if (m.full_row(gamma) == target) {
        plan.q_set[k] = gamma;
        break;
      }
  }
  for (int l = 1; l <= d - 2; ++l) {
    const ZCovector target = m.full_row(l) - unit_covector(d, l + 1);
    for (int delta = l + 1; delta <= d - 1; ++delta)
      if (m.full_row(delta) == target) {
        plan.r_set[l] = delta;
        break;
      }
  }

  DualGenerators l = dual_generators(m);
  for (int pos = 1; pos <= 2 * d - 1; ++pos) {
    bool dropped = (pos <= d && plan.q_set.count(pos)) ||
                   (pos > d && plan.r_set.count(pos - d));
    if (!dropped) {
      plan.hilbert_positions.push_back(pos);
      plan.hilbert.push_back(l.at(pos));
    }
  }
  return plan;
}

}  // namespace toriclci
