#pragma once

#include "toriclci/nakajima.hpp"
#include "toriclci/numeric.hpp"

#include <map>
#include <vector>

namespace toriclci {

// The ordered generator list L of the dual cone.  Position k (1-based)
// is the meaning of variable z_k: positions 1..d hold e_1,...,e_d,
// positions d+1..2d-1 hold m_1 - e_2, ..., m_{d-1} - e_d.
struct DualGenerators {
  int d = 0;
  std::vector<ZCovector> gens;

  const ZCovector& at(int position) const {  // 1-based
    return gens[static_cast<std::size_t>(position - 1)];
  }
  int count() const { return static_cast<int>(gens.size()); }
};

DualGenerators dual_generators(const FreeParamMatrix& m);

// C_eps = pos({e_1} u { eps_i e_{i+1} + (1-eps_i)(m_i - e_{i+1}) }),
// one of the 2^{d-1} basic cones subdividing the dual cone.
struct BasicCone {
  Epsilon eps;
  std::vector<ZCovector> gens;  // d generators, e_1 first
};

// All 2^{d-1} cones in mask order.  Each determinant is checked to be a
// unit; a failure throws DetNotUnitError (a bug, not bad input).
std::vector<BasicCone> basic_cones(const FreeParamMatrix& m);

// Which L positions drop out of the Hilbert basis, and why:
//   q_set: k -> gamma_k   with e_k = m_{gamma_k},      gamma_k in {k,...,d-1}
//   r_set: l -> delta_l   with m_l - e_{l+1} = m_{delta_l}, delta_l in {l+1,...,d-1}
// Smallest qualifying index wins when several exist.  The reducibility
// test v = m_i runs over i in {1,...,d-1}: the printed statement starts
// at i = 2, but index 1 is required for consistency (m_1 = e_1 makes e_1
// reducible), and the brute-force oracle adjudicates the reading.
struct EliminationPlan {
  std::map<int, int> q_set;
  std::map<int, int> r_set;
  std::vector<int> hilbert_positions;  // surviving 1-based positions, ascending
  std::vector<ZCovector> hilbert;
};

EliminationPlan elimination_plan(const FreeParamMatrix& m);

}  // namespace toriclci
