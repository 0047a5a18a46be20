#pragma once

#include "toriclci/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toriclci {

// The free-parameter matrix m: d-1 rows, row i holding the free entries
// m_{i,1},...,m_{i,i}.  The full (d-1) x d matrix has structural zeros
// m_{i,j} = 0 for j > i.
struct FreeParamMatrix {
  int d = 0;
  std::vector<std::vector<Int>> rows;

  // Entry m_{i,j} of the full matrix, 1-based; zero for j > i.
  Int entry(int i, int j) const {
    const auto& r = rows[static_cast<std::size_t>(i - 1)];
    return j <= static_cast<int>(r.size()) ? r[static_cast<std::size_t>(j - 1)] : Int(0);
  }

  // Row m_i as a length-d covector.
  ZCovector full_row(int i) const;

  // The full (d-1) x d matrix.
  ZMatrix full_matrix() const;
};

FreeParamMatrix make_free_params(int d, std::vector<std::vector<Int>> rows);

// First `levels` rows as a free-parameter matrix of dimension levels + 1.
FreeParamMatrix truncated(const FreeParamMatrix& m, int levels);

// epsilon = (eps_1,...,eps_{d-1}) with entries in {0,1}
using Epsilon = std::vector<int>;

// bit i-1 of mask carries eps_i
Epsilon epsilon_from_mask(std::uint32_t mask, int len);

// Throws ZeroRowError / BadShapeError / NonPositiveLeadError.
void validate_structure(const FreeParamMatrix& m);

// The point v(eps) = (1, v_2(eps), ..., v_d(eps))^T via the recursion
// v_k = eps_{k-1} (m_{k-1,1} + sum_{l=2}^{k-1} m_{k-1,l} v_l).
ZVector vertex_point(const FreeParamMatrix& m, const Epsilon& eps);

// Same, for an epsilon prefix of length `len`: coordinates above level
// len + 1 stay zero.
ZVector vertex_point_prefix(const FreeParamMatrix& m, std::uint32_t mask, int len);

// The point family S_m^(level): 2^{level-1} points keyed by prefix mask.
struct VertexFamily {
  int level = 0;
  std::vector<ZVector> points;  // index = epsilon-prefix mask
};

VertexFamily vertex_family(const FreeParamMatrix& m, int level);

struct AdmissibilityWitness {
  int level;        // the level i whose pairing went negative
  Epsilon epsilon;  // length i-1, last bit forced to 1
  Int pairing;
};

struct AdmissibilityResult {
  bool admissible;
  std::optional<AdmissibilityWitness> witness;
};

// <m_{i-1}, v> >= 0 for every point v of every level i-1 family,
// i = 2..d.  The check runs on the finite family S: the pairing is affine
// on the polytope and vert(P) is contained in S, so the family decides it.
AdmissibilityResult is_admissible(const FreeParamMatrix& m);

// One prism level: <lower, x> >= 0 encodes 0 <= x_i and
// <upper, x> >= 0 encodes x_i <= <m_{i-1}, x'>, on the hyperplane x_1 = 1.
struct FacetPair {
  int level;  // i in 2..d
  ZCovector lower;
  ZCovector upper;
};

std::vector<FacetPair> h_description(const FreeParamMatrix& m);

// Distinct points of the family that are vertices of its convex hull,
// in first-occurrence order.  Exact rational feasibility decides whether
// a point is a convex combination of the remaining ones.
std::vector<ZVector> extreme_points(const VertexFamily& family);

// True iff the polytope is a basic (d-1)-simplex: exactly d extreme
// points whose column matrix has determinant +-1.  True means the
// associated cone is smooth.
bool is_basic_simplex(const FreeParamMatrix& m);

}  // namespace toriclci
