#include "toriclci/nakajima.hpp"

#include "toriclci/errors.hpp"
#include "toriclci/exact_linalg.hpp"
#include "toriclci/simplex.hpp"

#include <algorithm>

namespace toriclci {

ZCovector FreeParamMatrix::full_row(int i) const {
  ZCovector r = ZCovector::Zero(d);
  const auto& src = rows[static_cast<std::size_t>(i - 1)];
  for (std::size_t j = 0; j < src.size() && j < static_cast<std::size_t>(d); ++j)
    r(static_cast<Eigen::Index>(j)) = src[j];
  return r;
}

ZMatrix FreeParamMatrix::full_matrix() const {
  ZMatrix f = ZMatrix::Zero(d - 1, d);
  for (int i = 1; i <= d - 1; ++i) f.row(i - 1) = full_row(i);
  return f;
}

FreeParamMatrix make_free_params(int d, std::vector<std::vector<Int>> rows) {
  FreeParamMatrix m;
  m.d = d;
  m.rows = std::move(rows);
  return m;
}

FreeParamMatrix truncated(const FreeParamMatrix& m, int levels) {
  FreeParamMatrix t;
  t.d = levels + 1;
  t.rows.assign(m.rows.begin(), m.rows.begin() + levels);
  return t;
}

Epsilon epsilon_from_mask(std::uint32_t mask, int len) {
  Epsilon e(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) e[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
  return e;
}

void validate_structure(const FreeParamMatrix& m) {
  if (m.d < 2) throw BadShapeError(-1, "dimension d must be >= 2");
  // every construction walks the 2^{d-1} epsilon choices
  if (m.d > 24) throw BadShapeError(-1, "dimension d > 24 is outside the supported range");
  if (static_cast<int>(m.rows.size()) != m.d - 1)
    throw BadShapeError(-1, "expected " + std::to_string(m.d - 1) + " rows, got " +
                                std::to_string(m.rows.size()));
  for (int i = 1; i <= m.d - 1; ++i) {
    const auto& r = m.rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(r.size()) != i)
      throw BadShapeError(i, "row " + std::to_string(i) + " must have " + std::to_string(i) +
                                 " free entries, got " + std::to_string(r.size()));
    bool all_zero = std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
    if (all_zero) throw ZeroRowError(i);
  }
  if (m.rows[0][0] < 1) throw NonPositiveLeadError();
}

ZVector vertex_point_prefix(const FreeParamMatrix& m, std::uint32_t mask, int len) {
  ZVector v = ZVector::Zero(m.d);
  v(0) = 1;
  for (int k = 2; k <= len + 1; ++k) {
    if (((mask >> (k - 2)) & 1u) == 0) continue;
    v(k - 1) = pairing(m.full_row(k - 1), v);
  }
  return v;
}

ZVector vertex_point(const FreeParamMatrix& m, const Epsilon& eps) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (eps[i]) mask |= std::uint32_t(1) << i;
  return vertex_point_prefix(m, mask, static_cast<int>(eps.size()));
}

VertexFamily vertex_family(const FreeParamMatrix& m, int level) {
  VertexFamily fam;
  fam.level = level;
  const std::uint32_t count = std::uint32_t(1) << (level - 1);
  fam.points.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask)
    fam.points.push_back(vertex_point_prefix(m, mask, level - 1));
  return fam;
}

AdmissibilityResult is_admissible(const FreeParamMatrix& m) {
  for (int i = 2; i <= m.d; ++i) {
    const ZCovector row = m.full_row(i - 1);
    const std::uint32_t count = std::uint32_t(1) << (i - 2);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      ZVector v = vertex_point_prefix(m, mask, i - 2);
      Int p = pairing(row, v);
      if (p < 0) {
        AdmissibilityWitness w;
        w.level = i;
        w.epsilon = epsilon_from_mask(mask | (std::uint32_t(1) << (i - 2)), i - 1);
        w.pairing = p;
        return {false, w};
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<FacetPair> h_description(const FreeParamMatrix& m) {
  std::vector<FacetPair> facets;
  facets.reserve(static_cast<std::size_t>(m.d - 1));
  for (int i = 2; i <= m.d; ++i) {
    FacetPair f;
    f.level = i;
    f.lower = unit_covector(m.d, i);
    f.upper = m.full_row(i - 1) - unit_covector(m.d, i);
    facets.push_back(std::move(f));
  }
  return facets;
}

std::vector<ZVector> extreme_points(const VertexFamily& family) {
  // dedupe, first occurrence wins
  std::vector<ZVector> distinct;
  for (const ZVector& p : family.points) {
    bool seen = false;
    for (const ZVector& q : distinct)
      if (p == q) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back(p);
  }

  std::vector<ZVector> extremes;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    std::vector<ZVector> others;
    others.reserve(distinct.size() - 1);
    for (std::size_t j = 0; j < distinct.size(); ++j)
      if (j != i) others.push_back(distinct[j]);
    if (!in_convex_hull(distinct[i], others)) extremes.push_back(distinct[i]);
  }
  return extremes;
}

bool is_basic_simplex(const FreeParamMatrix& m) {
  std::vector<ZVector> verts = extreme_points(vertex_family(m, m.d));
  if (static_cast<int>(verts.size()) != m.d) return false;
  ZMatrix v(m.d, m.d);
  for (int c = 0; c < m.d; ++c) v.col(c) = verts[static_cast<std::size_t>(c)];
  Int dv = det(v);
  return dv == 1 || dv == -1;
}

}  // namespace toriclci
