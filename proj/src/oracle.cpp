#include "toriclci/oracle.hpp"

#include "toriclci/errors.hpp"
#include "toriclci/exact_linalg.hpp"
#include "toriclci/json_io.hpp"
#include "toriclci/simplex.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace toriclci {

namespace {

// k-subsets of {lo, lo+1, ..., hi}, ascending, fn(subset) for each.
void for_each_subset(int lo, int hi, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(pick);
      return;
    }
    for (int v = start; v <= hi - (k - depth - 1); ++v) {
      pick[static_cast<std::size_t>(depth)] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(lo, 0);
}

int eps_at(const Epsilon& eps, int i) {  // eps_i, 1-based
  return eps[static_cast<std::size_t>(i - 1)];
}

}  // namespace

Int q_sum_brute(const FreeParamMatrix& m, const Epsilon& eps, int k, int n) {
  Int total = 0;
  for_each_subset(1, n - 2, k, [&](const std::vector<int>& mid) {
    std::vector<int> chain;
    chain.push_back(0);
    chain.insert(chain.end(), mid.begin(), mid.end());
    chain.push_back(n - 1);
    Int prod = 1;
    for (std::size_t j = 1; j < chain.size(); ++j)
      prod *= eps_at(eps, chain[j]) * m.entry(chain[j], chain[j - 1] + 1);
    total += prod;
  });
  return total;
}

Int q_sum_dp(const FreeParamMatrix& m, const Epsilon& eps, int k, int n) {
  // q[kk][nn], nn = 2..n, kk = 0..nn-2
  std::vector<std::vector<Int>> q(static_cast<std::size_t>(k + 1),
                                  std::vector<Int>(static_cast<std::size_t>(n + 1), Int(0)));
  for (int nn = 2; nn <= n; ++nn)
    q[0][static_cast<std::size_t>(nn)] = eps_at(eps, nn - 1) * m.entry(nn - 1, 1);
  for (int kk = 1; kk <= k; ++kk)
    for (int nn = kk + 2; nn <= n; ++nn) {
      Int s = 0;
      for (int i = kk + 1; i <= nn - 1; ++i)
        s += m.entry(nn - 1, i) * q[static_cast<std::size_t>(kk - 1)][static_cast<std::size_t>(i)];
      q[static_cast<std::size_t>(kk)][static_cast<std::size_t>(nn)] = eps_at(eps, nn - 1) * s;
    }
  return q[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
}

Int p_sum_brute(const FreeParamMatrix& m, const Epsilon& eps, int k, int n) {
  const int d = m.d;
  Int total = 0;
  for_each_subset(n + 1, d - 2, k, [&](const std::vector<int>& mid) {
    std::vector<int> chain;
    chain.push_back(n);
    chain.insert(chain.end(), mid.begin(), mid.end());
    chain.push_back(d - 1);
    Int prod = 1;
    for (std::size_t j = 1; j < chain.size(); ++j)
      prod *= eps_at(eps, chain[j - 1]) * m.entry(chain[j], chain[j - 1] + 1);
    total += prod;
  });
  return total;
}

Int p_sum_dp(const FreeParamMatrix& m, const Epsilon& eps, int k, int n) {
  const int d = m.d;
  // p[l][nn] defined for nn = 1..d-2-l
  std::vector<std::vector<Int>> p(static_cast<std::size_t>(k + 1),
                                  std::vector<Int>(static_cast<std::size_t>(d), Int(0)));
  for (int nn = 1; nn <= d - 2; ++nn)
    p[0][static_cast<std::size_t>(nn)] = eps_at(eps, nn) * m.entry(d - 1, nn + 1);
  for (int l = 1; l <= k; ++l)
    for (int nn = 1; nn <= d - 2 - l; ++nn) {
      Int s = 0;
      for (int j = nn + 1; j <= d - 1 - l; ++j)
        s += m.entry(j, nn + 1) * p[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(j)];
      p[static_cast<std::size_t>(l)][static_cast<std::size_t>(nn)] = eps_at(eps, nn) * s;
    }
  return p[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
}

Int positivity_sum_brute(const FreeParamMatrix& m, const Epsilon& eps) {
  const int d = m.d;
  Int total = 0;
  for (int k = 0; k <= d - 2; ++k) {
    for_each_subset(1, d - 2, k, [&](const std::vector<int>& mid) {
      std::vector<int> chain;
      chain.push_back(0);
      chain.insert(chain.end(), mid.begin(), mid.end());
      Int prod = m.entry(d - 1, chain.back() + 1);
      for (std::size_t j = 1; j < chain.size(); ++j)
        prod *= eps_at(eps, chain[j]) * m.entry(chain[j], chain[j - 1] + 1);
      total += prod;
    });
  }
  return total;
}

CheckResult check_prop_qus(const FreeParamMatrix& m) {
  const int d = m.d;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << (d - 1)); ++mask) {
    Epsilon eps = epsilon_from_mask(mask, d - 1);
    ZVector v = vertex_point(m, eps);
    for (int n = 2; n <= d; ++n) {
      Int closed = 0, dp = 0;
      for (int k = 0; k <= n - 2; ++k) {
        closed += q_sum_brute(m, eps, k, n);
        dp += q_sum_dp(m, eps, k, n);
      }
      if (v(n - 1) != closed || closed != dp)
        return CheckResult::fail("prop_qus",
                                 {{"epsilon", eps},
                                  {"n", n},
                                  {"recursive", v(n - 1).get_str()},
                                  {"chain_sum", closed.get_str()},
                                  {"recurrence_sum", dp.get_str()}});
    }
  }
  return CheckResult::ok("prop_qus");
}

CheckResult check_lamdasum(const FreeParamMatrix& m) {
  const int d = m.d;
  LambdaMuTable table;
  try {
    table = lambda_mu(m);
  } catch (const InternalCheckError& e) {
    return CheckResult::fail("lamdasum", {{"error", e.what()}});
  }

  Epsilon eps(static_cast<std::size_t>(d - 1), 0);
  for (int i = 1; i <= d - 2; ++i)
    eps[static_cast<std::size_t>(i - 1)] = table.lambda_last(i) < 0 ? 1 : 0;

  for (int n = 1; n <= d - 2; ++n) {
    Int chain = 0, dp = 0;
    for (int k = 0; k <= d - 2 - n; ++k) {
      chain += p_sum_brute(m, eps, k, n);
      dp += p_sum_dp(m, eps, k, n);
    }
    if (table.lambda_last(n) != chain || chain != dp)
      return CheckResult::fail("lamdasum", {{"n", n},
                                            {"lambda", table.lambda_last(n).get_str()},
                                            {"chain_sum", chain.get_str()},
                                            {"recurrence_sum", dp.get_str()}});
  }

  Int pos_sum = positivity_sum_brute(m, eps);
  if (table.mu_last(0) != pos_sum)
    return CheckResult::fail("lamdasum", {{"mu_0", table.mu_last(0).get_str()},
                                          {"positivity_sum", pos_sum.get_str()}});
  return CheckResult::ok("lamdasum");
}

// ---- bounded enumeration machinery ------------------------------------------

namespace {

struct DualGeometry {
  std::vector<ZVector> verts;  // all v(eps) in mask order
  std::vector<int> chosen;     // indices of d of them, linearly independent
  ZMatrix vmat;                // column c = verts[chosen[c]]
  ZMatrix adj;                 // adjugate of vmat
  Int detv;

  bool in_dual(const ZCovector& w) const {
    for (const ZVector& v : verts)
      if (pairing(w, v) < 0) return false;
    return true;
  }
};

int zrank(const ZMatrix& m) {
  QMatrix a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(i, j) = Rat(m(i, j));
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.row(piv).swap(a.row(row));
    for (Eigen::Index i = row + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Rat f = a(i, col) / a(row, col);
      a.row(i) -= f * a.row(row);
    }
    ++row;
    ++rank;
  }
  return rank;
}

ZMatrix adjugate(const ZMatrix& m) {
  const Eigen::Index n = m.rows();
  ZMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      ZMatrix minor(n - 1, n - 1);
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc) = m(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj(j, i) = cof;  // transpose of the cofactor matrix
    }
  return adj;
}

DualGeometry build_geometry(const FreeParamMatrix& m, bool scan_backward) {
  DualGeometry g;
  const int d = m.d;
  const std::uint32_t count = std::uint32_t(1) << (d - 1);
  for (std::uint32_t mask = 0; mask < count; ++mask)
    g.verts.push_back(vertex_point_prefix(m, mask, d - 1));

  std::vector<int> order(g.verts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (scan_backward) std::reverse(order.begin(), order.end());

  ZMatrix rows(0, d);
  for (int idx : order) {
    if (static_cast<int>(g.chosen.size()) == d) break;
    ZMatrix trial(rows.rows() + 1, d);
    trial.topRows(rows.rows()) = rows;
    trial.row(rows.rows()) = g.verts[static_cast<std::size_t>(idx)].transpose();
    if (zrank(trial) == trial.rows()) {
      rows = std::move(trial);
      g.chosen.push_back(idx);
    }
  }
  if (static_cast<int>(g.chosen.size()) != d)
    throw InternalCheckError("UnboundedSearch", "no nonsingular vertex submatrix exists");

  g.vmat = ZMatrix(d, d);
  for (int c = 0; c < d; ++c)
    g.vmat.col(c) = g.verts[static_cast<std::size_t>(g.chosen[static_cast<std::size_t>(c)])];
  g.adj = adjugate(g.vmat);
  g.detv = det(g.vmat);
  return g;
}

struct Box {
  std::vector<Int> lo, hi;
  double volume = 0;
};

std::string volume_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Integer bounds for covectors a with 0 <= <a, w_c> <= u_c on the chosen
// vertices: a = y V^{-1} with y_c in [0, u_c], V^{-1} = adj / det.
Box cramer_box(const DualGeometry& g, const std::vector<Int>& u) {
  const int d = static_cast<int>(g.vmat.rows());
  Box box;
  box.lo.resize(static_cast<std::size_t>(d));
  box.hi.resize(static_cast<std::size_t>(d));
  box.volume = 1;
  for (int j = 0; j < d; ++j) {
    Int num_lo = 0, num_hi = 0;
    for (int c = 0; c < d; ++c) {
      const Int& a = g.adj(c, j);
      if (a > 0)
        num_hi += u[static_cast<std::size_t>(c)] * a;
      else if (a < 0)
        num_lo += u[static_cast<std::size_t>(c)] * a;
    }
    Rat end1 = make_rat(num_lo, g.detv);
    Rat end2 = make_rat(num_hi, g.detv);
    if (end2 < end1) std::swap(end1, end2);
    Int lo = ceil_rat(end1), hi = floor_rat(end2);
    box.lo[static_cast<std::size_t>(j)] = lo;
    box.hi[static_cast<std::size_t>(j)] = hi;
    Int width = hi - lo + 1;
    if (width <= 0)
      box.volume = 0;
    else
      box.volume *= width.get_d();
  }
  return box;
}

// fn returns true to stop the sweep early
void enumerate_box(const Box& box, const std::function<bool(const ZCovector&)>& fn) {
  const int d = static_cast<int>(box.lo.size());
  if (box.volume == 0) return;
  ZCovector a(d);
  std::function<bool(int)> rec = [&](int j) -> bool {
    if (j == d) return fn(a);
    for (Int v = box.lo[static_cast<std::size_t>(j)]; v <= box.hi[static_cast<std::size_t>(j)];
         ++v) {
      a(j) = v;
      if (rec(j + 1)) return true;
    }
    return false;
  };
  rec(0);
}

std::vector<Int> chosen_pairings(const DualGeometry& g, const ZCovector& w) {
  std::vector<Int> u;
  u.reserve(g.chosen.size());
  for (int idx : g.chosen) u.push_back(pairing(w, g.verts[static_cast<std::size_t>(idx)]));
  return u;
}

bool is_reducible(const DualGeometry& g, const ZCovector& v, double volume_cap, bool& skipped) {
  std::vector<Int> u = chosen_pairings(g, v);
  Box box = cramer_box(g, u);
  if (box.volume > volume_cap) {
    skipped = true;
    return false;
  }
  std::vector<Int> vp;
  for (const ZVector& vert : g.verts) vp.push_back(pairing(v, vert));
  bool reducible = false;
  enumerate_box(box, [&](const ZCovector& a) {
    if (a.isZero(0) || a == v) return false;
    for (std::size_t i = 0; i < g.verts.size(); ++i) {
      Int pa = pairing(a, g.verts[i]);
      if (pa < 0 || pa > vp[i]) return false;  // a or v - a leaves the dual cone
    }
    reducible = true;
    return true;
  });
  return reducible;
}

}  // namespace

HilbertBruteResult hilbert_brute(const FreeParamMatrix& m, const std::vector<ZCovector>& l,
                                 const HilbertBruteOptions& options) {
  HilbertBruteResult result;
  DualGeometry g = build_geometry(m, options.scan_backward);

  std::set<ZCovector, CovectorLess> candidates;
  for (const ZCovector& gen : l) {
    std::vector<Int> u = chosen_pairings(g, gen);
    Box box = cramer_box(g, u);
    if (box.volume > options.volume_cap) {
      result.skipped = true;
      result.skip_reason = "too large: candidate box for " + covector_str(gen) + " holds about " +
                           volume_str(box.volume) + " lattice points";
      return result;
    }
    std::vector<Int> gp;
    for (const ZVector& vert : g.verts) gp.push_back(pairing(gen, vert));
    enumerate_box(box, [&](const ZCovector& a) {
      if (!a.isZero(0)) {
        for (std::size_t i = 0; i < g.verts.size(); ++i) {
          Int pa = pairing(a, g.verts[i]);
          if (pa < 0 || pa > gp[i]) return false;  // outside the cone or not dominated
        }
        candidates.insert(a);
      }
      return false;
    });
  }

  for (const ZCovector& c : candidates) {
    bool skipped = false;
    if (!is_reducible(g, c, options.volume_cap, skipped)) {
      if (skipped) {
        result.skipped = true;
        result.skip_reason = "reducibility box for " + covector_str(c) + " too large";
        result.basis.clear();
        return result;
      }
      result.basis.push_back(c);
    }
  }
  return result;
}

GenerationCheckResult semigroup_generation_check(const FreeParamMatrix& m,
                                                 const std::vector<ZCovector>& gens,
                                                 const Int& bound) {
  GenerationCheckResult result;
  DualGeometry g = build_geometry(m, false);

  std::vector<Int> u(g.chosen.size(), bound);
  Box box = cramer_box(g, u);
  if (box.volume > 1e7) {
    result.skipped = true;
    result.skip_reason = "target box exceeds 1e7 lattice points";
    return result;
  }

  std::map<ZCovector, bool, CovectorLess> memo;
  std::function<bool(const ZCovector&)> can_generate = [&](const ZCovector& w) -> bool {
    if (w.isZero(0)) return true;
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    memo[w] = false;  // guards the recursion; overwritten on success
    for (const ZCovector& gen : gens) {
      ZCovector rest = w - gen;
      if (!g.in_dual(rest)) continue;
      if (can_generate(rest)) {
        memo[w] = true;
        return true;
      }
    }
    return false;
  };

  result.pass = true;
  enumerate_box(box, [&](const ZCovector& w) {
    if (w.isZero(0) || !g.in_dual(w)) return false;
    for (const ZVector& vert : g.verts)
      if (pairing(w, vert) > bound) return false;
    if (!can_generate(w)) {
      result.pass = false;
      result.witness = w;
      return true;
    }
    return false;
  });
  return result;
}

Int default_generation_bound(const FreeParamMatrix& m, const std::vector<ZCovector>& l) {
  VertexFamily fam = vertex_family(m, m.d);
  Int best = 0;
  for (const ZCovector& gen : l)
    for (const ZVector& v : fam.points) {
      Int p = pairing(gen, v);
      if (p > best) best = p;
    }
  return 2 * best;
}

// ---- parametric vanishing -----------------------------------------------------

namespace {

Rat rat_pow(const Rat& base, const Int& exp) {
  if (exp == 0) return Rat(1);
  Int e = exp < 0 ? Int(-exp) : exp;
  if (!e.fits_ulong_p()) throw InternalCheckError("RatPow", "exponent too large");
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num().get_mpz_t(), e.get_ui());
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den().get_mpz_t(), e.get_ui());
  r.canonicalize();
  if (exp < 0) r = Rat(1) / r;
  return r;
}

}  // namespace

bool parametric_vanishing(const FreeParamMatrix& m, const IdealPresentation& p, int trials,
                          std::uint64_t seed) {
  const int d = m.d;
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::mt19937_64 rng(seed);

  for (int trial = 0; trial < trials; ++trial) {
    // distinct prime powers keep the character map injective on exponents
    std::vector<Rat> t(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      Rat base(primes[j]);
      switch (rng() % 3) {
        case 0: t[static_cast<std::size_t>(j)] = base; break;
        case 1: t[static_cast<std::size_t>(j)] = 1 / base; break;
        default: t[static_cast<std::size_t>(j)] = base * base; break;
      }
    }

    std::vector<Rat> z(static_cast<std::size_t>(2 * d - 1), Rat(1));
    for (int k = 1; k <= d; ++k) z[static_cast<std::size_t>(k - 1)] = t[static_cast<std::size_t>(k - 1)];
    for (int i = 1; i <= d - 1; ++i) {
      Rat val(1);
      for (int j = 1; j <= i; ++j) val *= rat_pow(t[static_cast<std::size_t>(j - 1)], m.entry(i, j));
      val /= t[static_cast<std::size_t>(i)];
      z[static_cast<std::size_t>(d + i - 1)] = val;
    }

    auto eval = [&](const ZVector& expo) {
      Rat r(1);
      for (Eigen::Index i = 0; i < expo.size(); ++i)
        if (expo(i) != 0) r *= rat_pow(z[static_cast<std::size_t>(i)], expo(i));
      return r;
    };
    auto vanishes = [&](const Binomial& b) { return eval(b.plus) == eval(b.minus); };

    for (const Binomial& b : p.generators)
      if (!vanishes(b)) return false;
    for (const Binomial& b : p.minimal_generators)
      if (!vanishes(b)) return false;
  }
  return true;
}

// ---- literal dominating search --------------------------------------------------

bool dominating_brute(const ZMatrix& m) {
  const int nr = static_cast<int>(m.rows());
  const int nc = static_cast<int>(m.cols());
  for (int rho = 1; rho <= std::min(nr, nc); ++rho) {
    bool found = false;
    for_each_subset(0, nr - 1, rho, [&](const std::vector<int>& rs) {
      if (found) return;
      for_each_subset(0, nc - 1, rho, [&](const std::vector<int>& cs) {
        if (found) return;
        for (int c : cs) {
          bool pos = false, neg = false;
          for (int r : rs) {
            int s = sgn(m(r, c));
            pos |= s > 0;
            neg |= s < 0;
          }
          if (!pos || !neg) return;
        }
        found = true;  // this rho x rho submatrix is mixed
      });
    });
    if (found) return false;
  }
  return true;
}

// ---- the aggregated report ------------------------------------------------------

namespace {

nlohmann::json admissibility_witness_json(const AdmissibilityWitness& w) {
  return {{"level", w.level}, {"epsilon", w.epsilon}, {"pairing", int_json(w.pairing)}};
}

QVector covector_to_column(const ZCovector& w) {
  QVector x(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) x(i) = Rat(w(i));
  return x;
}

bool cone_member(const QVector& x, const std::vector<ZCovector>& gens) {
  std::vector<QVector> cols;
  cols.reserve(gens.size());
  for (const ZCovector& g : gens) cols.push_back(covector_to_column(g));
  return in_nonneg_span(x, cols);
}

QVector random_cone_point(std::mt19937_64& rng, const std::vector<ZCovector>& gens, int d) {
  QVector x = QVector::Zero(d);
  for (const ZCovector& g : gens) {
    Rat c = make_rat(Int(rng() % 4), Int(1 + rng() % 2));
    x += c * covector_to_column(g);
  }
  return x;
}

CheckResult kernel_check(const FreeParamMatrix& m) {
  const int d = m.d;
  try {
    RelationMatrices rel = relation_matrices(m);
    ZMatrix bhat = dominating_basis(m);
    ZMatrix prod = rel.a * bhat;
    if (!(prod == ZMatrix::Zero(d, d - 1)))
      return CheckResult::fail("kernel", {{"error", "A * B-hat != 0"}});
    for (int j = 1; j <= d - 1; ++j)
      for (int r = 1; r <= 2 * d - 1; ++r) {
        const Int& e = bhat(r - 1, j - 1);
        bool should_be_minus_one = (r == j + 1) || (r == d + j);
        if (should_be_minus_one && e != -1)
          return CheckResult::fail("kernel", {{"error", "missing -1"}, {"column", j}, {"row", r}});
        if (!should_be_minus_one && e < 0)
          return CheckResult::fail("kernel",
                                   {{"error", "stray negative entry"}, {"column", j}, {"row", r}});
      }
  } catch (const Error& e) {
    return CheckResult::fail("kernel", {{"error", e.what()}});
  }
  return CheckResult::ok("kernel");
}

CheckResult dominating_check(const FreeParamMatrix& m) {
  try {
    ZMatrix bhat = dominating_basis(m);
    bool literal = dominating_brute(bhat);
    bool pruned = is_dominating(bhat);
    if (!literal || !pruned)
      return CheckResult::fail("dominating",
                               {{"literal", literal}, {"pruned", pruned}});
  } catch (const Error& e) {
    return CheckResult::fail("dominating", {{"error", e.what()}});
  }
  return CheckResult::ok("dominating");
}

CheckResult basic_cone_check(const FreeParamMatrix& m) {
  try {
    basic_cones(m);  // throws DetNotUnitError on any non-unit determinant
  } catch (const DetNotUnitError& e) {
    return CheckResult::fail("basic_cone_determinants", {{"epsilon", e.epsilon}});
  } catch (const Error& e) {
    return CheckResult::fail("basic_cone_determinants", {{"error", e.what()}});
  }
  return CheckResult::ok("basic_cone_determinants");
}

CheckResult subdivision_check(const FreeParamMatrix& m, std::uint64_t seed) {
  const int d = m.d;
  std::mt19937_64 rng(seed);
  std::vector<BasicCone> cones = basic_cones(m);
  DualGenerators l = dual_generators(m);
  const std::uint32_t ncones = static_cast<std::uint32_t>(cones.size());

  // intersection law on sampled pairs and points
  const int pairs = 10;
  for (int it = 0; it < pairs; ++it) {
    std::uint32_t a = rng() % ncones, b = rng() % ncones;
    const BasicCone& ca = cones[a];
    const BasicCone& cb = cones[b];
    std::vector<ZCovector> shared;
    shared.push_back(unit_covector(d, 1));
    for (int i = 1; i <= d - 1; ++i)
      if (ca.eps[static_cast<std::size_t>(i - 1)] == cb.eps[static_cast<std::size_t>(i - 1)])
        shared.push_back(ca.gens[static_cast<std::size_t>(i)]);

    for (int s = 0; s < 6; ++s) {
      QVector x;
      switch (s % 3) {
        case 0: x = random_cone_point(rng, ca.gens, d); break;
        case 1: x = random_cone_point(rng, shared, d); break;
        default: x = random_cone_point(rng, l.gens, d); break;
      }
      bool in_a = cone_member(x, ca.gens);
      bool in_b = cone_member(x, cb.gens);
      bool in_shared = cone_member(x, shared);
      if ((in_a && in_b) != in_shared)
        return CheckResult::fail("subdivision_sampling",
                                 {{"law", "intersection"},
                                  {"epsilon", ca.eps},
                                  {"epsilon_prime", cb.eps},
                                  {"in_first", in_a},
                                  {"in_second", in_b},
                                  {"in_shared", in_shared}});
    }
  }

  // coverage on sampled points of the dual cone
  for (int s = 0; s < 20; ++s) {
    QVector x = random_cone_point(rng, l.gens, d);
    bool covered = false;
    for (const BasicCone& c : cones)
      if (cone_member(x, c.gens)) {
        covered = true;
        break;
      }
    if (!covered)
      return CheckResult::fail("subdivision_sampling", {{"law", "coverage"}, {"sample", s}});
  }
  return CheckResult::ok("subdivision_sampling");
}

std::set<ZCovector, CovectorLess> to_set(const std::vector<ZCovector>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

bool VerificationReport::all_executed_pass() const {
  for (const CheckResult& c : checks)
    if (!c.skipped && !c.pass) return false;
  return true;
}

VerificationReport full_report(const FreeParamMatrix& m, VerifyLevel level, std::uint64_t seed) {
  VerificationReport report;
  report.instance = m;
  report.seed = seed;
  auto& checks = report.checks;

  try {
    validate_structure(m);
    checks.push_back(CheckResult::ok("structure"));
  } catch (const Error& e) {
    checks.push_back(CheckResult::fail("structure", {{"error", e.what()}}));
  }
  if (!checks.back().pass) {
    for (const char* name :
         {"admissibility", "prop_qus", "lamdasum", "kernel", "dominating",
          "basic_cone_determinants", "subdivision_sampling", "hilbert_oracle",
          "hilbert_index_range", "semigroup_generation", "parametric_vanishing"})
      checks.push_back(CheckResult::skip(name, "invalid structure"));
    return report;
  }

  AdmissibilityResult adm = is_admissible(m);
  if (adm.admissible)
    checks.push_back(CheckResult::ok("admissibility"));
  else
    checks.push_back(
        CheckResult::fail("admissibility", admissibility_witness_json(*adm.witness)));
  if (!adm.admissible) {
    for (const char* name :
         {"prop_qus", "lamdasum", "kernel", "dominating", "basic_cone_determinants",
          "subdivision_sampling", "hilbert_oracle", "hilbert_index_range",
          "semigroup_generation", "parametric_vanishing"})
      checks.push_back(CheckResult::skip(name, "inadmissible input"));
    return report;
  }

  checks.push_back(check_prop_qus(m));
  checks.push_back(check_lamdasum(m));
  checks.push_back(kernel_check(m));
  checks.push_back(dominating_check(m));
  checks.push_back(basic_cone_check(m));
  checks.push_back(subdivision_check(m, seed ^ 0x5eedULL));

  EliminationPlan plan = elimination_plan(m);

  if (level == VerifyLevel::quick) {
    checks.push_back(CheckResult::skip("hilbert_oracle", "level=quick"));
    checks.push_back(CheckResult::skip("hilbert_index_range", "level=quick"));
  } else if (m.d > 5) {
    checks.push_back(CheckResult::skip("hilbert_oracle", "d > 5"));
    checks.push_back(CheckResult::skip("hilbert_index_range", "d > 5"));
  } else {
    DualGenerators l = dual_generators(m);
    HilbertBruteResult brute = hilbert_brute(m, l.gens);
    if (brute.skipped) {
      checks.push_back(CheckResult::skip("hilbert_oracle", brute.skip_reason));
      checks.push_back(CheckResult::skip("hilbert_index_range", brute.skip_reason));
    } else {
      auto brute_set = to_set(brute.basis);
      auto plan_set = to_set(plan.hilbert);
      if (plan_set == brute_set)
        checks.push_back(CheckResult::ok("hilbert_oracle"));
      else {
        nlohmann::json missing = nlohmann::json::array(), extra = nlohmann::json::array();
        for (const auto& v : brute_set)
          if (!plan_set.count(v)) missing.push_back(covector_str(v));
        for (const auto& v : plan_set)
          if (!brute_set.count(v)) extra.push_back(covector_str(v));
        checks.push_back(CheckResult::fail("hilbert_oracle",
                                           {{"missing", missing}, {"extra", extra}}));
      }

      // Adjudicate the reducibility index range: as printed it starts at
      // i = 2; consistency demands i = 1 as well.  The two readings can
      // only disagree about e_1.
      bool printed_drops_e1 = false, consistent_drops_e1 = false;
      const ZCovector e1 = unit_covector(m.d, 1);
      for (int gamma = 1; gamma <= m.d - 1; ++gamma)
        if (m.full_row(gamma) == e1) {
          consistent_drops_e1 = true;
          if (gamma >= 2) printed_drops_e1 = true;
        }
      auto printed_set = plan_set;
      if (consistent_drops_e1 && !printed_drops_e1) printed_set.insert(e1);
      bool consistent_matches = plan_set == brute_set;
      bool printed_matches = printed_set == brute_set;
      nlohmann::json w = {{"consistent_reading_matches_brute", consistent_matches},
                          {"printed_reading_matches_brute", printed_matches},
                          {"readings_differ", printed_set != plan_set}};
      checks.push_back(consistent_matches
                           ? CheckResult{"hilbert_index_range", true, false, w}
                           : CheckResult::fail("hilbert_index_range", w));
    }
  }

  if (level == VerifyLevel::quick)
    checks.push_back(CheckResult::skip("semigroup_generation", "level=quick"));
  else if (m.d > 4)
    checks.push_back(CheckResult::skip("semigroup_generation", "d > 4"));
  else {
    DualGenerators l = dual_generators(m);
    GenerationCheckResult gen =
        semigroup_generation_check(m, l.gens, default_generation_bound(m, l.gens));
    if (gen.skipped)
      checks.push_back(CheckResult::skip("semigroup_generation", gen.skip_reason));
    else if (gen.pass)
      checks.push_back(CheckResult::ok("semigroup_generation"));
    else
      checks.push_back(CheckResult::fail("semigroup_generation",
                                         {{"witness", covector_str(*gen.witness)}}));
  }

  try {
    IdealPresentation pres = minimal_presentation(m, plan);
    if (parametric_vanishing(m, pres, 10, seed ^ 0xabcdULL))
      checks.push_back(CheckResult::ok("parametric_vanishing"));
    else
      checks.push_back(CheckResult::fail("parametric_vanishing", {{"trials", 10}}));
  } catch (const Error& e) {
    checks.push_back(CheckResult::fail("parametric_vanishing", {{"error", e.what()}}));
  }

  return report;
}

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return nlohmann::json{{"instance", input_document_json(r.instance)},
                        {"seed", r.seed},
                        {"checks", std::move(checks)}};
}

}  // namespace toriclci
