#include "toriclci/ideal_builder.hpp"

#include "toriclci/errors.hpp"
#include "toriclci/exact_linalg.hpp"
#include "toriclci/json_io.hpp"

namespace toriclci {

LambdaMuTable lambda_mu(const FreeParamMatrix& m) {
  const int d = m.d;
  LambdaMuTable t;
  t.d = d;
  t.lambda_cols.resize(static_cast<std::size_t>(d - 1));
  t.mu_cols.resize(static_cast<std::size_t>(d - 1));
  for (int j = 1; j <= d - 1; ++j) {
    auto& lam = t.lambda_cols[static_cast<std::size_t>(j - 1)];
    auto& mu = t.mu_cols[static_cast<std::size_t>(j - 1)];
    lam.assign(static_cast<std::size_t>(j), Int(0));
    mu.assign(static_cast<std::size_t>(j), Int(0));
    for (int i = j - 1; i >= 1; --i) {
      Int s = m.entry(j, i + 1);
      for (int k = i + 1; k <= j - 1; ++k)
        s += m.entry(k, i + 1) * lam[static_cast<std::size_t>(k)];
      lam[static_cast<std::size_t>(i)] = s < 0 ? s : Int(0);
      mu[static_cast<std::size_t>(i)] = s > 0 ? s : Int(0);
    }
    Int mu0 = m.entry(j, 1);
    for (int k = 1; k <= j - 1; ++k) mu0 += m.entry(k, 1) * lam[static_cast<std::size_t>(k)];
    if (mu0 < 0)
      throw InternalCheckError("NegativeMuZero",
                               "mu_{0," + std::to_string(j) + "} = " + mu0.get_str());
    mu[0] = mu0;
    lam[0] = 0;
  }
  return t;
}

RelationMatrices relation_matrices(const FreeParamMatrix& m) {
  const int d = m.d;
  ZMatrix mm = m.full_matrix();
  for (int i = 1; i <= d - 1; ++i) mm(i - 1, i) -= 1;  // row m_i - e_{i+1}

  RelationMatrices r;
  r.a = ZMatrix::Zero(d, 2 * d - 1);
  r.a.block(0, 0, d, d) = ZMatrix::Identity(d, d);
  r.a.block(0, d, d, d - 1) = mm.transpose();

  r.b = ZMatrix::Zero(2 * d - 1, d - 1);
  r.b.block(0, 0, d, d - 1) = mm.transpose();
  r.b.block(d, 0, d - 1, d - 1) = -ZMatrix::Identity(d - 1, d - 1);

  ZMatrix prod = r.a * r.b;
  if (!(prod == ZMatrix::Zero(d, d - 1)))
    throw InternalCheckError("KernelBasis", "A * B != 0");
  return r;
}

std::vector<ZMatrix> unimodular_factors(const FreeParamMatrix& m, const LambdaMuTable& table) {
  const int d = m.d;
  std::vector<ZMatrix> factors;
  for (int j = 2; j <= d - 1; ++j) {
    ZMatrix u = ZMatrix::Identity(d - 1, d - 1);
    for (int i = 1; i <= j - 1; ++i) u(i - 1, j - 1) = table.lambda(i, j);
    factors.push_back(std::move(u));
  }
  return factors;
}

namespace {

// Column j of B-hat straight from the lambda/mu display: mu values in
// rows 1..j, -1 at row j+1, -lambda values in rows d+1..d+j-1, -1 at
// row d+j.
ZMatrix assemble_bhat(const LambdaMuTable& t) {
  const int d = t.d;
  ZMatrix bhat = ZMatrix::Zero(2 * d - 1, d - 1);
  for (int j = 1; j <= d - 1; ++j) {
    for (int i = 0; i <= j - 1; ++i) bhat(i, j - 1) = t.mu(i, j);
    bhat(j, j - 1) = -1;
    for (int i = 1; i <= j - 1; ++i) bhat(d + i - 1, j - 1) = -t.lambda(i, j);
    bhat(d + j - 1, j - 1) = -1;
  }
  return bhat;
}

}  // namespace

ZMatrix dominating_basis(const FreeParamMatrix& m) {
  const int d = m.d;
  LambdaMuTable table = lambda_mu(m);
  RelationMatrices rel = relation_matrices(m);

  ZMatrix product = rel.b;
  std::vector<ZMatrix> factors = unimodular_factors(m, table);
  for (int j = d - 1; j >= 2; --j)  // B * U_{d-1} * ... * U_2
    product = mat_mul(product, factors[static_cast<std::size_t>(j - 2)]);

  ZMatrix direct = assemble_bhat(table);
  if (!(product == direct))
    throw InternalCheckError("InternalMismatch",
                             "B * U_{d-1} ... U_2 differs from the lambda/mu assembly");
  if (!is_dominating(direct))
    throw InternalCheckError("NotDominating", "B-hat failed the exhaustive submatrix search");
  return direct;
}

IdealPresentation binomial_generators(const FreeParamMatrix& m) {
  const int d = m.d;
  ZMatrix bhat = dominating_basis(m);

  IdealPresentation pres;
  pres.d = d;
  for (int j = 1; j <= d - 1; ++j) {
    Binomial g;
    g.plus = ZVector::Zero(2 * d - 1);
    g.minus = ZVector::Zero(2 * d - 1);
    for (int r = 0; r < 2 * d - 1; ++r) {
      const Int& e = bhat(r, j - 1);
      if (e > 0) g.plus(r) = e;
      if (e < 0) g.minus(r) = -e;
    }
    // the negative part is exactly z_{j+1} z_{d+j}
    ZVector expected = ZVector::Zero(2 * d - 1);
    expected(j) = 1;
    expected(d + j - 1) = 1;
    if (!(g.minus == expected))
      throw InternalCheckError("SignSplit", "column " + std::to_string(j) +
                                                " of B-hat has an unexpected negative part");
    pres.generators.push_back(std::move(g));
  }
  for (int pos = 1; pos <= 2 * d - 1; ++pos) pres.surviving_variables.push_back(pos);
  return pres;
}

namespace {

// Replace eliminated variables by their two-variable products until none
// remains.  Each substitution only introduces variables of strictly
// larger elimination rank, so the loop terminates.
ZVector substitute_to_fixpoint(ZVector v, const std::map<int, std::pair<int, int>>& varmap) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [pos, repl] : varmap) {
      Int e = v(pos - 1);
      if (e > 0) {
        v(pos - 1) = 0;
        v(repl.first - 1) += e;
        v(repl.second - 1) += e;
        changed = true;
      }
    }
  }
  return v;
}

void cancel_common(Binomial& b) {
  for (Eigen::Index i = 0; i < b.plus.size(); ++i) {
    Int c = b.plus(i) <= b.minus(i) ? b.plus(i) : b.minus(i);
    if (c > 0) {
      b.plus(i) -= c;
      b.minus(i) -= c;
    }
  }
}

}  // namespace

IdealPresentation minimal_presentation(const FreeParamMatrix& m, const EliminationPlan& plan) {
  const int d = m.d;
  IdealPresentation pres = binomial_generators(m);

  std::vector<bool> dropped(static_cast<std::size_t>(d), false);  // generator index j, 1-based
  auto mark_dropped = [&](int j, int var_pos, int a, int b) {
    const Binomial& g = pres.generators[static_cast<std::size_t>(j - 1)];
    ZVector plus = ZVector::Zero(2 * d - 1), minus = ZVector::Zero(2 * d - 1);
    plus(var_pos - 1) = 1;
    minus(a - 1) = 1;
    minus(b - 1) += 1;
    if (!(g.plus == plus) || !(g.minus == minus))
      throw InternalCheckError("MalformedEliminationTarget",
                               "generator " + std::to_string(j) + " is not " +
                                   variable_name(var_pos) + " - " + variable_name(a) + "*" +
                                   variable_name(b));
    dropped[static_cast<std::size_t>(j - 1)] = true;
    pres.variable_map[var_pos] = {a, b};
  };

  for (const auto& [k, gamma] : plan.q_set) mark_dropped(gamma, k, gamma + 1, d + gamma);
  for (const auto& [l, delta] : plan.r_set) mark_dropped(delta, d + l, delta + 1, d + delta);

  for (int j = 1; j <= d - 1; ++j) {
    if (dropped[static_cast<std::size_t>(j - 1)]) continue;
    Binomial g = pres.generators[static_cast<std::size_t>(j - 1)];
    g.plus = substitute_to_fixpoint(std::move(g.plus), pres.variable_map);
    g.minus = substitute_to_fixpoint(std::move(g.minus), pres.variable_map);
    cancel_common(g);
    pres.minimal_generators.push_back(std::move(g));
  }

  pres.surviving_variables.clear();
  for (int pos = 1; pos <= 2 * d - 1; ++pos)
    if (!pres.variable_map.count(pos)) pres.surviving_variables.push_back(pos);

  const int hilb = static_cast<int>(plan.hilbert.size());
  if (static_cast<int>(pres.minimal_generators.size()) != hilb - d)
    throw InternalCheckError("MinimalCount",
                             "expected " + std::to_string(hilb - d) + " minimal binomials, got " +
                                 std::to_string(pres.minimal_generators.size()));
  pres.minimal_built = true;
  return pres;
}

std::string variable_name(int position) { return "z" + std::to_string(position); }

std::string monomial_str(const ZVector& exponents) {
  std::string s;
  for (Eigen::Index i = 0; i < exponents.size(); ++i) {
    if (exponents(i) == 0) continue;
    if (!s.empty()) s += "*";
    s += variable_name(static_cast<int>(i) + 1);
    if (exponents(i) != 1) s += "^" + exponents(i).get_str();
  }
  return s;
}

std::string binomial_str(const Binomial& b) {
  return monomial_str(b.plus) + " - " + monomial_str(b.minus);
}

std::string render(const IdealPresentation& p, RenderFormat format) {
  if (format == RenderFormat::json) return ideal_json(p).dump(2);
  const auto& binomials = p.minimal_built ? p.minimal_generators : p.generators;
  std::string out;
  for (const Binomial& b : binomials) {
    out += binomial_str(b);
    out += "\n";
  }
  return out;
}

}  // namespace toriclci
