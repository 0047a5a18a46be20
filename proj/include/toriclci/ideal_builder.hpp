#pragma once

#include "toriclci/dual_cone.hpp"
#include "toriclci/nakajima.hpp"
#include "toriclci/numeric.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace toriclci {

// The signed exponent data lambda_{i,j} <= 0, mu_{i,j} >= 0 for
// 1 <= j <= d-1, 0 <= i <= j-1, filled per column by descending-i
// recursion:
//   lambda_{j-1,j} = min{0, m_{j,j}}
//   lambda_{i,j}   = min{0, m_{j,i+1} + sum_{k=i+1}^{j-1} m_{k,i+1} lambda_{k,j}}
//   lambda_{0,j}   = 0
// mu mirrors with max, and mu_{0,j} = m_{j,1} + sum_k m_{k,1} lambda_{k,j},
// which is >= 0 for admissible input (asserted at construction).
struct LambdaMuTable {
  int d = 0;
  std::vector<std::vector<Int>> lambda_cols;  // column j-1 holds i = 0..j-1
  std::vector<std::vector<Int>> mu_cols;

  const Int& lambda(int i, int j) const {
    return lambda_cols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)];
  }
  const Int& mu(int i, int j) const {
    return mu_cols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)];
  }
  // Step-2 aliases: lambda_i = lambda_{i,d-1}, mu_i = mu_{i,d-1}.
  const Int& lambda_last(int i) const { return lambda(i, d - 1); }
  const Int& mu_last(int i) const { return mu(i, d - 1); }
};

LambdaMuTable lambda_mu(const FreeParamMatrix& m);

// A = (I_d  M^T), d x (2d-1), whose columns transpose to the list L;
// B = (M^T / -I_{d-1}), (2d-1) x (d-1), a Z-basis of ker(A).
// A * B = 0 is verified at construction.
struct RelationMatrices {
  ZMatrix a;
  ZMatrix b;
};

RelationMatrices relation_matrices(const FreeParamMatrix& m);

// U_j for j = 2..d-1: identity of order d-1 with lambda_{1,j},...,
// lambda_{j-1,j} above the diagonal in column j.  det U_j = 1.
std::vector<ZMatrix> unimodular_factors(const FreeParamMatrix& m, const LambdaMuTable& table);

// The dominating kernel basis B-hat, computed both as the product
// B * U_{d-1} * ... * U_2 and by direct assembly from the lambda/mu
// table; the two must agree and the result must pass the exhaustive
// dominating-matrix check.
ZMatrix dominating_basis(const FreeParamMatrix& m);

// One binomial as a pair of disjoint nonnegative exponent vectors of
// length 2d-1 over the variables z_1..z_{2d-1}.
struct Binomial {
  ZVector plus;
  ZVector minus;
};

struct IdealPresentation {
  int d = 0;
  std::vector<Binomial> generators;          // the d-1 kernel binomials
  std::vector<Binomial> minimal_generators;  // after elimination
  // eliminated variable position -> the two replacement positions
  std::map<int, std::pair<int, int>> variable_map;
  std::vector<int> surviving_variables;  // 1-based positions, ascending
  bool minimal_built = false;
};

// Generators only: binomial j has plus = positive part of b-hat_j and
// minus = exactly z_{j+1} z_{d+j}.
IdealPresentation binomial_generators(const FreeParamMatrix& m);

// Complete presentation: drop generator gamma_k for each k in Q
// (it reads z_k - z_{gamma_k+1} z_{d+gamma_k}) and substitute
// z_k <- z_{gamma_k+1} z_{d+gamma_k}; same for R with z_{d+l}.
// Substitutions chain to a fixpoint and common factors are cancelled,
// leaving #Hilb - d binomials over the surviving variables.
IdealPresentation minimal_presentation(const FreeParamMatrix& m, const EliminationPlan& plan);

enum class RenderFormat { text, json };

// text: one line per binomial ("z1^2 - z2*z4"), generators for a
// generators-only presentation, minimal generators otherwise.
// json: the full ideal schema (requires a complete presentation).
std::string render(const IdealPresentation& p, RenderFormat format);

std::string monomial_str(const ZVector& exponents);
std::string binomial_str(const Binomial& b);
std::string variable_name(int position);  // "z3"

}  // namespace toriclci
