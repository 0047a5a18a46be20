#pragma once

#include "toriclci/dual_cone.hpp"
#include "toriclci/ideal_builder.hpp"
#include "toriclci/nakajima.hpp"
#include "toriclci/numeric.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toriclci {

// ---- combinatorial sums ---------------------------------------------------
//
// q_{k,n}(eps): sum over chains 0 = i_0 < i_1 < ... < i_k < i_{k+1} = n-1
// of prod_{j=1}^{k+1} eps_{i_j} m_{i_j, i_{j-1}+1}.  The recursion value
// v_n(eps) must equal sum_k q_{k,n}(eps).
Int q_sum_brute(const FreeParamMatrix& m, const Epsilon& eps, int k, int n);

// Same value by the product recurrence
// q_{k,n} = eps_{n-1} sum_{i=k+1}^{n-1} m_{n-1,i} q_{k-1,i}.
Int q_sum_dp(const FreeParamMatrix& m, const Epsilon& eps, int k, int n);

// p_{k,n}: sum over chains n = i_0 < i_1 < ... < i_k < i_{k+1} = d-1 of
// prod_{j=1}^{k+1} eps_{i_{j-1}} m_{i_j, i_{j-1}+1}.
Int p_sum_brute(const FreeParamMatrix& m, const Epsilon& eps, int k, int n);

// Same value by p_{l+1,n} = eps_n sum_{k=n+1}^{d-2-l} m_{k,n+1} p_{l,k}.
Int p_sum_dp(const FreeParamMatrix& m, const Epsilon& eps, int k, int n);

// The nonnegative double sum of the positivity corollary:
// sum_{k=0}^{d-2} sum_{chains to d-1} m_{d-1,i_k+1} prod_{j=1}^{k} eps_{i_j} m_{i_j,i_{j-1}+1}.
Int positivity_sum_brute(const FreeParamMatrix& m, const Epsilon& eps);

// ---- check results ---------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  nlohmann::json witness;  // null unless failing, skipped, or informative

  static CheckResult ok(std::string name) { return {std::move(name), true, false, nullptr}; }
  static CheckResult fail(std::string name, nlohmann::json w) {
    return {std::move(name), false, false, std::move(w)};
  }
  static CheckResult skip(std::string name, const std::string& reason) {
    return {std::move(name), true, true, nlohmann::json{{"skipped", reason}}};
  }
};

// v_n(eps) == sum_k q_{k,n}(eps) for every eps and every n, with the
// chain enumeration and the recurrence cross-checked against each other.
CheckResult check_prop_qus(const FreeParamMatrix& m);

// lambda_n == sum_{k=0}^{d-2-n} p_{k,n} with eps_i = [lambda_i < 0], and
// mu_{0,d-1} equals the positivity sum under the same eps.
CheckResult check_lamdasum(const FreeParamMatrix& m);

// ---- brute-force Hilbert basis ---------------------------------------------

struct HilbertBruteOptions {
  bool scan_backward = false;       // pick the vertex submatrix from the other end
  double volume_cap = 1e7;          // skip instead of enumerating more points
};

struct HilbertBruteResult {
  bool skipped = false;
  std::string skip_reason;
  std::vector<ZCovector> basis;  // sorted by CovectorLess
};

// Exact Hilbert basis of the dual cone by bounded enumeration:
// membership is w in dual <=> <w, v(eps)> >= 0 for all eps; candidates are
// L plus every semigroup element dominated in all pairings by some element
// of L; a candidate v is reducible iff some lattice a != 0, v with
// 0 <= <a, v(eps)> <= <v, v(eps)> everywhere has v - a in the dual cone.
// Coordinate boxes come from Cramer's rule on a nonsingular vertex
// submatrix.
HilbertBruteResult hilbert_brute(const FreeParamMatrix& m, const std::vector<ZCovector>& l,
                                 const HilbertBruteOptions& options = {});

// ---- semigroup generation ---------------------------------------------------

struct GenerationCheckResult {
  bool pass = false;
  bool skipped = false;
  std::string skip_reason;
  std::optional<ZCovector> witness;  // a lattice point gens cannot reach
};

// Every lattice point w of the dual cone with <w, v(eps)> <= bound for all
// eps must be a nonnegative integer combination of gens, decided by
// depth-first subtraction with memoized failures.
GenerationCheckResult semigroup_generation_check(const FreeParamMatrix& m,
                                                 const std::vector<ZCovector>& gens,
                                                 const Int& bound);

// Default bound: twice the maximum pairing of any L element with any vertex.
Int default_generation_bound(const FreeParamMatrix& m, const std::vector<ZCovector>& l);

// ---- parametric vanishing ----------------------------------------------------

// Sample positive rationals t_1..t_d (distinct prime powers, seeded), set
// z_k = t_k and z_{d+i} = prod_j t_j^{m_{i,j}} / t_{i+1}, and require every
// generator (original, and minimal re-expanded through variable_map) to
// evaluate to exactly zero.
bool parametric_vanishing(const FreeParamMatrix& m, const IdealPresentation& p, int trials,
                          std::uint64_t seed);

// ---- aggregated report --------------------------------------------------------

enum class VerifyLevel { quick, exhaustive };

struct VerificationReport {
  FreeParamMatrix instance;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_executed_pass() const;
};

// Runs structure, admissibility, the combinatorial identities, kernel and
// dominating checks, basic-cone determinants, subdivision sampling,
// the Hilbert oracle (d <= 5, exhaustive level), semigroup generation
// (d <= 4, exhaustive level) and parametric vanishing.  Never throws:
// failures and skips are report entries.
VerificationReport full_report(const FreeParamMatrix& m, VerifyLevel level,
                               std::uint64_t seed);

nlohmann::json report_json(const VerificationReport& r);

// Unpruned literal dominating-matrix search: every (row subset, column
// subset) pair, the definition verbatim.  The pruned classifier is checked
// against this one.
bool dominating_brute(const ZMatrix& m);

}  // namespace toriclci
