#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valmat/graph.hpp"
#include "valmat/matroid.hpp"
#include "valmat/valfn.hpp"

namespace valmat {

struct IndependentMatchingResult {
  ExtRat value;  // -infinity when infeasible
  std::optional<Matching> matching;
};

/// Maximum weight of a matching whose left endpoints are exactly `cover`
/// and whose right endpoints form an independent set in m.
///
/// Brute-force enumeration; the oracle the algorithmic solver is tested
/// against. Capacity bound |cover| <= 8 (VALMAT_CAPACITY overrides).
IndependentMatchingResult max_weight_independent_matching_brute(const WeightedBipGraph& g, const Matroid& m,
                                                                ElemSet cover);

/// Same contract, computed by the primal-dual weight-splitting algorithm
/// (shortest augmenting paths in the exchange graph, deterministic
/// tie-breaking). Must agree with the brute-force oracle.
IndependentMatchingResult max_weight_independent_matching(const WeightedBipGraph& g, const Matroid& m, ElemSet cover);

/// Core solver: maximum-weight common independent set of size exactly k
/// among edges whose left endpoint lies in `allowed_left`.
IndependentMatchingResult max_weight_matching_of_size(const WeightedBipGraph& g, const Matroid& m,
                                                      ElemSet allowed_left, int k);

/// All matchings achieving `opt` with left endpoints exactly `cover` and
/// independent right endpoints (brute force, desk scale).
std::vector<Matching> optimal_matchings(const WeightedBipGraph& g, const Matroid& m, ElemSet cover,
                                        const ExtRat& opt);

/// Dual certificate for the full-rank independent matching program:
/// potentials pi on V u W and tau on U with pi_i + tau_j >= c_ij,
/// pi >= 0 on V, certifying max_X f(X) = pi(V u W) + max-tau-weight-basis.
struct DualCert {
  std::vector<Rat> pi;
  std::vector<Rat> tau;
};

struct no_certificate_error : std::runtime_error {
  explicit no_certificate_error(const std::string& what) : std::runtime_error(what) {}
};

/// Optimum of the full-rank program: matchings of size r(m) covering all
/// of W plus any d-subset of V (d = r(m) - |W|), right endpoints a basis.
IndependentMatchingResult solve_full_rank_program(const WeightedBipGraph& g, const Matroid& m);

/// Optimal dual certificate, normalized so that every level set of tau is
/// a flat of m (raise pass) and level-gap blocks are lowered onto tight
/// edges where possible. Throws no_certificate_error when the primal is
/// infeasible.
DualCert dual_certificate(const WeightedBipGraph& g, const Matroid& m);

struct CertReport {
  bool feasible = false;
  bool strong_duality = false;
  bool optimal_edges_tight = false;    // E* subseteq E0
  bool maximizer_family_matches = false;  // maximizers = Rado-minor of (E0, M_tau, W)
  bool pi_zero_off_maximizers = false;
  ExtRat primal_opt;
  ExtRat dual_value;
  std::vector<std::string> violations;

  bool ok() const {
    return feasible && strong_duality && optimal_edges_tight && maximizer_family_matches && pi_zero_off_maximizers;
  }
};

/// Independent verification of a certificate against the brute-force
/// primal optimum and the Rado-minor structure of the tight subgraph.
CertReport verify_certificate(const WeightedBipGraph& g, const Matroid& m, const DualCert& cert);

/// Indices of tight edges (pi_i + tau_j = c_ij). Throws std::domain_error
/// if the certificate is infeasible.
std::vector<int> tight_edges(const WeightedBipGraph& g, const DualCert& cert);
WeightedBipGraph tight_subgraph(const WeightedBipGraph& g, const DualCert& cert);

/// Lovasz extension: maximum tau-weight of a basis, by the sorted-prefix
/// formula.
Rat lovasz_extension(const Matroid& m, const std::vector<Rat>& tau);

/// Level sets of tau as a chain S_1 < S_2 < ... < S_{t+1} = U.
std::vector<ElemSet> tau_level_sets(int n, const std::vector<Rat>& tau);

/// The matroid of maximum tau-weight bases: direct sum of the minors
/// (m | S_l) / S_{l-1} over the level sets, kept on the original labels.
Matroid matroid_of_max_weight_bases(const Matroid& m, const std::vector<Rat>& tau);

}  // namespace valmat
