#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valmat/graph.hpp"
#include "valmat/matroid.hpp"

namespace valmat {

/// Rado / Rado-minor representation: bipartite graph (V u W, U; E) plus a
/// matroid on U. Edge weights are irrelevant here; only adjacency counts.
/// X in V is independent in the represented matroid iff the Hall-Rado
/// rank condition holds over X u W.
struct RadoRep {
  WeightedBipGraph graph;
  Matroid matroid;

  RadoRep(WeightedBipGraph g, Matroid m);

  ElemSet v_nodes() const { return graph.v_nodes(); }
  ElemSet w_nodes() const { return graph.w_nodes(); }
  int left_count() const { return graph.left_count; }

  /// Gamma(Z) for Z within V u W.
  ElemSet neighborhood(ElemSet z) const;
};

/// rho(Z) = r(Gamma(Z)) - |Z|.
int rho(const RadoRep& rep, ElemSet z);

/// Rank condition over all Z subseteq X u W (exhaustive; capacity 14 on
/// |X u W|).
bool rado_independent(const RadoRep& rep, ElemSet x);

/// Independence via the matching oracle (must agree with the rank
/// condition).
bool rado_independent_matching(const RadoRep& rep, ElemSet x);

/// The matroid on V represented by (G, M, W), as a rank oracle.
Matroid represented_matroid(const RadoRep& rep);

/// The unique largest X-set Z (Z & V = X) with rho(Z) = 0, if any X-set
/// attains 0. X must be independent in the represented matroid.
std::optional<ElemSet> largest_tight_set(const RadoRep& rep, ElemSet x);

struct UncrossingReport {
  long long pairs_checked_one = 0;
  long long pairs_checked_two = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustively verifies both uncrossing properties on all qualifying set
/// pairs. A violation indicates an implementation bug, not a property of
/// the input. Capacity: |V u W| <= 10.
UncrossingReport check_uncrossing(const RadoRep& rep);

/// rho is submodular; exhaustive pair check (test harness).
std::vector<std::string> check_rho_submodular(const RadoRep& rep);

/// (ind)/(cir)/(spn) lower bounds on rho over X-sets.
std::vector<std::string> check_rho_value_bounds(const RadoRep& rep);

/// cl[Gamma(I)] & cl[Gamma(J)] = cl[Gamma(I & J)] whenever rho is modular
/// on the pair.
std::vector<std::string> check_closure_identity(const RadoRep& rep);

struct Reduction {
  Matroid m1, m2;
  int rank1 = 0, rank2 = 0;
};

struct ReducibilityResult {
  std::optional<Reduction> decomposition;
  std::string note;  // search mode and completeness caveats
};

/// Searches for a full-rank matroid union decomposition m = M1 v M2 with
/// rank(M1) + rank(M2) = rank(m). Candidates are generated from
/// single-element rank assignments (loop patterns), i.e. uniform matroids
/// on non-loop sets; for paired rank-4 ground sets the loop patterns are
/// bounded by the pair structure. A `none` answer outside these shapes is
/// not a proof of irreducibility; the note says which search ran.
ReducibilityResult fully_reducible(const Matroid& m);

struct RobustResult {
  bool robust = false;
  ElemSet s_pairs;  // 0-based pair indices
  ElemSet k_pairs;
  std::string reason;
};

/// Recognizes robust matroids: rank-4 sparse paving on paired elements
/// whose circuits are pair unions, with the (S, K) clique structure.
/// Exhaustive partition search over pair indices (n <= 12).
RobustResult is_robust(const Matroid& m);

/// Validates a specific (S, K) partition against the robustness
/// conditions (D2)(D2a)(D2b) plus (D1).
bool validate_robust_partition(const Matroid& m, ElemSet s_pairs, ElemSet k_pairs);

}  // namespace valmat
