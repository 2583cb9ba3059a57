#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "valmat/graph.hpp"
#include "valmat/matroid.hpp"
#include "valmat/valfn.hpp"

namespace valmat {

/// A valuated generalized matroid candidate: a set function on all of
/// 2^{0..n-1} with values in the extended rationals, stored densely
/// (n <= 16).
class VGM {
 public:
  explicit VGM(int n);
  static VGM from_function(int n, const std::function<ExtRat(ElemSet)>& fn);

  int ground_size() const { return n_; }
  const ExtRat& operator()(ElemSet x) const { return table_[x.bits()]; }
  void set(ElemSet x, ExtRat v);

  bool operator==(const VGM& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  int n_;
  std::vector<ExtRat> table_;
};

struct VgmWitness {
  ElemSet x, y;
  int i = -1;  // exchanged element for the equal-size axiom, -1 otherwise
  bool size_axiom = false;
  std::string to_string() const;
};

struct VgmCheck {
  bool ok = true;
  std::optional<VgmWitness> witness;
};

/// Exhaustively verifies both valuated-generalized-matroid axioms
/// (capacity n <= 12).
VgmCheck check_vgm(const VGM& f);

/// k-th layer as a valuated matroid.
ValMat layer(const VGM& f, int k);

/// Merge (max-convolution): (f*g)(X) = max{ f(Y) + g(X\Y) : Y subseteq X }.
VGM merge(const VGM& f, const VGM& g);

/// Endowment by T: X -> f(X u T) - f(T) on the ground set V \ T
/// (reindexed); requires f(T) finite.
VGM endow(const VGM& f, ElemSet t);

/// Layer-wise induction through a weighted bipartite graph; layer 0 of
/// the result copies base(empty).
VGM induce_vgm(const WeightedBipGraph& g, const VGM& base);
/// Layer-wise induction through a directed network.
VGM induce_vgm(const Network& net, const VGM& base);

/// Weighted matroid rank function r^w(X) = max weight of an independent
/// subset of X (greedy); w must be nonnegative.
VGM weighted_rank(const Matroid& m, const std::vector<Rat>& w);
/// The same function built by induction through the two-copy gadget.
VGM weighted_rank_via_gadget(const Matroid& m, const std::vector<Rat>& w);

/// Doubling construction: a rank-n valuated matroid g on 2n elements with
/// g(X) = f(X & V1); f recovers as f(X) = g(X u Y) for any padding Y.
ValMat vgm_to_valmat(const VGM& f);

/// Generalized matroid: the effective domain of a {0,-inf}-valued vgm,
/// stored as an explicit set family.
struct GenMatroid {
  int n = 0;
  std::vector<ElemSet> sets;

  bool contains(ElemSet s) const;
  VGM trivial_vgm() const;
};

struct GenMatroidCheck {
  bool ok = true;
  std::string witness;
};
/// Independent-set exchange axioms for the family.
GenMatroidCheck check_generalized_matroid(const GenMatroid& gm);

/// R-natural-minor representation: weighted bipartite graph plus a
/// generalized matroid on the right nodes; W is the graph's contracted
/// left range.
struct RNatRep {
  WeightedBipGraph graph;
  GenMatroid base;

  RNatRep(WeightedBipGraph g, GenMatroid b);
  ElemSet v_nodes() const { return graph.v_nodes(); }
  ElemSet w_nodes() const { return graph.w_nodes(); }
};

/// f(X) = max weight matching covering X u W with right endpoints in the
/// generalized matroid. Throws std::invalid_argument when the base fails
/// the exchange check.
ExtRat rnat_minor_eval(const RNatRep& rep, ElemSet x);
/// Full table over 2^V.
VGM rnat_table(const RNatRep& rep);

/// Re-representation of the endowment by T (shifted weights, T joins W).
RNatRep endow_representation(const RNatRep& rep, ElemSet t);

/// Re-representation of the merge of two functions on a common V by
/// gluing the graphs along V.
RNatRep merge_representation(const RNatRep& a, const RNatRep& b);

}  // namespace valmat
