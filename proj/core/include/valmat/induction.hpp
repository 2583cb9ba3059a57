#pragma once

#include "valmat/graph.hpp"
#include "valmat/intersection.hpp"
#include "valmat/matroid.hpp"
#include "valmat/valfn.hpp"

namespace valmat {

/// Induction of a valuated matroid through a weighted bipartite graph:
///   f(X) = max{ c(mu) + base(Y) : matching mu, left ends X, right ends Y }.
/// The result lives on the full left node set and has the base's rank.
ValMat induce_bipartite(const WeightedBipGraph& g, const ValMat& base);

/// Single value f(X), brute-force matching enumeration.
ExtRat induce_bipartite_value(const WeightedBipGraph& g, const ValMat& base, ElemSet x);

/// Bipartite reduction of a network induction (node-splitting): returns
/// (G, h, W) with h = base + free(W') such that the network induction
/// equals contraction of induce_bipartite(G, h) by the left copy of W.
struct NetworkReduction {
  WeightedBipGraph graph;  // left = V then W, right = U then W'
  ValMat lifted_base;
  ElemSet w_left;  // left ids of the intermediate nodes
};
NetworkReduction network_to_bipartite(const Network& net, const ValMat& base);

/// Induction of a valuated matroid by a directed network, evaluated
/// through the bipartite reduction plus contraction.
ValMat induce_network(const Network& net, const ValMat& base);

/// Test oracle: direct enumeration of node-disjoint path systems from X
/// (in V) to U; intermediate nodes stay outside V and U.
ExtRat induce_network_value_brute(const Network& net, const ValMat& base, ElemSet x);

struct invalid_representation_error : std::runtime_error {
  explicit invalid_representation_error(const std::string& what) : std::runtime_error(what) {}
};

/// R-minor representation: weighted bipartite graph (V u W, U; E), a
/// matroid on U of rank d + |W|, and the contracted left part W (the
/// graph's [w_start, left_count) range). W empty = R-induced.
struct RMinorRep {
  WeightedBipGraph graph;
  Matroid matroid;

  RMinorRep(WeightedBipGraph g, Matroid m);

  ElemSet v_nodes() const { return graph.v_nodes(); }
  ElemSet w_nodes() const { return graph.w_nodes(); }
  int layer() const { return matroid.rank() - w_nodes().size(); }
};

/// f(X) = maximum weight independent matching covering X u W whose right
/// endpoints form a basis; |X| = layer(). Algorithmic solver path.
ExtRat eval_rminor(const RMinorRep& rep, ElemSet x);
/// Same value by brute-force enumeration (oracle).
ExtRat eval_rminor_brute(const RMinorRep& rep, ElemSet x);

/// Full value table of the represented valuated matroid on V.
ValMat rminor_table(const RMinorRep& rep);
ValMat rminor_table_brute(const RMinorRep& rep);

/// Neighborhood trimming for R-induced representations (W must be empty):
/// each left node keeps only a maximum-weight basis of the matroid
/// restricted to its neighborhood (greedy, ties to the smaller index).
/// The induced function is unchanged; left degrees become <= rank.
RMinorRep trim_representation(const RMinorRep& rep);

/// Representation of the deletion f \ X: remove the nodes X from V.
RMinorRep delete_representation(const RMinorRep& rep, ElemSet del_v);

/// Representation of the dual f*: mirrored graph with the dual matroid
/// plus a free part, contracting a copy of U.
RMinorRep dual_representation(const RMinorRep& rep);

/// Representation of f1 + f2 on the disjoint union of the two graphs.
RMinorRep direct_sum_representation(const RMinorRep& a, const RMinorRep& b);

}  // namespace valmat
