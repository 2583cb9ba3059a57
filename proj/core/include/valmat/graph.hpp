#pragma once

#include <vector>

#include "valmat/elemset.hpp"
#include "valmat/rational.hpp"

namespace valmat {

struct Edge {
  int left = 0;
  int right = 0;
  Rat weight;
};

/// Bipartite graph with exact rational edge weights. Left nodes are
/// partitioned as V = [0, w_start) then W = [w_start, left_count); for
/// plain induction (no contracted part) w_start == left_count.
struct WeightedBipGraph {
  int left_count = 0;
  int w_start = 0;
  int right_count = 0;
  std::vector<Edge> edges;

  WeightedBipGraph() = default;
  WeightedBipGraph(int left, int right) : left_count(left), w_start(left), right_count(right) {}
  WeightedBipGraph(int left, int wstart, int right) : left_count(left), w_start(wstart), right_count(right) {}

  ElemSet v_nodes() const { return ElemSet::full(w_start); }
  ElemSet w_nodes() const { return ElemSet::full(left_count) - ElemSet::full(w_start); }

  void add_edge(int left, int right, Rat weight);
  /// Throws std::invalid_argument on duplicate or out-of-range edges.
  void validate() const;

  /// Neighbourhood in the right part of a set of left nodes.
  ElemSet neighbors(ElemSet left_set) const;
  /// Neighbourhood restricted to the given edge subset (indices into edges).
  ElemSet neighbors(ElemSet left_set, const std::vector<int>& edge_subset) const;
};

/// A matching as a list of edge indices into a graph's edge list.
struct Matching {
  std::vector<int> edge_ids;

  ElemSet left_cover(const WeightedBipGraph& g) const;
  ElemSet right_cover(const WeightedBipGraph& g) const;
  Rat weight(const WeightedBipGraph& g) const;
};

struct Arc {
  int from = 0;
  int to = 0;
  Rat weight;
};

/// Directed network with designated disjoint terminal sets V (sources)
/// and U (sinks). Path systems are node-disjoint; intermediate nodes lie
/// outside V and U.
struct Network {
  int node_count = 0;
  std::vector<Arc> arcs;
  ElemSet terminals_v;
  ElemSet terminals_u;

  void validate() const;
};

}  // namespace valmat
