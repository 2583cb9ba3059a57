#include "valmat/graph.hpp"

#include <set>
#include <stdexcept>

namespace valmat {

void WeightedBipGraph::add_edge(int left, int right, Rat weight) {
  edges.push_back(Edge{left, right, std::move(weight)});
}

void WeightedBipGraph::validate() const {
  if (w_start < 0 || w_start > left_count) throw std::invalid_argument("w_start outside [0, left_count]");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.left < 0 || e.left >= left_count || e.right < 0 || e.right >= right_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (!seen.insert({e.left, e.right}).second) throw std::invalid_argument("duplicate parallel edge");
  }
}

ElemSet WeightedBipGraph::neighbors(ElemSet left_set) const {
  ElemSet out;
  for (const Edge& e : edges)
    if (left_set.contains(e.left)) out.insert(e.right);
  return out;
}

ElemSet WeightedBipGraph::neighbors(ElemSet left_set, const std::vector<int>& edge_subset) const {
  ElemSet out;
  for (int id : edge_subset)
    if (left_set.contains(edges[id].left)) out.insert(edges[id].right);
  return out;
}

ElemSet Matching::left_cover(const WeightedBipGraph& g) const {
  ElemSet s;
  for (int id : edge_ids) s.insert(g.edges[id].left);
  return s;
}

ElemSet Matching::right_cover(const WeightedBipGraph& g) const {
  ElemSet s;
  for (int id : edge_ids) s.insert(g.edges[id].right);
  return s;
}

Rat Matching::weight(const WeightedBipGraph& g) const {
  Rat w = 0;
  for (int id : edge_ids) w += g.edges[id].weight;
  return w;
}

void Network::validate() const {
  if (node_count < 0 || node_count > ElemSet::kMaxGround) throw std::invalid_argument("node count out of range");
  ElemSet all = ElemSet::full(node_count);
  if (!terminals_v.subset_of(all) || !terminals_u.subset_of(all)) throw std::invalid_argument("terminal outside node set");
  if (terminals_v.intersects(terminals_u)) throw std::invalid_argument("terminal sets V and U must be disjoint");
  if (terminals_v.empty() || terminals_u.empty()) throw std::invalid_argument("terminal sets must be nonempty");
  for (const Arc& a : arcs)
    if (a.from < 0 || a.from >= node_count || a.to < 0 || a.to >= node_count)
      throw std::invalid_argument("arc endpoint out of range");
}

}  // namespace valmat
