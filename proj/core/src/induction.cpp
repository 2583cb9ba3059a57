#include "valmat/induction.hpp"

#include <algorithm>
#include <map>

namespace valmat {

namespace {

// Enumerates matchings covering `nodes` (left) whose right endpoints stay
// independent in the domain matroid of `base`; reports weight + base(Y).
void bipartite_value_rec(const WeightedBipGraph& g, const ValMat& base, const Matroid* dom,
                         const std::vector<int>& nodes, std::size_t pos, ElemSet rights, Rat acc, ExtRat& best) {
  if (pos == nodes.size()) {
    ExtRat v = ExtRat(acc) + base(rights);
    if (best < v) best = v;
    return;
  }
  int vnode = nodes[pos];
  for (const Edge& e : g.edges) {
    if (e.left != vnode || rights.contains(e.right)) continue;
    ElemSet next = rights.with(e.right);
    if (dom && dom->rank(next) != next.size()) continue;
    bipartite_value_rec(g, base, dom, nodes, pos + 1, next, acc + e.weight, best);
  }
}

}  // namespace

ExtRat induce_bipartite_value(const WeightedBipGraph& g, const ValMat& base, ElemSet x) {
  if (base.ground_size() != g.right_count) throw std::invalid_argument("base ground does not match right nodes");
  if (!x.subset_of(ElemSet::full(g.left_count))) throw std::out_of_range("set outside left nodes");
  if (x.size() != base.layer()) return ExtRat::neg_inf();
  if (base.dom_empty()) return ExtRat::neg_inf();
  Matroid dom = base.dom_matroid();
  ExtRat best = ExtRat::neg_inf();
  std::vector<int> nodes = x.to_vector();
  bipartite_value_rec(g, base, &dom, nodes, 0, ElemSet(), Rat(0), best);
  return best;
}

ValMat induce_bipartite(const WeightedBipGraph& g, const ValMat& base) {
  g.validate();
  int d = base.layer();
  ValMat out(g.left_count, d);
  if (d > capacity_bound(10))
    throw capacity_error("bipartite induction at layer " + std::to_string(d) + " exceeds bound");
  if (base.dom_empty() || d > g.left_count) return out;
  for_each_subset_of_size(ElemSet::full(g.left_count), d,
                          [&](ElemSet x) { out.set(x, induce_bipartite_value(g, base, x)); });
  return out;
}

NetworkReduction network_to_bipartite(const Network& net, const ValMat& base) {
  net.validate();
  if (base.ground_size() != net.terminals_u.size()) throw std::invalid_argument("base ground does not match U terminals");
  // A directed cycle among intermediate nodes would let the matching
  // encoding pick up cycle weight that no node-disjoint path system can
  // realize, so the reduction requires an acyclic intermediate part.
  {
    ElemSet mid_nodes = ElemSet::full(net.node_count) - net.terminals_v - net.terminals_u;
    std::vector<int> state(net.node_count, 0);
    std::function<bool(int)> has_cycle = [&](int v) {
      state[v] = 1;
      for (const Arc& a : net.arcs)
        if (a.from == v && mid_nodes.contains(a.to)) {
          if (state[a.to] == 1) return true;
          if (state[a.to] == 0 && has_cycle(a.to)) return true;
        }
      state[v] = 2;
      return false;
    };
    for (int v : mid_nodes)
      if (state[v] == 0 && has_cycle(v))
        throw std::invalid_argument("network induction requires an acyclic intermediate part");
  }
  std::vector<int> v_nodes = net.terminals_v.to_vector();
  std::vector<int> u_nodes = net.terminals_u.to_vector();
  ElemSet mid = ElemSet::full(net.node_count) - net.terminals_v - net.terminals_u;
  std::vector<int> w_nodes = mid.to_vector();
  const int nv = static_cast<int>(v_nodes.size());
  const int nu = static_cast<int>(u_nodes.size());
  const int nw = static_cast<int>(w_nodes.size());

  std::vector<int> left_index(net.node_count, -1), right_index(net.node_count, -1);
  for (int i = 0; i < nv; ++i) left_index[v_nodes[i]] = i;
  for (int i = 0; i < nw; ++i) left_index[w_nodes[i]] = nv + i;
  for (int i = 0; i < nu; ++i) right_index[u_nodes[i]] = i;
  for (int i = 0; i < nw; ++i) right_index[w_nodes[i]] = nu + i;

  // Parallel arcs collapse to their maximum weight; arcs leaving U or
  // entering V can never lie on a path system and are dropped.
  std::map<std::pair<int, int>, Rat> best;
  for (const Arc& a : net.arcs) {
    if (net.terminals_u.contains(a.from) || net.terminals_v.contains(a.to) || a.from == a.to) continue;
    std::pair<int, int> key{left_index[a.from], right_index[a.to]};
    auto it = best.find(key);
    if (it == best.end() || it->second < a.weight) best[key] = a.weight;
  }

  WeightedBipGraph g(nv + nw, nv, nu + nw);
  for (const auto& [key, w] : best) g.add_edge(key.first, key.second, w);
  for (int i = 0; i < nw; ++i) g.add_edge(nv + i, nu + i, Rat(0));

  ElemSet w_left;
  for (int i = 0; i < nw; ++i) w_left.insert(nv + i);
  return NetworkReduction{std::move(g), direct_sum(base, ValMat::free_valmat(nw)), w_left};
}

ValMat induce_network(const Network& net, const ValMat& base) {
  NetworkReduction red = network_to_bipartite(net, base);
  return contraction(induce_bipartite(red.graph, red.lifted_base), red.w_left);
}

namespace {

void path_system_rec(const Network& net, const ValMat& base, const std::vector<int>& sources, std::size_t pos,
                     ElemSet used, ElemSet endpoints, Rat acc, ExtRat& best);

// Extends a path currently at `node` (already marked used).
void extend_path(const Network& net, const ValMat& base, const std::vector<int>& sources, std::size_t pos,
                 ElemSet used, ElemSet endpoints, Rat acc, int node, ExtRat& best) {
  for (const Arc& a : net.arcs) {
    if (a.from != node || used.contains(a.to)) continue;
    if (net.terminals_v.contains(a.to)) continue;  // paths touch V only at their start
    if (net.terminals_u.contains(a.to)) {
      path_system_rec(net, base, sources, pos + 1, used.with(a.to), endpoints.with(a.to), acc + a.weight, best);
    } else {
      extend_path(net, base, sources, pos, used.with(a.to), endpoints, acc + a.weight, a.to, best);
    }
  }
}

void path_system_rec(const Network& net, const ValMat& base, const std::vector<int>& sources, std::size_t pos,
                     ElemSet used, ElemSet endpoints, Rat acc, ExtRat& best) {
  if (pos == sources.size()) {
    // Map endpoints (network ids) to base indices (position within U).
    ElemSet y;
    int idx = 0;
    for (int u : net.terminals_u) {
      if (endpoints.contains(u)) y.insert(idx);
      ++idx;
    }
    ExtRat v = ExtRat(acc) + base(y);
    if (best < v) best = v;
    return;
  }
  extend_path(net, base, sources, pos, used, endpoints, acc, sources[pos], best);
}

}  // namespace

ExtRat induce_network_value_brute(const Network& net, const ValMat& base, ElemSet x) {
  net.validate();
  if (net.node_count > capacity_bound(16)) throw capacity_error("network path enumeration exceeds bound");
  std::vector<int> v_nodes = net.terminals_v.to_vector();
  std::vector<int> sources;
  for (int i = 0; i < static_cast<int>(v_nodes.size()); ++i)
    if (x.contains(i)) sources.push_back(v_nodes[i]);
  if (static_cast<int>(sources.size()) != base.layer()) return ExtRat::neg_inf();
  ExtRat best = ExtRat::neg_inf();
  ElemSet used;
  for (int s : sources) used.insert(s);
  path_system_rec(net, base, sources, 0, used, ElemSet(), Rat(0), best);
  return best;
}

RMinorRep::RMinorRep(WeightedBipGraph g, Matroid m) : graph(std::move(g)), matroid(std::move(m)) {
  graph.validate();
  if (matroid.ground_size() != graph.right_count)
    throw invalid_representation_error("matroid ground does not match right nodes");
  if (matroid.rank() < w_nodes().size())
    throw invalid_representation_error("rank identity violated: r(M) < |W|");
}

ExtRat eval_rminor(const RMinorRep& rep, ElemSet x) {
  if (!x.subset_of(rep.v_nodes())) throw std::out_of_range("set outside V");
  if (x.size() != rep.layer()) return ExtRat::neg_inf();
  return max_weight_independent_matching(rep.graph, rep.matroid, x | rep.w_nodes()).value;
}

ExtRat eval_rminor_brute(const RMinorRep& rep, ElemSet x) {
  if (!x.subset_of(rep.v_nodes())) throw std::out_of_range("set outside V");
  if (x.size() != rep.layer()) return ExtRat::neg_inf();
  return max_weight_independent_matching_brute(rep.graph, rep.matroid, x | rep.w_nodes()).value;
}

namespace {

ValMat rminor_table_impl(const RMinorRep& rep, bool brute) {
  int d = rep.layer();
  ValMat out(rep.graph.w_start, d);
  if (d > rep.graph.w_start) return out;
  for_each_subset_of_size(rep.v_nodes(), d, [&](ElemSet x) {
    out.set(x, brute ? eval_rminor_brute(rep, x) : eval_rminor(rep, x));
  });
  return out;
}

}  // namespace

ValMat rminor_table(const RMinorRep& rep) { return rminor_table_impl(rep, false); }
ValMat rminor_table_brute(const RMinorRep& rep) { return rminor_table_impl(rep, true); }

RMinorRep trim_representation(const RMinorRep& rep) {
  if (!rep.w_nodes().empty()) throw std::invalid_argument("trimming requires an R-induced representation (W empty)");
  const WeightedBipGraph& g = rep.graph;
  WeightedBipGraph out(g.left_count, g.w_start, g.right_count);
  for (int v = 0; v < g.left_count; ++v) {
    // Greedy maximum-weight basis of M restricted to Gamma(v), weights
    // omega(u) = c_vu, ties broken by the smaller element index.
    std::vector<const Edge*> incident;
    for (const Edge& e : g.edges)
      if (e.left == v) incident.push_back(&e);
    std::stable_sort(incident.begin(), incident.end(), [](const Edge* a, const Edge* b) {
      if (a->weight != b->weight) return a->weight > b->weight;
      return a->right < b->right;
    });
    ElemSet kept;
    for (const Edge* e : incident) {
      ElemSet cand = kept.with(e->right);
      if (rep.matroid.rank(cand) == cand.size()) kept = cand;
    }
    for (const Edge* e : incident)
      if (kept.contains(e->right)) out.add_edge(v, e->right, e->weight);
  }
  return RMinorRep(std::move(out), rep.matroid);
}

RMinorRep delete_representation(const RMinorRep& rep, ElemSet del_v) {
  if (!del_v.subset_of(rep.v_nodes())) throw std::out_of_range("deleted nodes must lie in V");
  const WeightedBipGraph& g = rep.graph;
  std::vector<int> left_map(g.left_count, -1);
  int next = 0;
  for (int i = 0; i < g.left_count; ++i)
    if (!del_v.contains(i)) left_map[i] = next++;
  WeightedBipGraph out(next, g.w_start - del_v.size(), g.right_count);
  for (const Edge& e : g.edges)
    if (left_map[e.left] >= 0) out.add_edge(left_map[e.left], e.right, e.weight);
  return RMinorRep(std::move(out), rep.matroid);
}

RMinorRep dual_representation(const RMinorRep& rep) {
  const WeightedBipGraph& g = rep.graph;
  const int nv = g.w_start;
  const int nw = g.left_count - g.w_start;
  const int nu = g.right_count;
  // Left: V (original labels) then a copy of U acting as the contracted
  // part. Right: U' then V' then W'.
  WeightedBipGraph out(nv + nu, nv, nu + nv + nw);
  for (int v = 0; v < nv; ++v) out.add_edge(v, nu + v, Rat(0));          // (v, v')
  for (int u = 0; u < nu; ++u) out.add_edge(nv + u, u, Rat(0));          // (u, u')
  for (const Edge& e : g.edges) {
    int vprime = e.left < nv ? nu + e.left : nu + nv + (e.left - nv);    // V' or W' copy
    out.add_edge(nv + e.right, vprime, e.weight);                        // (u, v') for (v,u) in E
  }
  Matroid m_out = direct_sum(rep.matroid.dual(), Matroid::free_matroid(nv + nw));
  return RMinorRep(std::move(out), std::move(m_out));
}

RMinorRep direct_sum_representation(const RMinorRep& a, const RMinorRep& b) {
  const int nva = a.graph.w_start, nvb = b.graph.w_start;
  const int nwa = a.graph.left_count - nva, nwb = b.graph.left_count - nvb;
  const int nua = a.graph.right_count;
  WeightedBipGraph out(nva + nvb + nwa + nwb, nva + nvb, nua + b.graph.right_count);
  auto left_a = [&](int i) { return i < nva ? i : nva + nvb + (i - nva); };
  auto left_b = [&](int i) { return i < nvb ? nva + i : nva + nvb + nwa + (i - nvb); };
  for (const Edge& e : a.graph.edges) out.add_edge(left_a(e.left), e.right, e.weight);
  for (const Edge& e : b.graph.edges) out.add_edge(left_b(e.left), nua + e.right, e.weight);
  return RMinorRep(std::move(out), direct_sum(a.matroid, b.matroid));
}

}  // namespace valmat
