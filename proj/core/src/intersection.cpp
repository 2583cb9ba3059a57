#include "valmat/intersection.hpp"

#include <algorithm>
#include <numeric>

namespace valmat {

namespace {

void check_cover(const WeightedBipGraph& g, ElemSet cover) {
  if (!cover.subset_of(ElemSet::full(g.left_count))) throw std::out_of_range("cover outside left nodes");
}

// Recursive exact-cover enumeration. Visits every matching whose left
// endpoints are exactly `cover` and whose right endpoints are independent.
template <typename Fn>
void enumerate_covering_matchings(const WeightedBipGraph& g, const Matroid& m, const std::vector<int>& cover_nodes,
                                  std::size_t pos, ElemSet used_right, std::vector<int>& chosen, Fn&& visit) {
  if (pos == cover_nodes.size()) {
    visit(chosen);
    return;
  }
  int v = cover_nodes[pos];
  for (int id = 0; id < static_cast<int>(g.edges.size()); ++id) {
    const Edge& e = g.edges[id];
    if (e.left != v || used_right.contains(e.right)) continue;
    ElemSet next = used_right.with(e.right);
    if (m.rank(next) != next.size()) continue;  // prune dependent partials
    chosen.push_back(id);
    enumerate_covering_matchings(g, m, cover_nodes, pos + 1, next, chosen, visit);
    chosen.pop_back();
  }
}

}  // namespace

IndependentMatchingResult max_weight_independent_matching_brute(const WeightedBipGraph& g, const Matroid& m,
                                                                ElemSet cover) {
  check_cover(g, cover);
  if (cover.size() > capacity_bound(8))
    throw capacity_error("brute-force matching on |cover|=" + std::to_string(cover.size()) + " exceeds bound");
  std::vector<int> nodes = cover.to_vector();
  IndependentMatchingResult best{ExtRat::neg_inf(), std::nullopt};
  std::vector<int> chosen;
  enumerate_covering_matchings(g, m, nodes, 0, ElemSet(), chosen, [&](const std::vector<int>& ids) {
    Matching mu{ids};
    ExtRat w{mu.weight(g)};
    if (!best.matching || best.value < w) {
      best.value = w;
      best.matching = mu;
    }
  });
  return best;
}

std::vector<Matching> optimal_matchings(const WeightedBipGraph& g, const Matroid& m, ElemSet cover,
                                        const ExtRat& opt) {
  check_cover(g, cover);
  std::vector<int> nodes = cover.to_vector();
  std::vector<Matching> out;
  std::vector<int> chosen;
  enumerate_covering_matchings(g, m, nodes, 0, ElemSet(), chosen, [&](const std::vector<int>& ids) {
    Matching mu{ids};
    if (ExtRat(mu.weight(g)) == opt) out.push_back(mu);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Weight-splitting solver: successive shortest augmenting paths in the
// exchange graph of the two matroids on the edge set (partition matroid on
// left endpoints, m lifted along right endpoints). After each augmentation
// the current set is a maximum-weight common independent set of its size;
// paths are chosen lexicographically by (length, arc count, discovery
// order), which makes the output deterministic.
// ---------------------------------------------------------------------------

IndependentMatchingResult max_weight_matching_of_size(const WeightedBipGraph& g, const Matroid& m,
                                                      ElemSet allowed_left, int k) {
  check_cover(g, allowed_left);
  std::vector<int> elems;  // edge ids with left endpoint allowed
  for (int id = 0; id < static_cast<int>(g.edges.size()); ++id)
    if (allowed_left.contains(g.edges[id].left)) elems.push_back(id);
  const int ne = static_cast<int>(elems.size());

  std::vector<char> in_set(ne, 0);
  auto left_of = [&](int i) { return g.edges[elems[i]].left; };
  auto right_of = [&](int i) { return g.edges[elems[i]].right; };
  auto weight_of = [&](int i) -> const Rat& { return g.edges[elems[i]].weight; };

  for (int round = 0; round < k; ++round) {
    ElemSet left_cov, right_cov;
    int size = 0;
    for (int i = 0; i < ne; ++i)
      if (in_set[i]) {
        left_cov.insert(left_of(i));
        right_cov.insert(right_of(i));
        ++size;
      }

    struct Node {
      bool reached = false;
      Rat dist;
      int hops = 0;
      int parent = -1;
    };
    std::vector<Node> node(ne);

    auto length = [&](int i) -> Rat { return in_set[i] ? weight_of(i) : Rat(-weight_of(i)); };

    std::vector<char> source_ok(ne, 0), target_ok(ne, 0);
    for (int i = 0; i < ne; ++i) {
      if (in_set[i]) continue;
      source_ok[i] = !left_cov.contains(left_of(i));
      if (!right_cov.contains(right_of(i))) {
        ElemSet r = right_cov.with(right_of(i));
        target_ok[i] = m.rank(r) == r.size();
      }
      if (source_ok[i]) {
        node[i].reached = true;
        node[i].dist = length(i);
        node[i].hops = 1;
      }
    }

    // Arcs of the exchange graph, evaluated on demand.
    auto arc = [&](int u, int v) -> bool {
      if (in_set[u] == in_set[v]) return false;
      if (in_set[u]) {  // u in I, v outside: I - u + v independent in partition side
        return left_of(v) == left_of(u) || !left_cov.contains(left_of(v));
      }
      // u outside, v in I: I - v + u independent on the matroid side
      if (right_of(u) == right_of(v)) return true;
      if (right_cov.contains(right_of(u))) return false;
      ElemSet r = right_cov.without(right_of(v)).with(right_of(u));
      return m.rank(r) == r.size();
    };

    bool changed = true;
    for (int pass = 0; pass <= ne + 1 && changed; ++pass) {
      changed = false;
      for (int u = 0; u < ne; ++u) {
        if (!node[u].reached) continue;
        for (int v = 0; v < ne; ++v) {
          if (!arc(u, v)) continue;
          Rat cand = node[u].dist + length(v);
          int hops = node[u].hops + 1;
          if (!node[v].reached || cand < node[v].dist || (cand == node[v].dist && hops < node[v].hops)) {
            node[v].reached = true;
            node[v].dist = cand;
            node[v].hops = hops;
            node[v].parent = u;
            changed = true;
          }
        }
      }
    }
    if (changed) throw std::logic_error("negative cycle in exchange graph (extremality invariant broken)");

    int best = -1;
    for (int i = 0; i < ne; ++i) {
      if (!target_ok[i] || !node[i].reached) continue;
      if (best < 0 || node[i].dist < node[best].dist ||
          (node[i].dist == node[best].dist && node[i].hops < node[best].hops))
        best = i;
    }
    if (best < 0) return {ExtRat::neg_inf(), std::nullopt};

    for (int cur = best; cur >= 0; cur = node[cur].parent) in_set[cur] ^= 1;
  }

  Matching mu;
  Rat total = 0;
  for (int i = 0; i < ne; ++i)
    if (in_set[i]) {
      mu.edge_ids.push_back(elems[i]);
      total += weight_of(i);
    }
  return {ExtRat(total), mu};
}

IndependentMatchingResult max_weight_independent_matching(const WeightedBipGraph& g, const Matroid& m,
                                                          ElemSet cover) {
  return max_weight_matching_of_size(g, m, cover, cover.size());
}

IndependentMatchingResult solve_full_rank_program(const WeightedBipGraph& g, const Matroid& m) {
  g.validate();
  if (m.ground_size() != g.right_count) throw std::invalid_argument("matroid ground does not match right nodes");
  const int k = m.rank();
  ElemSet w_nodes = g.w_nodes();
  if (w_nodes.size() > k || k - w_nodes.size() > g.w_start) return {ExtRat::neg_inf(), std::nullopt};

  // Lexicographic boost: matchings covering more of W dominate. All
  // matchings covering W fully get the same offset, so the optimum among
  // them is undistorted.
  Rat big_m = 1;
  for (const Edge& e : g.edges) big_m += 2 * abs(e.weight);
  WeightedBipGraph boosted = g;
  for (Edge& e : boosted.edges)
    if (w_nodes.contains(e.left)) e.weight += big_m;

  IndependentMatchingResult r = max_weight_matching_of_size(boosted, m, ElemSet::full(g.left_count), k);
  if (!r.matching) return {ExtRat::neg_inf(), std::nullopt};
  if (!w_nodes.subset_of(r.matching->left_cover(g))) return {ExtRat::neg_inf(), std::nullopt};
  return {ExtRat(r.matching->weight(g)), r.matching};
}

// ---------------------------------------------------------------------------
// Lovasz extension and the matroid of maximum-weight bases
// ---------------------------------------------------------------------------

std::vector<ElemSet> tau_level_sets(int n, const std::vector<Rat>& tau) {
  if (static_cast<int>(tau.size()) != n) throw std::invalid_argument("tau arity mismatch");
  std::vector<Rat> values = tau;
  std::sort(values.begin(), values.end(), [](const Rat& a, const Rat& b) { return a > b; });
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<ElemSet> levels;
  for (const Rat& v : values) {
    ElemSet s;
    for (int j = 0; j < n; ++j)
      if (tau[j] >= v) s.insert(j);
    levels.push_back(s);
  }
  if (levels.empty()) levels.push_back(ElemSet::full(n));  // n = 0
  return levels;
}

Rat lovasz_extension(const Matroid& m, const std::vector<Rat>& tau) {
  const int n = m.ground_size();
  if (static_cast<int>(tau.size()) != n) throw std::invalid_argument("tau arity mismatch");
  if (n == 0) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return tau[a] > tau[b]; });
  Rat result = 0;
  ElemSet prefix;
  for (int i = 0; i < n; ++i) {
    prefix.insert(order[i]);
    const Rat& here = tau[order[i]];
    if (i + 1 < n) {
      result += m.rank(prefix) * (here - tau[order[i + 1]]);
    } else {
      result += m.rank(prefix) * here;
    }
  }
  return result;
}

Matroid matroid_of_max_weight_bases(const Matroid& m, const std::vector<Rat>& tau) {
  std::vector<ElemSet> levels = tau_level_sets(m.ground_size(), tau);
  // rank(X) = sum over levels of r((X & D_l) u S_{l-1}) - r(S_{l-1})
  Matroid parent = m;
  return Matroid::from_oracle(m.ground_size(), [parent, levels](ElemSet x) {
    int total = 0;
    ElemSet prev;
    for (ElemSet s : levels) {
      ElemSet d = s - prev;
      total += parent.rank((x & d) | prev) - parent.rank(prev);
      prev = s;
    }
    return total;
  });
}

// ---------------------------------------------------------------------------
// Dual certificates
// ---------------------------------------------------------------------------

namespace {

Rat edge_slack(const WeightedBipGraph& g, const DualCert& cert, const Edge& e) {
  return cert.pi[e.left] + cert.tau[e.right] - e.weight;
}

// Raise tau so every level set is a flat (keeps feasibility and the
// Lovasz value), then lower level blocks that miss Gamma_E0(V) where a
// positive slack margin allows it.
void normalize_certificate(const WeightedBipGraph& g, const Matroid& m, DualCert& cert) {
  const int n = m.ground_size();
  for (int guard = 0; guard <= n; ++guard) {
    std::vector<ElemSet> levels = tau_level_sets(n, cert.tau);
    bool fixed_one = false;
    for (ElemSet s : levels) {
      ElemSet cl = m.closure(s);
      if (cl != s) {
        Rat level = cert.tau[s.min_element()];
        for (int j : s) level = std::min(level, cert.tau[j]);
        for (int j : cl - s) cert.tau[j] = level;
        fixed_one = true;
        break;
      }
    }
    if (!fixed_one) break;
  }

  for (int guard = 0; guard <= n; ++guard) {
    std::vector<int> e0 = tight_edges(g, cert);
    ElemSet v_reach = g.neighbors(g.v_nodes(), e0);
    std::vector<ElemSet> levels = tau_level_sets(n, cert.tau);
    bool adjusted = false;
    ElemSet prev;
    for (std::size_t l = 0; l < levels.size() && !adjusted; ++l) {
      ElemSet block = levels[l] - prev;
      prev = levels[l];
      if (block.empty() || block.intersects(v_reach)) continue;
      // Lower the block by the largest margin keeping feasibility and the
      // level order; a stuck block (zero margin) is left in place.
      bool bounded = false;
      Rat eps;
      for (const Edge& e : g.edges) {
        if (!block.contains(e.right)) continue;
        Rat s = edge_slack(g, cert, e);
        if (!bounded || s < eps) {
          eps = s;
          bounded = true;
        }
      }
      if (l + 1 < levels.size()) {
        Rat gap = cert.tau[block.min_element()] - cert.tau[(levels[l + 1] - levels[l]).min_element()];
        if (!bounded || gap < eps) {
          eps = gap;
          bounded = true;
        }
      }
      if (!bounded || eps <= 0) continue;
      for (int j : block) cert.tau[j] -= eps;
      adjusted = true;
    }
    if (!adjusted) break;
  }
}

}  // namespace

std::vector<int> tight_edges(const WeightedBipGraph& g, const DualCert& cert) {
  std::vector<int> out;
  for (int id = 0; id < static_cast<int>(g.edges.size()); ++id) {
    Rat s = edge_slack(g, cert, g.edges[id]);
    if (s < 0) throw std::domain_error("certificate is infeasible on edge " + std::to_string(id));
    if (s == 0) out.push_back(id);
  }
  return out;
}

WeightedBipGraph tight_subgraph(const WeightedBipGraph& g, const DualCert& cert) {
  WeightedBipGraph out(g.left_count, g.w_start, g.right_count);
  for (int id : tight_edges(g, cert)) out.edges.push_back(g.edges[id]);
  return out;
}

DualCert dual_certificate(const WeightedBipGraph& g, const Matroid& m) {
  IndependentMatchingResult opt = solve_full_rank_program(g, m);
  if (!opt.matching) throw no_certificate_error("independent matching program is infeasible");
  const Matching& mu = *opt.matching;
  ElemSet matched_left = mu.left_cover(g);
  ElemSet basis = mu.right_cover(g);
  const int nl = g.left_count, nr = g.right_count;

  // Difference-constraint system over pi, sigma = -tau and an anchor z0.
  // Its solution set is exactly the optimal duals (feasibility plus
  // complementary slackness against mu). Among them we take the pointwise
  // minimal one - shortest-path distances towards the anchor - which is
  // the selection that makes (E0, M_tau, W) a Rado-minor representation
  // of the maximizer family.
  const int z0 = nl + nr;
  struct DArc {
    int from, to;
    Rat len;
  };
  std::vector<DArc> arcs;
  for (const Edge& e : g.edges) arcs.push_back({e.left, nl + e.right, Rat(-e.weight)});  // sigma_j <= pi_i - c_ij
  for (int id : mu.edge_ids) {
    const Edge& e = g.edges[id];
    arcs.push_back({nl + e.right, e.left, e.weight});  // pi_i <= sigma_j + c_ij
  }
  for (int i : g.v_nodes()) {
    arcs.push_back({i, z0, 0});  // pi_i >= 0
    if (!matched_left.contains(i)) arcs.push_back({z0, i, 0});  // pi_i <= 0
  }
  for (int j : basis)
    for (int jp : ElemSet::full(nr) - basis)
      if (m.is_basis(basis.without(j).with(jp))) arcs.push_back({nl + jp, nl + j, 0});  // tau_j >= tau_jp

  // Shortest distances to z0, via one reversal; x_v = -dist(v -> z0) is
  // feasible (triangle inequality) and pointwise minimal. High-weight
  // escape arcs keep variables with no constraint chain to z0 finite.
  Rat escape = 1;
  for (const Edge& e : g.edges) escape += abs(e.weight);
  std::vector<Rat> dist(nl + nr + 1, escape);
  dist[z0] = 0;
  bool changed = true;
  for (int pass = 0; pass <= nl + nr + 1 && changed; ++pass) {
    changed = false;
    for (const DArc& a : arcs) {
      Rat cand = dist[a.to] + a.len;  // reversed arc
      if (cand < dist[a.from]) {
        dist[a.from] = cand;
        changed = true;
      }
    }
  }
  if (changed) throw std::logic_error("negative cycle in dual feasibility system");

  DualCert cert;
  cert.pi.reserve(nl);
  cert.tau.reserve(nr);
  for (int i = 0; i < nl; ++i) cert.pi.push_back(-dist[i]);
  for (int j = 0; j < nr; ++j) cert.tau.push_back(dist[nl + j]);

  normalize_certificate(g, m, cert);
  return cert;
}

CertReport verify_certificate(const WeightedBipGraph& g, const Matroid& m, const DualCert& cert) {
  CertReport rep;
  if (static_cast<int>(cert.pi.size()) != g.left_count || static_cast<int>(cert.tau.size()) != g.right_count) {
    rep.violations.push_back("certificate arity mismatch");
    return rep;
  }

  rep.feasible = true;
  for (const Edge& e : g.edges)
    if (edge_slack(g, cert, e) < 0) {
      rep.feasible = false;
      rep.violations.push_back("edge (" + std::to_string(e.left) + "," + std::to_string(e.right) + ") violates pi+tau>=c");
    }
  for (int i : g.v_nodes())
    if (cert.pi[i] < 0) {
      rep.feasible = false;
      rep.violations.push_back("pi[" + std::to_string(i) + "] negative on V");
    }

  const int d = m.rank() - g.w_nodes().size();
  ElemSet w_nodes = g.w_nodes();

  // Brute-force primal optimum over all layers X.
  rep.primal_opt = ExtRat::neg_inf();
  std::vector<ElemSet> maximizers;
  if (d >= 0) {
    for_each_subset_of_size(g.v_nodes(), d, [&](ElemSet x) {
      IndependentMatchingResult r = max_weight_independent_matching_brute(g, m, x | w_nodes);
      if (!r.matching) return;
      if (rep.primal_opt < r.value) {
        rep.primal_opt = r.value;
        maximizers.clear();
      }
      if (r.value == rep.primal_opt) maximizers.push_back(x);
    });
  }

  Rat dual_rat = lovasz_extension(m, cert.tau);
  for (const Rat& p : cert.pi) dual_rat += p;
  rep.dual_value = ExtRat(dual_rat);
  rep.strong_duality = rep.primal_opt.finite() && rep.primal_opt == rep.dual_value;
  if (!rep.strong_duality) rep.violations.push_back("dual objective differs from brute-force primal optimum");

  if (!rep.feasible || !rep.primal_opt.finite()) return rep;

  // E* (union of optimal matchings over all maximizers) must be tight.
  std::vector<int> e0 = tight_edges(g, cert);
  std::vector<char> is_tight(g.edges.size(), 0);
  for (int id : e0) is_tight[id] = 1;
  rep.optimal_edges_tight = true;
  for (ElemSet x : maximizers)
    for (const Matching& mu : optimal_matchings(g, m, x | w_nodes, rep.primal_opt))
      for (int id : mu.edge_ids)
        if (!is_tight[id]) {
          rep.optimal_edges_tight = false;
          rep.violations.push_back("optimal matching uses slack edge " + std::to_string(id));
        }

  // Maximizer family equals the Rado-minor matroid of (E0, M_tau, W).
  WeightedBipGraph g0 = tight_subgraph(g, cert);
  Matroid m_tau = matroid_of_max_weight_bases(m, cert.tau);
  rep.maximizer_family_matches = true;
  std::vector<ElemSet> max_sorted = maximizers;
  std::sort(max_sorted.begin(), max_sorted.end());
  for_each_subset_of_size(g.v_nodes(), d, [&](ElemSet x) {
    bool member = max_weight_independent_matching_brute(g0, m_tau, x | w_nodes).matching.has_value();
    bool is_max = std::binary_search(max_sorted.begin(), max_sorted.end(), x);
    if (member != is_max) {
      rep.maximizer_family_matches = false;
      rep.violations.push_back("Rado-minor membership of " + x.to_string() + " disagrees with maximizer family");
    }
  });

  // pi_i = 0 whenever some maximizer avoids i.
  rep.pi_zero_off_maximizers = true;
  for (int i : g.v_nodes()) {
    bool avoidable = false;
    for (ElemSet x : maximizers)
      if (!x.contains(i)) avoidable = true;
    if (avoidable && cert.pi[i] != 0) {
      rep.pi_zero_off_maximizers = false;
      rep.violations.push_back("pi[" + std::to_string(i) + "] nonzero but avoidable by a maximizer");
    }
  }
  return rep;
}

}  // namespace valmat
