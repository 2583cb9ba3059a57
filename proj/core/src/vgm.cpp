#include "valmat/vgm.hpp"

#include <algorithm>
#include <numeric>

#include "valmat/induction.hpp"

namespace valmat {

VGM::VGM(int n) : n_(n) {
  if (n < 0 || n > 16) throw capacity_error("dense vgm table limited to n <= 16");
  table_.assign(std::size_t(1) << n, ExtRat::neg_inf());
}

VGM VGM::from_function(int n, const std::function<ExtRat(ElemSet)>& fn) {
  VGM f(n);
  for (std::uint64_t x = 0; x < (std::uint64_t(1) << n); ++x) f.table_[x] = fn(ElemSet(x));
  return f;
}

void VGM::set(ElemSet x, ExtRat v) {
  if (!x.subset_of(ElemSet::full(n_))) throw std::out_of_range("set outside ground set");
  table_[x.bits()] = std::move(v);
}

std::string VgmWitness::to_string() const {
  return std::string(size_axiom ? "(size axiom)" : "(exchange axiom)") + " X=" + x.to_string() + " Y=" + y.to_string() +
         (i >= 0 ? " i=" + std::to_string(i) : "");
}

VgmCheck check_vgm(const VGM& f) {
  const int n = f.ground_size();
  if (n > capacity_bound(12)) throw capacity_error("vgm axiom sweep exceeds bound");
  const std::uint64_t total = std::uint64_t(1) << n;
  for (std::uint64_t xb = 0; xb < total; ++xb) {
    ElemSet x(xb);
    const ExtRat& fx = f(x);
    if (!fx.finite()) continue;
    for (std::uint64_t yb = 0; yb < total; ++yb) {
      ElemSet y(yb);
      const ExtRat& fy = f(y);
      if (!fy.finite()) continue;
      ExtRat lhs = fx + fy;
      if (x.size() < y.size()) {
        bool ok = false;
        for (int j : y - x)
          if (lhs <= f(x.with(j)) + f(y.without(j))) {
            ok = true;
            break;
          }
        if (!ok) return {false, VgmWitness{x, y, -1, true}};
      } else if (x.size() == y.size()) {
        for (int i : x - y) {
          bool ok = false;
          for (int j : y - x)
            if (lhs <= f(x.without(i).with(j)) + f(y.with(i).without(j))) {
              ok = true;
              break;
            }
          if (!ok) return {false, VgmWitness{x, y, i, false}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

ValMat layer(const VGM& f, int k) {
  if (k < 0 || k > f.ground_size()) throw std::out_of_range("layer index out of range");
  ValMat out(f.ground_size(), k);
  for_each_subset_of_size(ElemSet::full(f.ground_size()), k, [&](ElemSet x) { out.set(x, f(x)); });
  return out;
}

VGM merge(const VGM& f, const VGM& g) {
  if (f.ground_size() != g.ground_size()) throw std::invalid_argument("merge requires a common ground set");
  const int n = f.ground_size();
  VGM out(n);
  for (std::uint64_t xb = 0; xb < (std::uint64_t(1) << n); ++xb) {
    ElemSet x(xb);
    ExtRat best = ExtRat::neg_inf();
    std::uint64_t s = 0;
    while (true) {  // all submasks of x
      ExtRat v = f(ElemSet(s)) + g(ElemSet(xb & ~s));
      if (best < v) best = v;
      if (s == xb) break;
      s = (s - xb) & xb;
    }
    out.set(x, best);
  }
  return out;
}

VGM endow(const VGM& f, ElemSet t) {
  if (!t.subset_of(ElemSet::full(f.ground_size()))) throw std::out_of_range("endowment set outside ground");
  const ExtRat& ft = f(t);
  if (!ft.finite()) throw std::domain_error("endowment requires f(T) finite");
  std::vector<int> kept = (ElemSet::full(f.ground_size()) - t).to_vector();
  VGM out(static_cast<int>(kept.size()));
  for (std::uint64_t xb = 0; xb < (std::uint64_t(1) << kept.size()); ++xb) {
    ElemSet orig;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if ((xb >> i) & 1) orig.insert(kept[i]);
    out.set(ElemSet(xb), f(orig | t) - ft.value());
  }
  return out;
}

VGM induce_vgm(const WeightedBipGraph& g, const VGM& base) {
  g.validate();
  VGM out(g.left_count);
  for (int k = 0; k <= std::min(g.left_count, base.ground_size()); ++k) {
    ValMat lk = layer(base, k);
    if (lk.dom_empty() && k > 0) continue;
    if (k == 0) {
      out.set(ElemSet(), base(ElemSet()));
      continue;
    }
    ValMat ind = induce_bipartite(g, lk);
    for (const auto& [x, v] : ind.entries()) out.set(x, ExtRat(v));
  }
  return out;
}

VGM induce_vgm(const Network& net, const VGM& base) {
  net.validate();
  VGM out(net.terminals_v.size());
  for (int k = 0; k <= std::min(net.terminals_v.size(), base.ground_size()); ++k) {
    if (k == 0) {
      out.set(ElemSet(), base(ElemSet()));
      continue;
    }
    ValMat lk = layer(base, k);
    if (lk.dom_empty()) continue;
    ValMat ind = induce_network(net, lk);
    for (const auto& [x, v] : ind.entries()) out.set(x, ExtRat(v));
  }
  return out;
}

VGM weighted_rank(const Matroid& m, const std::vector<Rat>& w) {
  const int n = m.ground_size();
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("weight arity mismatch");
  for (const Rat& x : w)
    if (x < 0) throw std::invalid_argument("weighted rank requires nonnegative weights");
  VGM out(n);
  for (std::uint64_t xb = 0; xb < (std::uint64_t(1) << n); ++xb) {
    ElemSet x(xb);
    std::vector<int> order = x.to_vector();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
    ElemSet picked;
    Rat total = 0;
    for (int e : order) {
      ElemSet cand = picked.with(e);
      if (m.rank(cand) == cand.size()) {
        picked = cand;
        total += w[e];
      }
    }
    out.set(x, ExtRat(total));
  }
  return out;
}

VGM weighted_rank_via_gadget(const Matroid& m, const std::vector<Rat>& w) {
  const int n = m.ground_size();
  // Two copies on the right: V' carries the matroid and the weights,
  // V'' is free with zero weights.
  WeightedBipGraph g(n, 2 * n);
  for (int v = 0; v < n; ++v) {
    g.add_edge(v, v, w[v]);
    g.add_edge(v, n + v, Rat(0));
  }
  VGM base = VGM::from_function(2 * n, [&](ElemSet s) {
    ElemSet s1 = s & ElemSet::full(n);
    return m.rank(s1) == s1.size() ? ExtRat(0) : ExtRat::neg_inf();
  });
  return induce_vgm(g, base);
}

ValMat vgm_to_valmat(const VGM& f) {
  const int n = f.ground_size();
  if (n > capacity_bound(8)) throw capacity_error("doubling construction exceeds bound");
  ValMat out(2 * n, n);
  for_each_subset_of_size(ElemSet::full(2 * n), n, [&](ElemSet x) { out.set(x, f(x & ElemSet::full(n))); });
  return out;
}

bool GenMatroid::contains(ElemSet s) const { return std::find(sets.begin(), sets.end(), s) != sets.end(); }

VGM GenMatroid::trivial_vgm() const {
  VGM f(n);
  for (ElemSet s : sets) f.set(s, ExtRat(0));
  return f;
}

GenMatroidCheck check_generalized_matroid(const GenMatroid& gm) {
  for (ElemSet x : gm.sets)
    for (ElemSet y : gm.sets) {
      if (x.size() < y.size()) {
        bool ok = false;
        for (int j : y - x)
          if (gm.contains(x.with(j)) && gm.contains(y.without(j))) ok = true;
        if (!ok) return {false, "size axiom fails at X=" + x.to_string() + " Y=" + y.to_string()};
      } else if (x.size() == y.size()) {
        for (int i : x - y) {
          bool ok = false;
          for (int j : y - x)
            if (gm.contains(x.without(i).with(j)) && gm.contains(y.with(i).without(j))) ok = true;
          if (!ok)
            return {false, "exchange axiom fails at X=" + x.to_string() + " Y=" + y.to_string() + " i=" + std::to_string(i)};
        }
      }
    }
  return {true, ""};
}

RNatRep::RNatRep(WeightedBipGraph g, GenMatroid b) : graph(std::move(g)), base(std::move(b)) {
  graph.validate();
  if (base.n != graph.right_count) throw std::invalid_argument("generalized matroid ground does not match right nodes");
  GenMatroidCheck c = check_generalized_matroid(base);
  if (!c.ok) throw std::invalid_argument("base fails independent-set exchange: " + c.witness);
}

namespace {

// Max weight matching covering `cover` with right endpoints a member of
// the generalized matroid. Partials are pruned against the down-closure.
struct RNatEval {
  const WeightedBipGraph& g;
  const GenMatroid& base;
  std::vector<char> extendable;  // 2^right down-closure of the family

  explicit RNatEval(const RNatRep& rep) : g(rep.graph), base(rep.base) {
    extendable.assign(std::size_t(1) << g.right_count, 0);
    for (ElemSet s : base.sets) extendable[s.bits()] = 1;
    for (std::uint64_t s = extendable.size(); s-- > 0;)
      if (extendable[s])
        for (std::uint64_t b = s; b; b &= b - 1) extendable[s & ~(b & -b)] = 1;
  }

  void rec(const std::vector<int>& nodes, std::size_t pos, ElemSet rights, Rat acc, ExtRat& best) const {
    if (pos == nodes.size()) {
      if (base.contains(rights)) {
        ExtRat v{acc};
        if (best < v) best = v;
      }
      return;
    }
    for (const Edge& e : g.edges) {
      if (e.left != nodes[pos] || rights.contains(e.right)) continue;
      ElemSet next = rights.with(e.right);
      if (!extendable[next.bits()]) continue;
      rec(nodes, pos + 1, next, acc + e.weight, best);
    }
  }
};

}  // namespace

ExtRat rnat_minor_eval(const RNatRep& rep, ElemSet x) {
  if (!x.subset_of(rep.v_nodes())) throw std::out_of_range("set outside V");
  RNatEval ev(rep);
  std::vector<int> nodes = (x | rep.w_nodes()).to_vector();
  ExtRat best = ExtRat::neg_inf();
  ev.rec(nodes, 0, ElemSet(), Rat(0), best);
  return best;
}

VGM rnat_table(const RNatRep& rep) {
  const int nv = rep.graph.w_start;
  RNatEval ev(rep);
  VGM out(nv);
  ElemSet w = rep.w_nodes();
  for (std::uint64_t xb = 0; xb < (std::uint64_t(1) << nv); ++xb) {
    std::vector<int> nodes = (ElemSet(xb) | w).to_vector();
    ExtRat best = ExtRat::neg_inf();
    ev.rec(nodes, 0, ElemSet(), Rat(0), best);
    out.set(ElemSet(xb), best);
  }
  return out;
}

RNatRep endow_representation(const RNatRep& rep, ElemSet t) {
  if (!t.subset_of(rep.v_nodes())) throw std::out_of_range("endowment set outside V");
  ElemSet tw = t | rep.w_nodes();
  // Value of the uncontracted induced function at T u W.
  RNatEval ev(rep);
  std::vector<int> nodes = tw.to_vector();
  ExtRat ftw = ExtRat::neg_inf();
  ev.rec(nodes, 0, ElemSet(), Rat(0), ftw);
  if (!ftw.finite()) throw std::domain_error("endowment requires a finite value at T");
  Rat delta = ftw.value() / tw.size();

  // Shift weights on edges at T u W and move T into the contracted part.
  std::vector<int> perm(rep.graph.left_count);  // old left id -> new left id
  int next = 0;
  for (int i : rep.v_nodes())
    if (!t.contains(i)) perm[i] = next++;
  int new_wstart = next;
  for (int i : rep.v_nodes())
    if (t.contains(i)) perm[i] = next++;
  for (int i : rep.w_nodes()) perm[i] = next++;

  WeightedBipGraph g(rep.graph.left_count, new_wstart, rep.graph.right_count);
  for (const Edge& e : rep.graph.edges) {
    Rat w = e.weight;
    if (tw.contains(e.left)) w -= delta;
    g.add_edge(perm[e.left], e.right, w);
  }
  return RNatRep(std::move(g), rep.base);
}

RNatRep merge_representation(const RNatRep& a, const RNatRep& b) {
  if (a.graph.w_start != b.graph.w_start) throw std::invalid_argument("merge requires a common V");
  const int nv = a.graph.w_start;
  const int nwa = a.graph.left_count - nv, nwb = b.graph.left_count - nv;
  const int nua = a.graph.right_count, nub = b.graph.right_count;
  WeightedBipGraph g(nv + nwa + nwb, nv, nua + nub);
  for (const Edge& e : a.graph.edges) g.add_edge(e.left < nv ? e.left : e.left, e.right, e.weight);
  for (const Edge& e : b.graph.edges)
    g.add_edge(e.left < nv ? e.left : nwa + e.left, nua + e.right, e.weight);
  GenMatroid glued;
  glued.n = nua + nub;
  for (ElemSet sa : a.base.sets)
    for (ElemSet sb : b.base.sets) glued.sets.push_back(ElemSet(sa.bits() | (sb.bits() << nua)));
  std::sort(glued.sets.begin(), glued.sets.end());
  glued.sets.erase(std::unique(glued.sets.begin(), glued.sets.end()), glued.sets.end());
  return RNatRep(std::move(g), std::move(glued));
}

}  // namespace valmat
