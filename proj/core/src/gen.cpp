#include "valmat/gen.hpp"

#include <algorithm>

#include "valmat/intersection.hpp"

namespace valmat {

namespace {

Matroid gen_transversal(Rng& rng, int n, int r) {
  WeightedBipGraph g(n, r);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < r; ++u)
      if (rng.below(100) < 60) g.add_edge(v, u, Rat(0));
  Matroid free_right = Matroid::free_matroid(r);
  // rank = maximum matchable subset size
  int rank = 0;
  for (int k = std::min(n, r); k >= 1; --k)
    if (max_weight_matching_of_size(g, free_right, ElemSet::full(n), k).matching) {
      rank = k;
      break;
    }
  if (rank == 0) return Matroid::rank_zero(n);
  std::vector<ElemSet> bases;
  for_each_subset_of_size(ElemSet::full(n), rank, [&](ElemSet s) {
    if (max_weight_matching_of_size(g, free_right, s, rank).matching) bases.push_back(s);
  });
  return Matroid::from_bases(n, std::move(bases));
}

Matroid gen_sparse_paving(Rng& rng, int n, int d) {
  std::vector<ElemSet> circuits;
  int attempts = rng.range(0, 2 * n);
  for (int t = 0; t < attempts; ++t) {
    ElemSet c;
    while (c.size() < d) c.insert(rng.below(n));
    bool ok = true;
    for (ElemSet other : circuits)
      if ((c & other).size() > d - 2) ok = false;
    if (ok && static_cast<long long>(circuits.size()) + 1 < binomial(n, d)) circuits.push_back(c);
  }
  return sparse_paving_from_circuits(n, d, circuits);
}

}  // namespace

Matroid gen_matroid(Rng& rng, int n, int max_rank) {
  int r = rng.range(1, std::max(1, std::min(n, max_rank)));
  switch (rng.below(5)) {
    case 0:
      return Matroid::uniform(n, r);
    case 1: {
      // random partition with unit-or-two capacities
      std::vector<ElemSet> blocks;
      std::vector<int> caps;
      ElemSet rest = ElemSet::full(n);
      while (!rest.empty()) {
        ElemSet blk;
        int sz = rng.range(1, std::min(3, rest.size()));
        for (int i = 0; i < sz; ++i) {
          std::vector<int> avail = rest.to_vector();
          int pick = avail[rng.below(static_cast<int>(avail.size()))];
          blk.insert(pick);
          rest.erase(pick);
        }
        blocks.push_back(blk);
        caps.push_back(rng.range(1, blk.size()));
      }
      return Matroid::partition(n, blocks, caps);
    }
    case 2:
      return gen_sparse_paving(rng, n, std::min(n, rng.range(2, std::max(2, std::min(4, n)))));
    case 3:
      return gen_transversal(rng, n, r);
    default: {
      // a dual or truncation of a simpler backend
      Matroid base = rng.coin() ? Matroid::uniform(n, r) : gen_transversal(rng, n, r);
      if (rng.coin()) return base.dual();
      return base.truncate_to(rng.range(0, base.rank()));
    }
  }
}

WeightedBipGraph gen_graph(Rng& rng, int left, int right, int edge_percent) {
  return gen_graph_split(rng, left, 0, right, edge_percent);
}

WeightedBipGraph gen_graph_split(Rng& rng, int nv, int nw, int right, int edge_percent) {
  WeightedBipGraph g(nv + nw, nv, right);
  for (int i = 0; i < nv + nw; ++i)
    for (int j = 0; j < right; ++j)
      if (rng.below(100) < edge_percent) g.add_edge(i, j, rng.rational(10, 20));
  return g;
}

ValMat gen_valmat(Rng& rng, int n, int d) {
  d = std::min(d, n);
  for (int attempt = 0; attempt < 200; ++attempt) {
    if (rng.below(100) < 30 && d >= 2 && n >= d + 1) {
      // sparse paving perturbation: 0 on bases, negative on circuits
      Matroid sp = gen_sparse_paving(rng, n, d);
      ValMat f(n, d);
      for_each_subset_of_size(ElemSet::full(n), d, [&](ElemSet x) {
        f.set(x, sp.is_basis(x) ? ExtRat(0) : ExtRat(rng.negative_rational(50)));
      });
      return f;
    }
    Matroid base = gen_matroid(rng, rng.range(d, d + 3), d);
    if (base.rank() != d) continue;
    WeightedBipGraph g = gen_graph(rng, n, base.ground_size(), 65);
    ValMat f = induce_bipartite(g, ValMat::trivial(base));
    if (!f.dom_empty()) return f;
  }
  throw std::logic_error("failed to generate a valuated matroid");
}

RadoRep gen_rado_rep(Rng& rng, int nv, int nw, int nu) {
  // Reject representations whose contracted part is not matchable; the
  // structural checks assume W independent in the uncontracted matroid.
  for (int attempt = 0; attempt < 500; ++attempt) {
    WeightedBipGraph g = gen_graph_split(rng, nv, nw, nu, 60);
    for (Edge& e : g.edges) e.weight = 0;
    RadoRep rep(std::move(g), gen_matroid(rng, nu, nu));
    if (rado_independent(rep, ElemSet())) return rep;
  }
  throw std::logic_error("failed to generate a Rado representation");
}

RMinorRep gen_rminor_rep(Rng& rng, int nv, int nw, int nu) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    WeightedBipGraph g = gen_graph_split(rng, nv, nw, nu, 65);
    Matroid m = gen_matroid(rng, nu, nu);
    if (m.rank() < nw + 1) continue;
    RMinorRep rep(std::move(g), std::move(m));
    if (rep.layer() > nv) continue;
    return rep;
  }
  throw std::logic_error("failed to generate an R-minor representation");
}

VGM gen_vgm(Rng& rng, int n) {
  int extra = rng.below(3);  // elements given away by endowments
  int n0 = n + extra;
  Matroid m = gen_matroid(rng, n0, n0);
  std::vector<Rat> w;
  for (int i = 0; i < n0; ++i) w.push_back(abs(rng.rational(8, 10)));
  VGM f = weighted_rank(m, w);
  for (int i = 0; i < extra; ++i) f = endow(f, ElemSet::single(rng.below(f.ground_size())));
  if (rng.coin()) {
    Matroid m2 = gen_matroid(rng, n, n);
    std::vector<Rat> w2;
    for (int i = 0; i < n; ++i) w2.push_back(abs(rng.rational(8, 10)));
    f = merge(f, weighted_rank(m2, w2));
  }
  return f;
}

GenMatroid gen_genmatroid(Rng& rng, int n) {
  // Independent sets of a matroid sitting between two ranks: still a
  // generalized matroid (truncated layers of independent sets).
  Matroid m = gen_matroid(rng, n, n);
  int lo = rng.range(0, m.rank());
  GenMatroid gm;
  gm.n = n;
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
    ElemSet x(s);
    if (x.size() >= lo && m.is_independent(x)) gm.sets.push_back(x);
  }
  if (gm.sets.empty()) gm.sets.push_back(ElemSet());
  std::sort(gm.sets.begin(), gm.sets.end());
  return gm;
}

RNatRep gen_rnat_rep(Rng& rng, int nv, int nw, int nu) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    WeightedBipGraph g = gen_graph_split(rng, nv, nw, nu, 70);
    GenMatroid gm = gen_genmatroid(rng, nu);
    RNatRep rep(std::move(g), std::move(gm));
    // Keep representations whose contracted part is matchable somewhere.
    VGM table = rnat_table(rep);
    bool some_finite = false;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << nv); ++s)
      if (table(ElemSet(s)).finite()) some_finite = true;
    if (some_finite) return rep;
  }
  throw std::logic_error("failed to generate an R-natural representation");
}

Puiseux gen_puiseux(Rng& rng, int max_terms, bool force_positive) {
  int k = rng.range(1, max_terms);
  Puiseux p;
  Rat e = rng.rational(6, 4);
  for (int t = 0; t < k; ++t) {
    Rat c = rng.rational(9, 6);
    if (t == 0) {
      if (c == 0) c = 1;
      if (force_positive && c < 0) c = -c;
    }
    if (c != 0) p += Puiseux::monomial(c, e);
    e -= make_rat(rng.range(1, 4), rng.range(1, 3));  // strictly decreasing exponents
  }
  if (force_positive && !p.positive()) return Puiseux::constant(1);
  return p;
}

std::vector<std::vector<Puiseux>> gen_puiseux_matrix(Rng& rng, int rows, int cols, int zero_percent) {
  std::vector<std::vector<Puiseux>> a(rows, std::vector<Puiseux>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng.below(100) >= zero_percent) a[i][j] = gen_puiseux(rng, 3, true);
  return a;
}

namespace {

Matroid gen_matroid_of_rank(Rng& rng, int n, int r) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    Matroid m = gen_matroid(rng, n, r);
    if (m.rank() == r) return m;
  }
  return Matroid::uniform(n, r);
}

std::vector<ExpVec> basis_vectors(const Matroid& m) {
  std::vector<ExpVec> out;
  for (ElemSet b : m.bases()) {
    ExpVec a(m.ground_size(), 0);
    for (int e : b) a[e] = 1;
    out.push_back(a);
  }
  return out;
}

}  // namespace

TropPoly gen_troppoly(Rng& rng, int vars, int degree, bool multiaffine) {
  std::vector<ExpVec> support;
  if (multiaffine) {
    if (degree > vars) throw std::invalid_argument("multi-affine degree cannot exceed the variable count");
    support = basis_vectors(gen_matroid_of_rank(rng, vars, degree));
  } else if (degree > 2 * vars) {
    support = simplex_points(vars, degree);  // the full simplex is M-convex
  } else {
    // Minkowski sum of two matroid base sets: M-convex, possibly with
    // exponents above one.
    int d1 = rng.range(std::max(1, degree - vars), std::min(vars, degree - 1 >= 1 ? degree - 1 : 1));
    int d2 = degree - d1;
    std::vector<ExpVec> sums;
    if (d2 == 0) {
      sums = basis_vectors(gen_matroid_of_rank(rng, vars, d1));
    } else {
      Matroid m1 = gen_matroid_of_rank(rng, vars, d1);
      Matroid m2 = gen_matroid_of_rank(rng, vars, d2);
      for (ElemSet b1 : m1.bases())
        for (ElemSet b2 : m2.bases()) {
          ExpVec a(vars, 0);
          for (int e : b1) a[e] += 1;
          for (int e : b2) a[e] += 1;
          sums.push_back(a);
        }
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    support = std::move(sums);
  }
  TropPoly p(vars, degree);
  for (const ExpVec& a : support) p.set(a, gen_puiseux(rng, 3, true));
  return p;
}

}  // namespace valmat
