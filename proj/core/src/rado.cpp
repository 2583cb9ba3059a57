#include "valmat/rado.hpp"

#include <algorithm>
#include <unordered_set>

#include "valmat/intersection.hpp"

namespace valmat {

RadoRep::RadoRep(WeightedBipGraph g, Matroid m) : graph(std::move(g)), matroid(std::move(m)) {
  graph.validate();
  if (matroid.ground_size() != graph.right_count)
    throw std::invalid_argument("matroid ground does not match right nodes");
}

ElemSet RadoRep::neighborhood(ElemSet z) const { return graph.neighbors(z); }

int rho(const RadoRep& rep, ElemSet z) {
  if (!z.subset_of(ElemSet::full(rep.left_count()))) throw std::out_of_range("set outside V u W");
  return rep.matroid.rank(rep.neighborhood(z)) - z.size();
}

bool rado_independent(const RadoRep& rep, ElemSet x) {
  if (!x.subset_of(rep.v_nodes())) throw std::out_of_range("set outside V");
  ElemSet zw = x | rep.w_nodes();
  if (zw.size() > capacity_bound(14))
    throw capacity_error("rank-condition sweep over " + std::to_string(zw.size()) + " nodes exceeds bound");
  bool ok = true;
  for_each_subset(zw, [&](ElemSet z) {
    if (ok && rho(rep, z) < 0) ok = false;
  });
  return ok;
}

bool rado_independent_matching(const RadoRep& rep, ElemSet x) {
  ElemSet cover = x | rep.w_nodes();
  // Any matching covering `cover` with independent right endpoints.
  WeightedBipGraph zero = rep.graph;
  for (Edge& e : zero.edges) e.weight = 0;
  return max_weight_independent_matching_brute(zero, rep.matroid, cover).matching.has_value();
}

Matroid represented_matroid(const RadoRep& rep) {
  RadoRep copy = rep;
  WeightedBipGraph zero = rep.graph;
  for (Edge& e : zero.edges) e.weight = 0;
  Matroid m = rep.matroid;
  ElemSet w = rep.w_nodes();
  int nv = rep.graph.w_start;
  // rank_N(X) = max common independent set size on X u W, minus the part
  // used by W (contraction of the plain Rado matroid on V u W).
  auto max_size = [zero, m](ElemSet allowed) {
    int hi = std::min(allowed.size(), m.rank());
    for (int k = hi; k >= 1; --k)
      if (max_weight_matching_of_size(zero, m, allowed, k).matching) return k;
    return 0;
  };
  int w_rank = max_size(w);
  return Matroid::from_oracle(nv, [max_size, w, w_rank](ElemSet x) { return max_size(x | w) - w_rank; });
}

std::optional<ElemSet> largest_tight_set(const RadoRep& rep, ElemSet x) {
  if (!x.subset_of(rep.v_nodes())) throw std::out_of_range("set outside V");
  ElemSet w = rep.w_nodes();
  if (w.size() > capacity_bound(10))
    throw capacity_error("tight-set sweep over |W|=" + std::to_string(w.size()) + " exceeds bound");
  std::optional<ElemSet> acc;
  for_each_subset(w, [&](ElemSet s) {
    ElemSet z = x | s;
    if (rho(rep, z) == 0) acc = acc ? (*acc | z) : z;
  });
  if (acc && rho(rep, *acc) != 0)
    throw std::logic_error("tight X-sets failed to form a lattice (uncrossing violated)");
  return acc;
}

namespace {

// Precomputed rho values and represented-matroid independence for an
// exhaustive sweep over 2^(V u W).
struct Sweep {
  int m;                        // |V u W|
  int nv;                       // |V|
  std::vector<int> rho;         // 2^m
  std::vector<char> indep;      // 2^nv, independence in N
  int rank_n = 0;               // r(N)
  std::vector<ElemSet> circuits;

  explicit Sweep(const RadoRep& rep) {
    m = rep.left_count();
    nv = rep.graph.w_start;
    if (m > capacity_bound(10))
      throw capacity_error("uncrossing sweep over " + std::to_string(m) + " nodes exceeds bound");
    std::vector<ElemSet> gamma(std::size_t(1) << m);
    std::vector<ElemSet> adj(m);
    for (const Edge& e : rep.graph.edges) adj[e.left].insert(e.right);
    rho.resize(std::size_t(1) << m);
    for (std::uint64_t z = 0; z < gamma.size(); ++z) {
      if (z) {
        int low = std::countr_zero(z);
        gamma[z] = gamma[z & (z - 1)] | adj[low];
      }
      rho[z] = rep.matroid.rank(gamma[z]) - std::popcount(z);
    }
    // min rho over all Z with Z subseteq X u W, taken over supersets of
    // nothing: X independent iff no Z subseteq X u W has rho < 0.
    std::uint64_t wbits = rep.w_nodes().bits();
    indep.assign(std::size_t(1) << nv, 1);
    for (std::uint64_t x = 0; x < indep.size(); ++x) {
      std::uint64_t zw = x | wbits;
      // subset walk
      std::uint64_t s = 0;
      bool ok = true;
      while (true) {
        if (rho[s] < 0) {
          ok = false;
          break;
        }
        if (s == zw) break;
        s = (s - zw) & zw;
      }
      indep[x] = ok;
    }
    for (std::uint64_t x = 0; x < indep.size(); ++x)
      if (indep[x]) rank_n = std::max(rank_n, std::popcount(x));
    for (std::uint64_t x = 0; x < indep.size(); ++x) {
      if (indep[x]) continue;
      bool minimal = true;
      for (std::uint64_t b = x; b; b &= b - 1)
        if (!indep[x & ~(b & -b)]) minimal = false;
      if (minimal) circuits.push_back(ElemSet(x));
    }
  }

  bool spanning(std::uint64_t x) const {
    // max independent subset of x has size rank_n
    for (std::uint64_t s = x;; s = (s - 1) & x) {
      if (indep[s] && std::popcount(s) == rank_n) return true;
      if (s == 0) break;
    }
    return false;
  }
};

}  // namespace

UncrossingReport check_uncrossing(const RadoRep& rep) {
  Sweep sw(rep);
  UncrossingReport rep_out;
  const std::uint64_t total = std::uint64_t(1) << sw.m;
  const std::uint64_t vmask = rep.v_nodes().bits();

  // Uncrossing I: rho(I) = rho(J) = 0 and (I&V) u (J&V) independent
  // implies rho(I & J) = rho(I u J) = 0.
  for (std::uint64_t i = 0; i < total; ++i) {
    if (sw.rho[i] != 0) continue;
    for (std::uint64_t j = 0; j < total; ++j) {
      if (sw.rho[j] != 0) continue;
      std::uint64_t xuy = (i | j) & vmask;
      if (!sw.indep[xuy]) continue;
      ++rep_out.pairs_checked_one;
      if (sw.rho[i & j] != 0 || sw.rho[i | j] != 0)
        rep_out.violations.push_back("uncrossing I fails at I=" + ElemSet(i).to_string() + " J=" +
                                     ElemSet(j).to_string());
    }
  }

  // Uncrossing II: distinct circuits X, Y with |X u Y| = r(N) + 2 whose
  // union is spanning; any X-set I, Y-set J with rho = -1 satisfy
  // rho(I & J) = 0 and rho(I u J) = -2.
  const std::uint64_t wbits = rep.w_nodes().bits();
  for (const ElemSet& x : sw.circuits)
    for (const ElemSet& y : sw.circuits) {
      if (x == y) continue;
      std::uint64_t uxy = (x | y).bits();
      if (std::popcount(uxy) != sw.rank_n + 2 || !sw.spanning(uxy)) continue;
      // iterate X-sets and Y-sets
      std::uint64_t sx = 0;
      while (true) {
        std::uint64_t ib = x.bits() | sx;
        if (sw.rho[ib] == -1) {
          std::uint64_t sy = 0;
          while (true) {
            std::uint64_t jb = y.bits() | sy;
            if (sw.rho[jb] == -1) {
              ++rep_out.pairs_checked_two;
              if (sw.rho[ib & jb] != 0 || sw.rho[ib | jb] != -2)
                rep_out.violations.push_back("uncrossing II fails at I=" + ElemSet(ib).to_string() + " J=" +
                                             ElemSet(jb).to_string());
            }
            if (sy == wbits) break;
            sy = (sy - wbits) & wbits;
          }
        }
        if (sx == wbits) break;
        sx = (sx - wbits) & wbits;
      }
    }
  return rep_out;
}

std::vector<std::string> check_rho_submodular(const RadoRep& rep) {
  Sweep sw(rep);
  std::vector<std::string> bad;
  const std::uint64_t total = std::uint64_t(1) << sw.m;
  for (std::uint64_t a = 0; a < total; ++a)
    for (std::uint64_t b = a + 1; b < total; ++b)
      if (sw.rho[a] + sw.rho[b] < sw.rho[a & b] + sw.rho[a | b])
        bad.push_back("rho not submodular at " + ElemSet(a).to_string() + ", " + ElemSet(b).to_string());
  return bad;
}

std::vector<std::string> check_rho_value_bounds(const RadoRep& rep) {
  Sweep sw(rep);
  std::vector<std::string> bad;
  const std::uint64_t wbits = rep.w_nodes().bits();
  std::vector<char> is_circuit(std::size_t(1) << sw.nv, 0);
  for (ElemSet c : sw.circuits) is_circuit[c.bits()] = 1;
  for (std::uint64_t x = 0; x < (std::uint64_t(1) << sw.nv); ++x) {
    // scan all X-sets
    int min_rho = 1 << 20;
    std::uint64_t s = 0;
    while (true) {
      min_rho = std::min(min_rho, sw.rho[x | s]);
      if (s == wbits) break;
      s = (s - wbits) & wbits;
    }
    int k = std::popcount(x);
    if (sw.indep[x] && min_rho < 0)
      bad.push_back("rho(ind) bound fails at X=" + ElemSet(x).to_string());
    if (is_circuit[x] && min_rho != -1)
      bad.push_back("rho(cir) bound fails at X=" + ElemSet(x).to_string());
    if (sw.spanning(x) && min_rho < sw.rank_n - k)
      bad.push_back("rho(spn) bound fails at X=" + ElemSet(x).to_string());
  }
  return bad;
}

std::vector<std::string> check_closure_identity(const RadoRep& rep) {
  const int m = rep.left_count();
  if (m > capacity_bound(10)) throw capacity_error("closure identity sweep exceeds bound");
  std::vector<std::string> bad;
  std::vector<ElemSet> adj(m);
  for (const Edge& e : rep.graph.edges) adj[e.left].insert(e.right);
  const std::uint64_t total = std::uint64_t(1) << m;
  std::vector<ElemSet> gamma(total);
  std::vector<int> rv(total);
  for (std::uint64_t z = 0; z < total; ++z) {
    if (z) gamma[z] = gamma[z & (z - 1)] | adj[std::countr_zero(z)];
    rv[z] = rep.matroid.rank(gamma[z]) - std::popcount(z);
  }
  for (std::uint64_t i = 0; i < total; ++i)
    for (std::uint64_t j = 0; j < total; ++j) {
      if (rv[i] + rv[j] != rv[i & j] + rv[i | j]) continue;
      ElemSet lhs = rep.matroid.closure(gamma[i]) & rep.matroid.closure(gamma[j]);
      if (lhs != rep.matroid.closure(gamma[i & j]))
        bad.push_back("closure identity fails at I=" + ElemSet(i).to_string() + " J=" + ElemSet(j).to_string());
    }
  return bad;
}

// ---------------------------------------------------------------------------
// Full-rank matroid union decompositions
// ---------------------------------------------------------------------------

namespace {

// Bases of U_{r1,A1} v U_{r2,A2} are exactly the r-sets B with
// B subseteq A1 u A2, |B & A1| >= r1 and |B \ A2| <= r1.
bool uniform_pair_matches(const std::vector<ElemSet>& rsets, const std::unordered_set<std::uint64_t>& bases,
                          ElemSet a1, int r1, ElemSet a2) {
  for (ElemSet b : rsets) {
    bool pred = b.subset_of(a1 | a2) && (b & a1).size() >= r1 && (b - a2).size() <= r1;
    if (pred != (bases.count(b.bits()) > 0)) return false;
  }
  return true;
}

Matroid uniform_on(int n, ElemSet support, int r) {
  return Matroid::from_oracle(n, [support, r](ElemSet s) { return std::min((s & support).size(), r); });
}

// Candidate non-loop sets V \ T where T meets at most three of the
// canonical pairs (the shape the not-reducible case analysis bounds).
std::vector<ElemSet> paired_supports(int n_pairs) {
  std::vector<ElemSet> pats;
  ElemSet full = ElemSet::full(2 * n_pairs);
  std::vector<std::vector<ElemSet>> per_pair(n_pairs);
  for (int p = 0; p < n_pairs; ++p) {
    ElemSet lo = ElemSet::single(2 * p), hi = ElemSet::single(2 * p + 1);
    per_pair[p] = {lo, hi, lo | hi};
  }
  pats.push_back(full);
  for (int a = 0; a < n_pairs; ++a)
    for (ElemSet ta : per_pair[a]) {
      pats.push_back(full - ta);
      for (int b = a + 1; b < n_pairs; ++b)
        for (ElemSet tb : per_pair[b]) {
          pats.push_back(full - ta - tb);
          for (int c = b + 1; c < n_pairs; ++c)
            for (ElemSet tc : per_pair[c]) pats.push_back(full - ta - tb - tc);
        }
    }
  return pats;
}

}  // namespace

ReducibilityResult fully_reducible(const Matroid& m) {
  const int n = m.ground_size();
  const int r = m.rank();
  if (n > capacity_bound(20) || r > 6) throw capacity_error("reducibility search bounds exceeded");
  if (r < 2) return {std::nullopt, "rank below 2: no split into two nonempty matroids"};

  std::vector<ElemSet> rsets = subsets_of_size(n, r);
  std::unordered_set<std::uint64_t> bases;
  for (ElemSet b : m.bases()) bases.insert(b.bits());

  // Fail fast: interleave the r-sets so mismatches surface early.
  std::vector<ElemSet> probe = rsets;
  for (std::size_t i = 0, j = probe.size() - 1; i < j; i += 2, --j) std::swap(probe[i], probe[j]);

  std::vector<ElemSet> supports;
  std::string mode;
  if (n <= 10) {
    mode = "exhaustive loop-pattern search (uniform candidates)";
    for (std::uint64_t a = 1; a < (std::uint64_t(1) << n); ++a) supports.push_back(ElemSet(a));
  } else if (r == 4 && n % 2 == 0) {
    // Paired shape: usable when every 4-set meeting four distinct pairs
    // is a basis, which bounds candidate loop patterns to three pairs.
    bool transversals_are_bases = true;
    for (ElemSet b : rsets) {
      int pairs_met = 0;
      for (int p = 0; p < n / 2; ++p)
        if (b.intersects(ElemSet::single(2 * p) | ElemSet::single(2 * p + 1))) ++pairs_met;
      if (pairs_met == 4 && !bases.count(b.bits())) {
        transversals_are_bases = false;
        break;
      }
    }
    if (!transversals_are_bases)
      throw capacity_error("no bounded reducibility search shape applies to this input");
    mode = "paired rank-4 loop-pattern search (uniform candidates, <=3 pairs of loops per side)";
    supports = paired_supports(n / 2);
  } else {
    throw capacity_error("no bounded reducibility search shape applies to this input");
  }

  for (int r1 = 1; 2 * r1 <= r; ++r1) {
    int r2 = r - r1;
    for (ElemSet a1 : supports) {
      if (a1.size() < r1) continue;
      for (ElemSet a2 : supports) {
        if (a2.size() < r2) continue;
        if (!uniform_pair_matches(probe, bases, a1, r1, a2)) continue;
        Matroid m1 = uniform_on(n, a1, r1);
        Matroid m2 = uniform_on(n, a2, r2);
        if (!(matroid_union(m1, m2) == m)) continue;  // exact verification
        return {Reduction{m1, m2, r1, r2},
                mode + ": decomposition found with supports " + a1.to_string() + ", " + a2.to_string()};
      }
    }
  }
  return {std::nullopt, mode + ": none found (not a proof of irreducibility outside the searched shapes)"};
}

// ---------------------------------------------------------------------------
// Robust matroids
// ---------------------------------------------------------------------------

namespace {

// Adjacency of the pair graph H: {i,j} in H iff P_i u P_j is a non-basis.
struct PairGraph {
  int n_pairs = 0;
  std::vector<ElemSet> adj;  // per pair index
  bool edge(int i, int j) const { return adj[i].contains(j); }
};

bool partition_ok(const PairGraph& h, ElemSet s, ElemSet k) {
  if (s.size() < 3 || k.size() < 3) return false;
  for (int a : k)
    for (int b : k)
      if (a < b && !h.edge(a, b)) return false;  // K clique
  for (int i : s)
    for (int a : k)
      if (!h.edge(i, a)) return false;  // S fully joined to K
  for (int i : s) {
    bool has_nonadjacent = false;
    for (int j : s)
      if (j != i && !h.edge(i, j)) has_nonadjacent = true;
    if (!has_nonadjacent) return false;  // (D2a)
    // (D2b): S \ {i} is not a clique
    bool clique = true;
    for (int a : s)
      for (int b : s)
        if (a != i && b != i && a < b && !h.edge(a, b)) clique = false;
    if (clique) return false;
  }
  return true;
}

std::optional<PairGraph> build_pair_graph(const Matroid& m, std::string* reason) {
  const int n = m.ground_size();
  if (n % 2 != 0) throw std::domain_error("robust recognition requires an even ground set");
  if (m.rank() != 4) throw std::domain_error("robust recognition requires rank 4");
  const int np = n / 2;
  PairGraph h;
  h.n_pairs = np;
  h.adj.assign(np, ElemSet());
  bool ok = true;
  for_each_subset_of_size(ElemSet::full(n), 4, [&](ElemSet x) {
    if (!ok) return;
    int rx = m.rank(x);
    if (rx == 4) return;
    if (rx != 3) {
      *reason = "non-basis 4-set " + x.to_string() + " is not a circuit";
      ok = false;
      return;
    }
    // must be P_i u P_j
    int pi = -1, pj = -1;
    for (int p = 0; p < np; ++p) {
      ElemSet pair = ElemSet::single(2 * p) | ElemSet::single(2 * p + 1);
      if (pair.subset_of(x)) (pi < 0 ? pi : pj) = p;
    }
    if (pj < 0) {
      *reason = "circuit " + x.to_string() + " is not a union of two pairs";
      ok = false;
      return;
    }
    h.adj[pi].insert(pj);
    h.adj[pj].insert(pi);
  });
  if (!ok) return std::nullopt;
  return h;
}

}  // namespace

bool validate_robust_partition(const Matroid& m, ElemSet s_pairs, ElemSet k_pairs) {
  std::string reason;
  auto h = build_pair_graph(m, &reason);
  if (!h) return false;
  if ((s_pairs | k_pairs) != ElemSet::full(h->n_pairs) || s_pairs.intersects(k_pairs)) return false;
  return partition_ok(*h, s_pairs, k_pairs);
}

RobustResult is_robust(const Matroid& m) {
  std::string reason;
  auto h = build_pair_graph(m, &reason);
  if (!h) return {false, {}, {}, reason};
  const int np = h->n_pairs;
  if (np > capacity_bound(12)) throw capacity_error("robust partition search exceeds bound");
  for (std::uint64_t kbits = 0; kbits < (std::uint64_t(1) << np); ++kbits) {
    ElemSet k(kbits);
    ElemSet s = ElemSet::full(np) - k;
    if (partition_ok(*h, s, k)) return {true, s, k, ""};
  }
  return {false, {}, {}, "no (S, K) partition satisfies (D2)"};
}

}  // namespace valmat
