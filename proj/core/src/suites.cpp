#include "valmat/suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "valmat/family.hpp"
#include "valmat/gen.hpp"
#include "valmat/induction.hpp"
#include "valmat/intersection.hpp"
#include "valmat/rado.hpp"
#include "valmat/tropical.hpp"

namespace valmat {

namespace {

struct Recorder {
  std::vector<SuiteCheck>& checks;
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  }
  // counts failures across a loop of trials
  void tally(const std::string& name, int trials, int failures, const std::string& first_failure = "") {
    add(name, failures == 0,
        std::to_string(trials - failures) + "/" + std::to_string(trials) + " trials" +
            (failures && !first_failure.empty() ? "; first failure: " + first_failure : ""));
  }
};

WeightedBipGraph transversal_example_graph() {
  WeightedBipGraph g(4, 2);
  g.add_edge(0, 0, Rat(0));
  g.add_edge(1, 0, Rat(1));
  g.add_edge(2, 0, Rat(1));
  g.add_edge(2, 1, Rat(0));
  g.add_edge(3, 1, Rat(0));
  return g;
}

ValMat transversal_example_table() {
  ValMat f(4, 2);
  f.set(ElemSet{0, 2}, ExtRat(0));
  f.set(ElemSet{0, 3}, ExtRat(0));
  f.set(ElemSet{1, 2}, ExtRat(1));
  f.set(ElemSet{1, 3}, ExtRat(1));
  f.set(ElemSet{2, 3}, ExtRat(1));
  return f;
}

ValMat snowflake_table() {
  ValMat f(6, 2);
  for_each_subset_of_size(ElemSet::full(6), 2, [&](ElemSet x) { f.set(x, ExtRat(0)); });
  f.set(ElemSet{0, 1}, ExtRat::neg_inf());
  f.set(ElemSet{2, 3}, ExtRat::neg_inf());
  f.set(ElemSet{4, 5}, ExtRat::neg_inf());
  return f;
}

// ---- criterion 1: the worked transversal example ---------------------------

void suite_transversal(Recorder& r, Rng&) {
  WeightedBipGraph g = transversal_example_graph();
  ValMat expected = transversal_example_table();
  ValMat brute = induce_bipartite(g, ValMat::trivial(Matroid::free_matroid(2)));
  r.add("brute-force induction reproduces the transversal table", brute == expected);
  RMinorRep rep(g, Matroid::free_matroid(2));
  r.add("solver path reproduces the transversal table", rminor_table(rep) == expected);
}

// ---- criterion 2 -----------------------------------------------------------

FamilyParams random_hnat_params(Rng& rng, int n) {
  FamilyParams p;
  p.n = n;
  p.star_value = rng.negative_rational();  // in (-1, 0)
  ElemSet star = family_star();
  for (ElemSet x : family_H(n)) {
    if (x == star) continue;
    Rat frac = make_rat(rng.range(1, 999), 1000);
    Rat v = Rat(-1) + (p.star_value + 1) * frac;  // in (-1, star)
    p.values[x] = ExtRat(v);
  }
  return p;
}

void suite_family(Recorder& r, Rng& rng) {
  for (int n = 2; n <= 6; ++n) {
    for (bool allow_neg_inf : {false, true}) {
      int failures = 0;
      std::string first;
      for (int t = 0; t < 50; ++t) {
        FamilyParams p = random_family_params(rng, n, allow_neg_inf);
        ValuatedCheck c = check_valuated(make_Fn(p));
        if (!c.ok) {
          ++failures;
          if (first.empty()) first = c.witness->to_string();
        }
      }
      r.tally("make_Fn valuated, n=" + std::to_string(n) + (allow_neg_inf ? " (-inf variant)" : " (finite variant)"),
              50, failures, first);
    }
  }
  for (int n = 2; n <= 5; ++n) {
    int failures = 0;
    std::string first;
    for (int t = 0; t < 2; ++t) {
      VgmCheck c = check_vgm(make_h_natural(random_hnat_params(rng, n)));
      if (!c.ok) {
        ++failures;
        if (first.empty()) first = c.witness->to_string();
      }
    }
    r.tally("h-natural passes vgm axioms, n=" + std::to_string(n), 2, failures, first);
  }
}

// ---- criterion 3 -----------------------------------------------------------

void suite_solver(Recorder& r, Rng& rng) {
  int failures = 0;
  std::string first;
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    int nv = rng.range(1, 4), nw = rng.range(0, 2);
    if (nv + nw > 6) nw = 0;
    int nu = rng.range(1, 6);
    WeightedBipGraph g = gen_graph_split(rng, nv, nw, nu, rng.range(30, 85));
    Matroid m = gen_matroid(rng, nu, nu);
    ElemSet cover;
    for (int i = 0; i < g.left_count; ++i)
      if (rng.coin()) cover.insert(i);
    IndependentMatchingResult fast = max_weight_independent_matching(g, m, cover);
    IndependentMatchingResult slow = max_weight_independent_matching_brute(g, m, cover);
    bool ok = fast.value == slow.value;
    if (ok && fast.matching) {
      ok = fast.matching->left_cover(g) == cover && ExtRat(fast.matching->weight(g)) == fast.value &&
           m.is_independent(fast.matching->right_cover(g)) &&
           fast.matching->right_cover(g).size() == cover.size();
    }
    if (!ok) {
      ++failures;
      if (first.empty()) first = "trial " + std::to_string(t) + ": solver=" + fast.value.to_string() +
                                 " oracle=" + slow.value.to_string();
    }
  }
  r.tally("weight-splitting solver agrees with brute force", trials, failures, first);
}

// ---- criterion 4 -----------------------------------------------------------

void suite_duality(Recorder& r, Rng& rng) {
  int verified = 0, failures = 0, attempts = 0;
  std::string first;
  bool flats_ok = true;
  while (verified < 200 && attempts < 4000) {
    ++attempts;
    int nv = rng.range(1, 4), nw = rng.range(0, 2), nu = rng.range(1, 5);
    WeightedBipGraph g = gen_graph_split(rng, nv, nw, nu, rng.range(40, 90));
    Matroid m = gen_matroid(rng, nu, nu);
    if (m.rank() < nw) continue;
    DualCert cert;
    try {
      cert = dual_certificate(g, m);
    } catch (const no_certificate_error&) {
      continue;
    }
    ++verified;
    CertReport rep = verify_certificate(g, m, cert);
    if (!rep.ok()) {
      ++failures;
      if (first.empty()) first = rep.violations.empty() ? "unknown" : rep.violations.front();
    }
    for (ElemSet s : tau_level_sets(nu, cert.tau))
      if (m.closure(s) != s) flats_ok = false;
  }
  r.tally("dual certificates verify (feasibility, strong duality, E* in E0, maximizer family)", verified, failures,
          first);
  r.add("tau level sets are flats after normalization", flats_ok);
}

// ---- criterion 5 -----------------------------------------------------------

void suite_identities(Recorder& r, Rng& rng) {
  // contraction as dual-delete-dual
  {
    int failures = 0;
    for (int t = 0; t < 100; ++t) {
      int n = rng.range(3, 6), d = rng.range(1, 3);
      ValMat f = gen_valmat(rng, n, std::min(d, n - 1));
      // |Y| <= d, mixing independent and dependent sets
      ElemSet y;
      int y_size = rng.range(0, f.layer());
      while (y.size() < y_size) y.insert(rng.below(n));
      if (!(contraction(f, y) == dual(deletion(dual(f), y)))) ++failures;
    }
    r.tally("contraction = dual-delete-dual", 100, failures);
  }
  // truncation as a zero-weight principal extension followed by
  // contracting the new element
  {
    int failures = 0;
    for (int t = 0; t < 100; ++t) {
      int n = rng.range(3, 6), d = rng.range(2, 3);
      ValMat f = gen_valmat(rng, n, std::min(d, n - 1));
      std::vector<ExtRat> zeros(n, ExtRat(0));
      if (!(truncation(f) == contraction(principal_extension(f, zeros), ElemSet::single(n)))) ++failures;
    }
    r.tally("truncation = zero extension then contraction", 100, failures);
  }
  // principal extensions commute; induction decomposes into iterated
  // principal extensions plus a deletion
  {
    int failures = 0;
    for (int t = 0; t < 100; ++t) {
      int n = rng.range(2, 5), d = rng.range(1, 2);
      ValMat f = gen_valmat(rng, n, std::min(d, n - 1));
      auto rand_w = [&](int arity) {
        std::vector<ExtRat> w;
        for (int i = 0; i < arity; ++i)
          w.push_back(rng.below(100) < 25 ? ExtRat::neg_inf() : ExtRat(rng.rational(8, 12)));
        return w;
      };
      std::vector<ExtRat> w1 = rand_w(n), w2 = rand_w(n);
      std::vector<ExtRat> w1x = w1, w2x = w2;
      w1x.push_back(ExtRat::neg_inf());
      w2x.push_back(ExtRat::neg_inf());
      // the two routes name the added elements in opposite order
      auto swap_last_two = [&](const ValMat& h) {
        ValMat out(h.ground_size(), h.layer());
        int a = n, b = n + 1;
        for (const auto& [s, v] : h.entries()) {
          ElemSet t = s;
          if (s.contains(a) != s.contains(b)) t = s ^ ElemSet{a, b};
          out.set(t, ExtRat(v));
        }
        return out;
      };
      if (!(principal_extension(principal_extension(f, w1), w2x) ==
            swap_last_two(principal_extension(principal_extension(f, w2), w1x))))
        ++failures;
    }
    r.tally("principal extensions commute", 100, failures);
  }
  {
    int failures = 0;
    for (int t = 0; t < 100; ++t) {
      int nu = rng.range(2, 4), nl = rng.range(1, 4);
      Matroid base = gen_matroid(rng, nu, nu);
      ValMat g0 = ValMat::trivial(base);
      WeightedBipGraph g = gen_graph(rng, nl, nu, 65);
      ValMat via_induction = induce_bipartite(g, g0);
      // iterated principal extensions over the original ground set
      ValMat h = g0;
      for (int v = 0; v < nl; ++v) {
        std::vector<ExtRat> w(h.ground_size(), ExtRat::neg_inf());
        for (const Edge& e : g.edges)
          if (e.left == v) w[e.right] = ExtRat(e.weight);
        h = principal_extension(h, w);
      }
      ValMat via_pe = deletion(h, ElemSet::full(nu));
      if (!(via_pe == via_induction)) ++failures;
    }
    r.tally("induction = iterated principal extension + deletion", 100, failures);
  }
  // union as induction of the direct sum through the gluing graph
  {
    int failures = 0;
    for (int t = 0; t < 100; ++t) {
      int n = rng.range(2, 5);
      ValMat f1 = gen_valmat(rng, n, rng.range(1, std::max(1, n - 1)));
      ValMat f2 = gen_valmat(rng, n, rng.range(1, std::max(1, n - 1)));
      if (f1.layer() + f2.layer() > n) continue;
      WeightedBipGraph glue(n, 2 * n);
      for (int v = 0; v < n; ++v) {
        glue.add_edge(v, v, Rat(0));
        glue.add_edge(v, n + v, Rat(0));
      }
      if (!(valuated_union(f1, f2) == induce_bipartite(glue, direct_sum(f1, f2)))) ++failures;
    }
    r.tally("valuated union via the two-copy gluing graph", 100, failures);
  }
  // union rank min-formula vs brute-force independent partitions
  {
    int failures = 0;
    for (int t = 0; t < 100; ++t) {
      int n = rng.range(3, 8);
      Matroid m1 = gen_matroid(rng, n, 4), m2 = gen_matroid(rng, n, 4);
      Matroid u = matroid_union(m1, m2);
      auto brute_rank = [&](ElemSet x) {
        int best = 0;
        for_each_subset(x, [&](ElemSet s) {
          // s splittable into independent sets of m1 and m2?
          bool splittable = false;
          for_each_subset(s, [&](ElemSet a) {
            if (!splittable && m1.is_independent(a) && m2.is_independent(s - a)) splittable = true;
          });
          if (splittable) best = std::max(best, s.size());
        });
        return best;
      };
      ElemSet x;
      for (int i = 0; i < n; ++i)
        if (rng.coin()) x.insert(i);
      if (u.rank(x) != brute_rank(x) || u.rank(u.ground()) != brute_rank(u.ground())) ++failures;
    }
    r.tally("union rank min-formula vs partition oracle", 100, failures);
  }
  // Hall-Rado rank condition vs the matching oracle
  {
    int failures = 0;
    for (int t = 0; t < 100; ++t) {
      int nu = rng.range(1, 5);
      RadoRep rep = gen_rado_rep(rng, rng.range(1, 5), rng.range(0, std::min(2, nu - 1)), nu);
      bool all_ok = true;
      for_each_subset(rep.v_nodes(), [&](ElemSet x) {
        if (rado_independent(rep, x) != rado_independent_matching(rep, x)) all_ok = false;
      });
      if (!all_ok) ++failures;
    }
    r.tally("Hall-Rado rank condition = matching oracle", 100, failures);
  }
}

// ---- criterion 6 -----------------------------------------------------------

void suite_closure(Recorder& r, Rng& rng) {
  int failures = 0;
  std::string first;
  int trials = 0;
  auto expect_valuated = [&](const ValMat& f, const std::string& what) {
    ++trials;
    ValuatedCheck c = check_valuated(f);
    if (!c.ok) {
      ++failures;
      if (first.empty()) first = what + ": " + c.witness->to_string();
    }
  };
  for (int t = 0; t < 40; ++t) {
    int n = rng.range(3, 6);
    ValMat f = gen_valmat(rng, n, rng.range(1, 3));
    ElemSet y;
    for (int i = 0; i < n; ++i)
      if (rng.below(100) < 25) y.insert(i);
    expect_valuated(deletion(f, y), "deletion");
    expect_valuated(contraction(f, y), "contraction");
    expect_valuated(dual(f), "dual");
    if (f.layer() >= 1) expect_valuated(truncation(f), "truncation");
    std::vector<ExtRat> w;
    for (int i = 0; i < n; ++i) w.push_back(rng.coin() ? ExtRat(rng.rational(6, 8)) : ExtRat::neg_inf());
    expect_valuated(principal_extension(f, w), "principal extension");
    ValMat f2 = gen_valmat(rng, rng.range(2, 4), 1);
    expect_valuated(direct_sum(f, f2), "direct sum");
    ValMat f3 = gen_valmat(rng, n, 1);
    if (f.layer() + 1 <= n) expect_valuated(valuated_union(f, f3), "union");
  }
  r.tally("valuated matroid operations stay valuated", trials, failures, first);

  failures = 0;
  trials = 0;
  first.clear();
  auto expect_vgm = [&](const VGM& f, const std::string& what) {
    ++trials;
    VgmCheck c = check_vgm(f);
    if (!c.ok) {
      ++failures;
      if (first.empty()) first = what + ": " + c.witness->to_string();
    }
  };
  for (int t = 0; t < 20; ++t) {
    int n = rng.range(2, 4);
    VGM f = gen_vgm(rng, n), g = gen_vgm(rng, n);
    expect_vgm(merge(f, g), "merge");
    expect_vgm(endow(f, ElemSet::single(rng.below(n))), "endow");
    WeightedBipGraph bg = gen_graph(rng, rng.range(1, 3), n, 70);
    expect_vgm(induce_vgm(bg, f), "induction");
  }
  r.tally("vgm operations stay vgm", trials, failures, first);
}

// ---- criterion 7 -----------------------------------------------------------

void suite_snowflake(Recorder& r, Rng&) {
  ValMat expected = snowflake_table();
  // R-induced representation over U_{2,3}
  WeightedBipGraph g(6, 3);
  for (int v = 0; v < 6; ++v) g.add_edge(v, v / 2, Rat(0));
  r.add("R-induced reconstruction (matroid U_{2,3})",
        induce_bipartite(g, ValMat::trivial(Matroid::uniform(3, 2))) == expected);
  r.add("R-induced reconstruction via the solver path",
        rminor_table(RMinorRep(g, Matroid::uniform(3, 2))) == expected);
  // valuated gammoid: auxiliary element 7 contracted, free matroid
  WeightedBipGraph g2(7, 6, 3);
  for (int v = 0; v < 6; ++v) g2.add_edge(v, v / 2, Rat(0));
  for (int j = 0; j < 3; ++j) g2.add_edge(6, j, Rat(0));
  r.add("gammoid reconstruction (element 7 contracted)",
        rminor_table(RMinorRep(g2, Matroid::free_matroid(3))) == expected);
  r.add("gammoid reconstruction via contraction of the induced function",
        contraction(induce_bipartite(g2, ValMat::free_valmat(3)), ElemSet::single(6)) == expected);
}

// ---- criterion 8 -----------------------------------------------------------

void suite_trimming(Recorder& r, Rng& rng) {
  int failures = 0;
  std::string first;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    int nu = rng.range(2, 8);
    Matroid m = gen_matroid(rng, nu, 4);
    int d = m.rank();
    int nv = rng.range(std::max(1, d), 5);
    WeightedBipGraph g = gen_graph(rng, nv, nu, rng.range(50, 95));
    RMinorRep rep(g, m);
    RMinorRep trimmed = trim_representation(rep);
    std::vector<int> degree(nv, 0);
    for (const Edge& e : trimmed.graph.edges) ++degree[e.left];
    bool ok = static_cast<int>(trimmed.graph.edges.size()) <= nv * d;
    for (int v = 0; v < nv; ++v)
      if (degree[v] > d) ok = false;
    if (ok) ok = rminor_table_brute(trimmed) == rminor_table_brute(rep);
    if (!ok) {
      ++failures;
      if (first.empty()) first = "trial " + std::to_string(t);
    }
  }
  r.tally("trimming keeps the function and meets the size bound", trials, failures, first);
}

// ---- criterion 9 -----------------------------------------------------------

void suite_rado(Recorder& r, Rng& rng) {
  int failures = 0;
  std::string first;
  const int trials = 50;
  for (int t = 0; t < trials; ++t) {
    int nu = rng.range(2, 5);
    RadoRep rep = gen_rado_rep(rng, rng.range(2, 5), rng.range(0, std::min(3, nu - 1)), nu);
    std::vector<std::string> bad = check_rho_submodular(rep);
    auto more = check_rho_value_bounds(rep);
    bad.insert(bad.end(), more.begin(), more.end());
    UncrossingReport ur = check_uncrossing(rep);
    bad.insert(bad.end(), ur.violations.begin(), ur.violations.end());
    auto cls = check_closure_identity(rep);
    bad.insert(bad.end(), cls.begin(), cls.end());
    if (!bad.empty()) {
      ++failures;
      if (first.empty()) first = bad.front();
    }
  }
  r.tally("rho submodularity, value bounds, uncrossing I/II, closure identity", trials, failures, first);

  for (int n : {8, 9, 10}) {
    // expected witness: K = even pair indices (1-based), i.e. odd 0-based
    ElemSet k_b0, k_b1;
    for (int p = 0; p < n; ++p)
      if ((p + 1) % 2 == 0) k_b0.insert(p);
    k_b1 = k_b0.without(1);  // "even indices different from 2"
    Matroid b0 = B0_matroid(n), b1 = B1_matroid(n, true);
    RobustResult r0 = is_robust(b0), r1 = is_robust(b1);
    bool ok = r0.robust && r1.robust && validate_robust_partition(b0, ElemSet::full(n) - k_b0, k_b0) &&
              validate_robust_partition(b1, ElemSet::full(n) - k_b1, k_b1);
    r.add("robust recognition with the even-index witness, n=" + std::to_string(n), ok);
  }

  ReducibilityResult red = fully_reducible(B0_matroid(10));
  r.add("B0 at n=10 is not fully reducible within the case shapes", !red.decomposition.has_value(), red.note);
  ReducibilityResult u23 = fully_reducible(Matroid::uniform(3, 2));
  r.add("U_{2,3} decomposes as U_{1,3} v U_{1,3}",
        u23.decomposition.has_value() && u23.decomposition->rank1 == 1 && u23.decomposition->rank2 == 1);
}

// ---- criterion 10 ----------------------------------------------------------

void suite_tropical(Recorder& r, Rng& rng) {
  {
    int failures = 0;
    for (int t = 0; t < 1000; ++t) {
      Puiseux x = rng.below(100) < 10 ? Puiseux() : gen_puiseux(rng, 3, true);
      Puiseux y = rng.below(100) < 10 ? Puiseux() : gen_puiseux(rng, 3, true);
      if ((x + y).deg() != max(x.deg(), y.deg())) ++failures;
      if ((x * y).deg() != x.deg() + y.deg()) ++failures;
    }
    r.tally("degree map is a semiring homomorphism on positive scalars", 1000, failures);
  }
  {
    int failures = 0;
    for (int t = 0; t < 50; ++t) {
      int n = rng.range(2, 5), d = rng.range(1, std::min(3, n));
      TropPoly p = gen_troppoly(rng, n, d, true);
      ValMat f = discrete_to_valmat(tropicalize(p));
      int i = rng.below(n);
      if (!(deletion(discrete_to_valmat(tropicalize(poly_delete(p, i))), ElemSet::single(i)) ==
            deletion(f, ElemSet::single(i))))
        ++failures;
      if (!(deletion(discrete_to_valmat(tropicalize(poly_contract(p, i))), ElemSet::single(i)) ==
            contraction(f, ElemSet::single(i))))
        ++failures;
    }
    r.tally("deletion and contraction commute with tropicalization", 50, failures);
  }
  {
    int failures = 0;
    std::string first;
    for (int t = 0; t < 100; ++t) {
      int n = rng.range(2, 5), k = rng.range(2, 5), d = rng.range(1, std::min(3, n));
      TropPoly q = gen_troppoly(rng, n, d, true);
      CommutationReport rep = check_commutation(gen_puiseux_matrix(rng, n, k, 30), q);
      if (!rep.ok() || !rep.multiaffine_checked) {
        ++failures;
        if (first.empty() && !rep.diffs.empty()) first = rep.diffs.front();
      }
    }
    r.tally("matrix action vs bipartite induction on multi-affine inputs", 100, failures, first);
  }
  {
    int failures = 0;
    std::string first;
    for (int t = 0; t < 50; ++t) {
      int n = rng.range(2, 4), k = rng.range(2, 4), d = rng.range(2, 3);
      TropPoly q = gen_troppoly(rng, n, d, false);
      CommutationReport rep = check_commutation(gen_puiseux_matrix(rng, n, k, 30), q);
      if (!rep.full_checked || !rep.ok()) {
        ++failures;
        if (first.empty() && !rep.diffs.empty()) first = rep.diffs.front();
      }
    }
    r.tally("matrix action vs subgraph transformation brute force", 50, failures, first);
  }
}

// ---- criterion 11 ----------------------------------------------------------

void suite_rnat(Recorder& r, Rng& rng) {
  {
    int done = 0, failures = 0;
    while (done < 50) {
      RNatRep rep = gen_rnat_rep(rng, rng.range(2, 4), rng.range(0, 1), rng.range(2, 5));
      VGM table = rnat_table(rep);
      ElemSet t_set;
      for (int i : rep.v_nodes())
        if (rng.coin()) t_set.insert(i);
      if (t_set.empty() || !table(t_set).finite()) continue;
      ++done;
      RNatRep endowed = endow_representation(rep, t_set);
      if (!(rnat_table(endowed) == endow(table, t_set))) ++failures;
    }
    r.tally("endowment re-representation matches direct endow", 50, failures);
  }
  {
    int failures = 0;
    for (int t = 0; t < 50; ++t) {
      int nv = rng.range(2, 3);
      RNatRep a = gen_rnat_rep(rng, nv, rng.range(0, 1), rng.range(2, 4));
      RNatRep b = gen_rnat_rep(rng, nv, rng.range(0, 1), rng.range(2, 4));
      RNatRep glued = merge_representation(a, b);
      if (!(rnat_table(glued) == merge(rnat_table(a), rnat_table(b)))) ++failures;
    }
    r.tally("merge re-representation matches direct merge", 50, failures);
  }
}

// ---- criterion 12 ----------------------------------------------------------

void suite_doubling(Recorder& r, Rng& rng) {
  int failures = 0;
  std::string first;
  const int trials = 30;
  for (int t = 0; t < trials; ++t) {
    int n = rng.range(2, 5);
    VGM f = gen_vgm(rng, n);
    ValMat g = vgm_to_valmat(f);
    bool ok = check_vgm(f).ok ? check_valuated(g).ok : true;
    ElemSet v1 = ElemSet::full(n);
    for (std::uint64_t xb = 0; xb < (std::uint64_t(1) << n) && ok; ++xb) {
      ElemSet x(xb);
      // every padding from the copy recovers f
      for_each_subset_of_size(ElemSet::full(2 * n) - v1, n - x.size(), [&](ElemSet y) {
        if (!(g(x | y) == f(x))) ok = false;
      });
    }
    if (!ok) {
      ++failures;
      if (first.empty()) first = "trial " + std::to_string(t);
    }
  }
  r.tally("doubling construction: recovery identity and valuatedness", trials, failures, first);
}

using SuiteFn = void (*)(Recorder&, Rng&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"transversal", suite_transversal}, {"family", suite_family}, {"solver", suite_solver},
      {"duality", suite_duality},     {"identities", suite_identities}, {"closure", suite_closure},
      {"snowflake", suite_snowflake}, {"trimming", suite_trimming}, {"rado", suite_rado},
      {"tropical", suite_tropical},   {"rnat", suite_rnat},         {"doubling", suite_doubling},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult result;
    result.suite = name;
    Rng rng(seed);
    Recorder rec{result.checks};
    auto start = std::chrono::steady_clock::now();
    fn(rec, rng);
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    result.pass = true;
    for (const SuiteCheck& c : result.checks)
      if (!c.pass) result.pass = false;
    return result;
  }
  throw unknown_suite_error("unknown suite: " + name);
}

}  // namespace valmat
