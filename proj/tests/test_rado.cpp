#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"
#include "valmat/family.hpp"
#include "valmat/rado.hpp"

using namespace valmat;
using valmat::testing::example_graph;

namespace {

// Identity representation of a matroid, optionally padded with contracted
// nodes w each matched to a fresh coloop (and noise edges that can never
// be used).
RadoRep identity_rep(const Matroid& m, int nw, Rng* rng = nullptr) {
  int n = m.ground_size();
  WeightedBipGraph g(n + nw, n, n + nw);
  for (int v = 0; v < n; ++v) g.add_edge(v, v, Rat(0));
  Matroid padded = m;
  for (int i = 0; i < nw; ++i) {
    g.add_edge(n + i, n + i, Rat(0));
    if (rng)
      for (int j = 0; j < n; ++j)
        if (rng->below(100) < 25) g.add_edge(n + i, j, Rat(0));
    padded = direct_sum(padded, Matroid::free_matroid(1));
  }
  return RadoRep(std::move(g), std::move(padded));
}

}  // namespace

TEST_CASE("rado independence") {
  // free matroid + complete graph: everything small enough is independent
  WeightedBipGraph complete(3, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) complete.add_edge(i, j, Rat(0));
  RadoRep free_rep(complete, Matroid::free_matroid(4));
  for_each_subset(ElemSet::full(3), [&](ElemSet x) { CHECK(rado_independent(free_rep, x)); });

  RadoRep ex(example_graph(), Matroid::free_matroid(2));
  CHECK_FALSE(rado_independent(ex, ElemSet{0, 1}));  // Gamma = {u1}, rank 1 < 2
  CHECK(rado_independent(ex, ElemSet{1, 2}));

  WeightedBipGraph snow(6, 3);
  for (int v = 0; v < 6; ++v) snow.add_edge(v, v / 2, Rat(0));
  RadoRep snow_rep(snow, Matroid::uniform(3, 2));
  CHECK(rado_independent(snow_rep, ElemSet{0, 2}));
  CHECK_FALSE(rado_independent(snow_rep, ElemSet{0, 1}));
}

TEST_CASE("rho basics") {
  RadoRep ex(example_graph(), Matroid::free_matroid(2));
  CHECK(rho(ex, ElemSet()) == 0);
  // circuits attain min rho = -1 over their X-sets; independents stay >= 0
  Rng rng(89);
  for (int t = 0; t < 30; ++t) {
    int nu = rng.range(2, 5);
    RadoRep rep = gen_rado_rep(rng, rng.range(2, 4), rng.range(0, std::min(2, nu - 1)), nu);
    CHECK(check_rho_value_bounds(rep).empty());
    CHECK(check_rho_submodular(rep).empty());
  }
}

TEST_CASE("largest tight set") {
  RadoRep ex(example_graph(), Matroid::free_matroid(2));
  CHECK(largest_tight_set(ex, ElemSet()) == ElemSet());  // W empty
  // two X-sets with rho = 0 union to a tight set (lattice property)
  Rng rng(97);
  for (int t = 0; t < 40; ++t) {
    int nu = rng.range(2, 5);
    RadoRep rep = gen_rado_rep(rng, rng.range(2, 4), rng.range(1, std::min(3, nu - 1)), nu);
    for_each_subset(rep.v_nodes(), [&](ElemSet x) {
      if (!rado_independent(rep, x)) return;
      auto z = largest_tight_set(rep, x);
      if (!z) return;
      CHECK((*z & rep.v_nodes()) == x);
      CHECK(rho(rep, *z) == 0);
      // maximality: every strictly larger X-set has rho != 0
      for_each_subset(rep.w_nodes() - *z, [&](ElemSet extra) {
        if (!extra.empty()) CHECK(rho(rep, *z | extra) != 0);
      });
    });
  }
}

TEST_CASE("uncrossing sweeps stay clean") {
  Rng rng(101);
  for (int t = 0; t < 30; ++t) {
    int nu = rng.range(2, 5);
    RadoRep rep = gen_rado_rep(rng, rng.range(2, 4), rng.range(0, std::min(3, nu - 1)), nu);
    UncrossingReport ur = check_uncrossing(rep);
    CHECK(ur.violations.empty());
    CHECK(check_closure_identity(rep).empty());
  }
  // degenerate W = 0: the largest tight subset of W is empty
  RadoRep ex(example_graph(), Matroid::free_matroid(2));
  CHECK(largest_tight_set(ex, ElemSet()) == ElemSet());
}

TEST_CASE("robust matroid Z-sets on family representations") {
  Rng rng(103);
  for (int n : {8, 9}) {
    for (int variant = 0; variant < 2; ++variant) {
      Matroid b = variant == 0 ? B0_matroid(n) : B1_matroid(n, true);
      RadoRep rep = identity_rep(b, 2, &rng);
      ElemSet q;  // largest tight subset of W
      {
        auto z = largest_tight_set(rep, ElemSet());
        REQUIRE(z.has_value());
        q = *z;
      }
      std::vector<ElemSet> z_sets;
      for (int p = 1; p <= n; ++p) {
        auto z = largest_tight_set(rep, family_pair(p));
        REQUIRE(z.has_value());  // the largest tight pair-set exists
        CHECK(q.subset_of(*z));
        z_sets.push_back(*z);
      }
      // pairwise intersections are Q; union rho is 0 on bases and -1 on
      // circuits
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          ElemSet zi = z_sets[i - 1], zj = z_sets[j - 1];
          CHECK((zi & zj) == q);
          bool circuit = ((i * j) % 2 == 0) && !(variant == 1 && i == 1 && j == 2);
          CHECK(rho(rep, zi | zj) == (circuit ? -1 : 0));
        }
    }
  }
}

TEST_CASE("fully reducible") {
  ReducibilityResult u23 = fully_reducible(Matroid::uniform(3, 2));
  REQUIRE(u23.decomposition.has_value());
  CHECK(u23.decomposition->rank1 == 1);
  CHECK(u23.decomposition->rank2 == 1);
  CHECK(matroid_union(u23.decomposition->m1, u23.decomposition->m2) == Matroid::uniform(3, 2));
  // the canonical split into two rank-1 uniform matroids is among the
  // valid answers
  CHECK(matroid_union(Matroid::uniform(3, 1), Matroid::uniform(3, 1)) == Matroid::uniform(3, 2));
  CHECK_FALSE(fully_reducible(Matroid::uniform(4, 1)).decomposition.has_value());
  CHECK_FALSE(fully_reducible(B0_matroid(10)).decomposition.has_value());
  // found decompositions verify as unions
  Rng rng(107);
  for (int t = 0; t < 25; ++t) {
    Matroid m = gen_matroid(rng, rng.range(2, 7), 4);
    if (m.rank() < 2 || m.rank() > 6) continue;
    ReducibilityResult res = fully_reducible(m);
    if (res.decomposition)
      CHECK(matroid_union(res.decomposition->m1, res.decomposition->m2) == m);
  }
}

TEST_CASE("robust recognition") {
  for (int n : {8, 10}) {
    RobustResult r0 = is_robust(B0_matroid(n));
    CHECK(r0.robust);
    RobustResult r1 = is_robust(B1_matroid(n, true));
    CHECK(r1.robust);
    // the even-index witnesses validate
    ElemSet evens;  // 1-based even pair indices = 0-based odd
    for (int p = 0; p < n; ++p)
      if ((p + 1) % 2 == 0) evens.insert(p);
    CHECK(validate_robust_partition(B0_matroid(n), ElemSet::full(n) - evens, evens));
    CHECK(validate_robust_partition(B1_matroid(n, true), ElemSet::full(n) - evens.without(1), evens.without(1)));
  }
  CHECK_FALSE(is_robust(Matroid::uniform(16, 4)).robust);
  CHECK_THROWS_AS(is_robust(Matroid::uniform(16, 3)), std::domain_error);
  CHECK_THROWS_AS(is_robust(Matroid::uniform(15, 4)), std::domain_error);
}

TEST_CASE("represented matroid matches the rank condition") {
  Rng rng(109);
  for (int t = 0; t < 25; ++t) {
    int nu = rng.range(2, 5);
    RadoRep rep = gen_rado_rep(rng, rng.range(2, 4), rng.range(0, std::min(2, nu - 1)), nu);
    Matroid n = represented_matroid(rep);
    for_each_subset(rep.v_nodes(), [&](ElemSet x) {
      CHECK(n.is_independent(x) == rado_independent(rep, x));
    });
  }
}
