#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"
#include "valmat/intersection.hpp"
#include "valmat/rado.hpp"

using namespace valmat;
using valmat::testing::example_graph;

TEST_CASE("independent matching on the worked transversal example") {
  WeightedBipGraph g = example_graph();
  Matroid m = Matroid::free_matroid(2);
  CHECK(max_weight_independent_matching(g, m, ElemSet{1, 2}).value == ExtRat(1));
  CHECK(max_weight_independent_matching(g, m, ElemSet{0, 1}).value == ExtRat::neg_inf());
  WeightedBipGraph single(1, 1);
  single.add_edge(0, 0, Rat(5));
  CHECK(max_weight_independent_matching(single, Matroid::free_matroid(1), ElemSet{0}).value == ExtRat(5));
}

TEST_CASE("lovasz extension") {
  Matroid u23 = Matroid::uniform(3, 2);
  CHECK(lovasz_extension(u23, {Rat(2), Rat(1), Rat(0)}) == Rat(3));
  CHECK(lovasz_extension(u23, {Rat(0), Rat(0), Rat(0)}) == Rat(0));
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    int n = rng.range(1, 8);
    Matroid m = gen_matroid(rng, n, 4);
    std::vector<Rat> tau;
    for (int i = 0; i < n; ++i) tau.push_back(rng.rational(6, 6));
    Rat brute = 0;
    bool first = true;
    for (ElemSet b : m.bases()) {
      Rat w = 0;
      for (int e : b) w += tau[e];
      if (first || w > brute) brute = w;
      first = false;
    }
    CHECK(lovasz_extension(m, tau) == brute);
  }
}

TEST_CASE("matroid of maximum weight bases") {
  Matroid u23 = Matroid::uniform(3, 2);
  CHECK(matroid_of_max_weight_bases(u23, {Rat(0), Rat(0), Rat(0)}) == u23);
  Matroid mt = matroid_of_max_weight_bases(u23, {Rat(1), Rat(0), Rat(0)});
  CHECK(mt.bases() == std::vector<ElemSet>{ElemSet{0, 1}, ElemSet{0, 2}});
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    int n = rng.range(1, 8);
    Matroid m = gen_matroid(rng, n, 4);
    std::vector<Rat> tau;
    for (int i = 0; i < n; ++i) tau.push_back(Rat(rng.range(-2, 2)));
    Rat best = lovasz_extension(m, tau);
    std::vector<ElemSet> expect;
    for (ElemSet b : m.bases()) {
      Rat w = 0;
      for (int e : b) w += tau[e];
      if (w == best) expect.push_back(b);
    }
    CHECK(matroid_of_max_weight_bases(m, tau).bases() == expect);
  }
}

TEST_CASE("dual certificate on the worked transversal example") {
  WeightedBipGraph g = example_graph();
  Matroid m = Matroid::free_matroid(2);
  DualCert cert = dual_certificate(g, m);
  Rat value = lovasz_extension(m, cert.tau);
  for (const Rat& p : cert.pi) value += p;
  CHECK(value == Rat(1));  // optimum of the full-rank program
  CHECK(verify_certificate(g, m, cert).ok());
}

TEST_CASE("zero weights admit the zero certificate") {
  WeightedBipGraph g(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.add_edge(i, j, Rat(0));
  Matroid m = Matroid::free_matroid(3);
  DualCert zero{{Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
  CHECK(verify_certificate(g, m, zero).ok());
}

TEST_CASE("perturbed certificates are rejected") {
  WeightedBipGraph g = example_graph();
  Matroid m = Matroid::free_matroid(2);
  DualCert cert = dual_certificate(g, m);
  SUBCASE("tau bumped on a coordinate in every maximum basis") {
    DualCert bad = cert;
    bad.tau[0] += 1;
    CertReport rep = verify_certificate(g, m, bad);
    CHECK_FALSE(rep.strong_duality);
  }
  SUBCASE("negative pi on V") {
    DualCert bad = cert;
    bad.pi[0] = Rat(-1);
    CertReport rep = verify_certificate(g, m, bad);
    CHECK_FALSE(rep.feasible);
  }
}

TEST_CASE("tight subgraph") {
  WeightedBipGraph g(2, 2);
  g.add_edge(0, 0, Rat(0));
  g.add_edge(0, 1, Rat(-3));  // strictly slack under the zero certificate
  g.add_edge(1, 1, Rat(0));
  DualCert zero{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
  WeightedBipGraph t = tight_subgraph(g, zero);
  CHECK(t.edges.size() == 2);
  DualCert infeasible{{Rat(0), Rat(0)}, {Rat(-1), Rat(0)}};
  CHECK_THROWS_AS(tight_subgraph(g, infeasible), std::domain_error);
  // every max-weight matching edge of the example is tight
  WeightedBipGraph ex = example_graph();
  Matroid m = Matroid::free_matroid(2);
  DualCert cert = dual_certificate(ex, m);
  std::vector<int> e0 = tight_edges(ex, cert);
  std::vector<char> tight(ex.edges.size(), 0);
  for (int id : e0) tight[id] = 1;
  for (const Matching& mu : optimal_matchings(ex, m, ElemSet{1, 2}, ExtRat(1)))
    for (int id : mu.edge_ids) CHECK(tight[id]);
}

TEST_CASE("strong duality holds exactly on random instances") {
  Rng rng(47);
  int done = 0;
  while (done < 120) {
    int nv = rng.range(1, 4), nw = rng.range(0, 2), nu = rng.range(1, 5);
    WeightedBipGraph g = gen_graph_split(rng, nv, nw, nu, rng.range(40, 90));
    Matroid m = gen_matroid(rng, nu, nu);
    DualCert cert;
    try {
      cert = dual_certificate(g, m);
    } catch (const no_certificate_error&) {
      continue;
    }
    ++done;
    IndependentMatchingResult primal = solve_full_rank_program(g, m);
    REQUIRE(primal.matching.has_value());
    Rat dual_value = lovasz_extension(m, cert.tau);
    for (const Rat& p : cert.pi) dual_value += p;
    CHECK(ExtRat(dual_value) == primal.value);
  }
}

TEST_CASE("non-constant tau makes the maximizer matroid fully reducible") {
  // The certificate's level structure supplies the decomposition; verify
  // it is a genuine full-rank union of the maximizer matroid.
  Rng rng(53);
  int interesting = 0;
  for (int t = 0; t < 400 && interesting < 25; ++t) {
    int nv = rng.range(2, 5), nu = rng.range(2, 5);
    WeightedBipGraph g = gen_graph(rng, nv, nu, rng.range(50, 90));
    Matroid m = gen_matroid(rng, nu, nu);
    if (m.rank() < 1 || m.rank() > 3 || m.rank() > nv) continue;
    DualCert cert;
    try {
      cert = dual_certificate(g, m);
    } catch (const no_certificate_error&) {
      continue;
    }
    // split boundary: a level prefix whose rank is strictly between 0 and d
    int d = m.rank();
    Matroid m_tau = matroid_of_max_weight_bases(m, cert.tau);
    ElemSet split;
    for (ElemSet s : tau_level_sets(nu, cert.tau)) {
      int rs = m_tau.rank(s);
      if (rs > 0 && rs < d) {
        split = s;
        break;
      }
    }
    if (split.empty()) continue;  // tau effectively constant on non-loops
    ++interesting;

    // maximizer matroid on V
    IndependentMatchingResult primal = solve_full_rank_program(g, m);
    std::vector<ElemSet> maximizers;
    for_each_subset_of_size(g.v_nodes(), d, [&](ElemSet x) {
      IndependentMatchingResult r = max_weight_independent_matching_brute(g, m, x);
      if (r.matching && r.value == primal.value) maximizers.push_back(x);
    });
    REQUIRE_FALSE(maximizers.empty());
    Matroid maximizer_matroid = Matroid::from_bases(nv, maximizers);

    WeightedBipGraph g0 = tight_subgraph(g, cert);
    Matroid m_top = Matroid::from_oracle(nu, [m_tau, split](ElemSet x) { return m_tau.rank(x & split); });
    Matroid m_rest = Matroid::from_oracle(nu, [m_tau, split](ElemSet x) { return m_tau.rank(x - split); });
    Matroid n1 = represented_matroid(RadoRep(g0, m_top));
    Matroid n2 = represented_matroid(RadoRep(g0, m_rest));
    CHECK(n1.rank() > 0);
    CHECK(n2.rank() > 0);
    CHECK(n1.rank() + n2.rank() == d);
    CHECK(matroid_union(n1, n2) == maximizer_matroid);
  }
  CHECK(interesting >= 25);
}

TEST_CASE("solver output is deterministic") {
  Rng rng(59);
  for (int t = 0; t < 50; ++t) {
    WeightedBipGraph g = gen_graph(rng, rng.range(1, 5), rng.range(1, 5), 70);
    Matroid m = gen_matroid(rng, g.right_count, g.right_count);
    ElemSet cover;
    for (int i = 0; i < g.left_count; ++i)
      if (rng.coin()) cover.insert(i);
    IndependentMatchingResult a = max_weight_independent_matching(g, m, cover);
    IndependentMatchingResult b = max_weight_independent_matching(g, m, cover);
    CHECK(a.value == b.value);
    CHECK((a.matching.has_value() == b.matching.has_value()));
    if (a.matching) CHECK(a.matching->edge_ids == b.matching->edge_ids);
  }
}

TEST_CASE("infeasible programs are reported distinctly") {
  WeightedBipGraph g(2, 1, 1);  // V = {0}, W = {1}, one right node
  g.add_edge(0, 0, Rat(1));     // W cannot be covered
  CHECK_THROWS_AS(dual_certificate(g, Matroid::free_matroid(1)), no_certificate_error);
  CHECK_FALSE(solve_full_rank_program(g, Matroid::free_matroid(1)).matching.has_value());
}
