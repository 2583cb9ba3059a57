#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"
#include "valmat/induction.hpp"

using namespace valmat;
using valmat::testing::example_graph;
using valmat::testing::example_table;

namespace {

Network chain_network() {
  // v -> m -> u with weights 1, 2
  Network net;
  net.node_count = 3;
  net.terminals_v = ElemSet{0};
  net.terminals_u = ElemSet{2};
  net.arcs.push_back(Arc{0, 1, Rat(1)});
  net.arcs.push_back(Arc{1, 2, Rat(2)});
  return net;
}

Network random_dag(Rng& rng, int nodes) {
  Network net;
  net.node_count = nodes;
  int nv = rng.range(1, std::max(1, nodes / 3));
  int nu = rng.range(1, std::max(1, nodes / 3));
  for (int i = 0; i < nv; ++i) net.terminals_v.insert(i);
  for (int i = 0; i < nu; ++i) net.terminals_u.insert(nodes - 1 - i);
  if (net.terminals_v.intersects(net.terminals_u)) {
    net.terminals_u = ElemSet::single(nodes - 1);
    net.terminals_v = ElemSet::single(0);
  }
  for (int a = 0; a < nodes; ++a)
    for (int b = a + 1; b < nodes; ++b)
      if (rng.below(100) < 45) net.arcs.push_back(Arc{a, b, rng.rational(6, 8)});
  return net;
}

}  // namespace

TEST_CASE("bipartite induction reproduces the worked transversal example") {
  CHECK(induce_bipartite(example_graph(), ValMat::trivial(Matroid::free_matroid(2))) == example_table());
}

TEST_CASE("identity gadget induces the same function") {
  Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    ValMat f = gen_valmat(rng, rng.range(2, 6), rng.range(1, 3));
    WeightedBipGraph id(f.ground_size(), f.ground_size());
    for (int v = 0; v < f.ground_size(); ++v) id.add_edge(v, v, Rat(0));
    CHECK(induce_bipartite(id, f) == f);
  }
}

TEST_CASE("principal extension equals induction through the one-node gadget") {
  Rng rng(67);
  for (int t = 0; t < 40; ++t) {
    int n = rng.range(2, 5);
    ValMat f = gen_valmat(rng, n, rng.range(1, 3));
    std::vector<ExtRat> w;
    for (int i = 0; i < n; ++i) w.push_back(rng.coin() ? ExtRat(rng.rational(6, 8)) : ExtRat::neg_inf());
    // left = copies of the ground plus p (index n); right = ground
    WeightedBipGraph gadget(n + 1, n);
    for (int u = 0; u < n; ++u) gadget.add_edge(u, u, Rat(0));
    for (int u = 0; u < n; ++u)
      if (w[u].finite()) gadget.add_edge(n, u, w[u].value());
    CHECK(induce_bipartite(gadget, f) == principal_extension(f, w));
  }
}

TEST_CASE("network induction: chain and bipartite special case") {
  CHECK(induce_network(chain_network(), ValMat::free_valmat(1))(ElemSet{0}) == ExtRat(3));
  CHECK(induce_network_value_brute(chain_network(), ValMat::free_valmat(1), ElemSet{0}) == ExtRat(3));

  // bipartite networks agree with bipartite induction
  Rng rng(71);
  for (int t = 0; t < 20; ++t) {
    int nv = rng.range(1, 4), nu = rng.range(1, 4);
    WeightedBipGraph g = gen_graph(rng, nv, nu, 60);
    ValMat base = gen_valmat(rng, nu, rng.range(1, std::max(1, nu)));
    Network net;
    net.node_count = nv + nu;
    for (int i = 0; i < nv; ++i) net.terminals_v.insert(i);
    for (int j = 0; j < nu; ++j) net.terminals_u.insert(nv + j);
    for (const Edge& e : g.edges) net.arcs.push_back(Arc{e.left, nv + e.right, e.weight});
    CHECK(induce_network(net, base) == induce_bipartite(g, base));
  }
}

TEST_CASE("network reduction agrees with the path-system oracle") {
  Rng rng(73);
  int done = 0;
  while (done < 100) {
    Network net = random_dag(rng, rng.range(3, 8));
    int nu = net.terminals_u.size();
    ValMat base = gen_valmat(rng, nu, rng.range(1, std::max(1, nu)));
    ValMat via_reduction = induce_network(net, base);
    ++done;
    for_each_subset_of_size(ElemSet::full(net.terminals_v.size()), base.layer(), [&](ElemSet x) {
      CHECK(via_reduction(x) == induce_network_value_brute(net, base, x));
    });
  }
}

TEST_CASE("bipartite input passes through the reduction unchanged") {
  Network net;
  net.node_count = 3;
  net.terminals_v = ElemSet{0, 1};
  net.terminals_u = ElemSet{2};
  net.arcs.push_back(Arc{0, 2, Rat(5)});
  net.arcs.push_back(Arc{1, 2, Rat(7)});
  NetworkReduction red = network_to_bipartite(net, ValMat::free_valmat(1));
  CHECK(red.w_left.empty());
  CHECK(red.graph.edges.size() == 2);
  CHECK(red.graph.left_count == 2);
  CHECK(red.graph.right_count == 1);
}

TEST_CASE("R-minor evaluation") {
  // W empty reduces to bipartite induction of the trivial valuation
  RMinorRep rep(example_graph(), Matroid::free_matroid(2));
  CHECK(rminor_table(rep) == example_table());
  CHECK(rminor_table_brute(rep) == example_table());
  CHECK(eval_rminor(rep, ElemSet{0, 1}) == ExtRat::neg_inf());
  CHECK_THROWS_AS(eval_rminor(rep, ElemSet{9}), std::out_of_range);

  // identity representation of the sparse paving matroid B1 for n=3
  Matroid b1 = sparse_paving_from_circuits(6, 4, {ElemSet{2, 3, 4, 5}});
  WeightedBipGraph id(6, 6);
  for (int v = 0; v < 6; ++v) id.add_edge(v, v, Rat(0));
  RMinorRep triv(id, b1);
  for_each_subset_of_size(ElemSet::full(6), 4, [&](ElemSet x) {
    CHECK((eval_rminor(triv, x) == ExtRat(0)) == b1.is_basis(x));
  });

  // rank identity violation
  WeightedBipGraph gw(2, 1, 1);
  gw.add_edge(0, 0, Rat(0));
  gw.add_edge(1, 0, Rat(0));
  CHECK_THROWS_AS(RMinorRep(gw, Matroid::rank_zero(1)), invalid_representation_error);
}

TEST_CASE("trimming") {
  // star left node with six neighbors at rank 2
  WeightedBipGraph star(1, 6);
  for (int j = 0; j < 6; ++j) star.add_edge(0, j, Rat(j));
  RMinorRep rep(star, Matroid::uniform(6, 2));
  RMinorRep trimmed = trim_representation(rep);
  CHECK(trimmed.graph.edges.size() == 2);
  CHECK(rminor_table_brute(trimmed) == rminor_table_brute(rep));
  // already-trimmed representations stay put
  RMinorRep again = trim_representation(trimmed);
  CHECK(again.graph.edges.size() == trimmed.graph.edges.size());
  // W nonempty is rejected
  WeightedBipGraph gw(2, 1, 2);
  gw.add_edge(0, 0, Rat(0));
  gw.add_edge(1, 1, Rat(0));
  CHECK_THROWS_AS(trim_representation(RMinorRep(gw, Matroid::free_matroid(2))), std::invalid_argument);
}

TEST_CASE("closure transformers match the function-level operations") {
  Rng rng(79);
  for (int t = 0; t < 40; ++t) {
    int nu = rng.range(2, 5);
    RMinorRep rep = gen_rminor_rep(rng, rng.range(2, 4), rng.range(0, std::min(2, nu - 1)), nu);
    ValMat f = rminor_table_brute(rep);

    // deletion by node removal
    ElemSet del;
    for (int v : rep.v_nodes())
      if (rng.below(100) < 30) del.insert(v);
    CHECK(rminor_table_brute(delete_representation(rep, del)) == deletion(f, del));

    // dual via the mirrored graph with the dual matroid plus a free part
    if (f.layer() <= f.ground_size())
      CHECK(rminor_table_brute(dual_representation(rep)) == dual(f));

    // direct sum on the disjoint union
    RMinorRep other = gen_rminor_rep(rng, rng.range(1, 3), 0, rng.range(1, 3));
    CHECK(rminor_table_brute(direct_sum_representation(rep, other)) == direct_sum(f, rminor_table_brute(other)));
  }
}

TEST_CASE("induced functions with nonempty domain are valuated") {
  Rng rng(83);
  for (int t = 0; t < 60; ++t) {
    int nu = rng.range(2, 5);
    RMinorRep rep = gen_rminor_rep(rng, rng.range(2, 5), rng.range(0, std::min(2, nu - 1)), nu);
    ValMat f = rminor_table_brute(rep);
    if (!f.dom_empty()) CHECK(check_valuated(f).ok);
  }
}

TEST_CASE("cyclic intermediate parts are rejected") {
  Network net;
  net.node_count = 4;
  net.terminals_v = ElemSet{0};
  net.terminals_u = ElemSet{3};
  net.arcs = {Arc{0, 1, Rat(0)}, Arc{1, 2, Rat(1)}, Arc{2, 1, Rat(1)}, Arc{1, 3, Rat(0)}};
  CHECK_THROWS_AS(network_to_bipartite(net, ValMat::free_valmat(1)), std::invalid_argument);
}
