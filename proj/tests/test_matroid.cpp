#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <atomic>
#include <thread>

#include "support.hpp"
#include "valmat/matroid.hpp"

using namespace valmat;

TEST_CASE("rank of basic backends") {
  Matroid u23 = Matroid::uniform(3, 2);
  CHECK(u23.rank(ElemSet{0}) == 1);
  CHECK(u23.rank(ElemSet{0, 1, 2}) == 2);
  CHECK(Matroid::free_matroid(4).rank(ElemSet{1, 3}) == 2);
  CHECK_THROWS_AS(u23.rank(ElemSet{5}), std::out_of_range);
}

TEST_CASE("closure") {
  Matroid u23 = Matroid::uniform(3, 2);
  CHECK(u23.closure(ElemSet{0}) == ElemSet{0});
  CHECK(u23.closure(ElemSet{0, 1}) == ElemSet{0, 1, 2});
  Matroid part = Matroid::partition(3, {ElemSet{0, 1}, ElemSet{2}}, {1, 1});
  // brute-force oracle: x joins the closure iff the rank stays put
  ElemSet cl;
  for (int x = 0; x < 3; ++x)
    if (part.rank(ElemSet{0}.with(x)) == part.rank(ElemSet{0})) cl.insert(x);
  CHECK(part.closure(ElemSet{0}) == cl);
  CHECK(cl == ElemSet{0, 1});
}

TEST_CASE("dual") {
  CHECK(Matroid::uniform(3, 2).dual() == Matroid::uniform(3, 1));
  CHECK(Matroid::free_matroid(4).dual() == Matroid::rank_zero(4));
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    Matroid m = gen_matroid(rng, rng.range(1, 8), 4);
    CHECK(m.dual().dual() == m);
  }
}

TEST_CASE("direct sum") {
  Matroid s = direct_sum(Matroid::uniform(2, 1), Matroid::uniform(2, 1));
  CHECK(s.rank() == 2);
  CHECK(s.bases().size() == 4);
  CHECK(direct_sum(Matroid::free_matroid(2), Matroid::free_matroid(3)) == Matroid::free_matroid(5));
  // appending loops keeps the basis family
  Matroid m = Matroid::uniform(3, 2);
  Matroid with_loops = direct_sum(m, Matroid::rank_zero(2));
  CHECK(with_loops.rank() == 2);
  CHECK(with_loops.bases() == m.bases());
}

TEST_CASE("union") {
  CHECK(matroid_union(Matroid::uniform(3, 1), Matroid::uniform(3, 1)) == Matroid::uniform(3, 2));
  Matroid m = Matroid::uniform(4, 2);
  CHECK(matroid_union(m, Matroid::rank_zero(4)) == m);

  // min-formula rank vs brute-force max |B1 u B2| over basis pairs
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    int n = rng.range(2, 8);
    Matroid m1 = gen_matroid(rng, n, 3), m2 = gen_matroid(rng, n, 3);
    Matroid u = matroid_union(m1, m2);
    int brute = 0;
    for (ElemSet b1 : m1.bases())
      for (ElemSet b2 : m2.bases()) brute = std::max(brute, (b1 | b2).size());
    CHECK(u.rank() == brute);
  }
}

TEST_CASE("minor") {
  CHECK(Matroid::uniform(4, 2).minor(ElemSet(), ElemSet{0}) == Matroid::uniform(3, 1));
  CHECK(Matroid::uniform(4, 2).minor(ElemSet{0}, ElemSet()) == Matroid::uniform(3, 2));
  CHECK_THROWS_AS(Matroid::rank_zero(3).minor(ElemSet(), ElemSet{0}), std::domain_error);

  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    int n = rng.range(3, 8);
    Matroid m = gen_matroid(rng, n, 4);
    // contraction rank identity vs the defining formula
    ElemSet basis = m.bases().front();
    ElemSet c;
    for (int e : basis)
      if (rng.coin()) c.insert(e);
    Matroid mc = m.minor(ElemSet(), c);
    std::vector<int> kept = (m.ground() - c).to_vector();
    for_each_subset(ElemSet::full(static_cast<int>(kept.size())), [&](ElemSet x) {
      ElemSet orig;
      for (int i : x) orig.insert(kept[i]);
      CHECK(mc.rank(x) == m.rank(orig | c) - m.rank(c));
    });
    // delete-then-contract = contract-then-delete on disjoint arguments
    if (c.empty() || (m.ground() - c).empty()) continue;
    int d_elem = (m.ground() - c).min_element();
    ElemSet dset = ElemSet::single(d_elem);
    auto relabel = [](ElemSet s, ElemSet removed) {
      ElemSet out;
      for (int e : s) {
        int shift = 0;
        for (int r2 : removed)
          if (r2 < e) ++shift;
        out.insert(e - shift);
      }
      return out;
    };
    Matroid combined = m.minor(dset, c);
    CHECK(m.minor(dset, ElemSet()).minor(ElemSet(), relabel(c, dset)) == combined);
    CHECK(m.minor(ElemSet(), c).minor(relabel(dset, c), ElemSet()) == combined);
  }
}

TEST_CASE("sparse paving") {
  Matroid f3 = sparse_paving_from_circuits(6, 4, {ElemSet{0, 1, 2, 3}, ElemSet{2, 3, 4, 5}});
  CHECK(f3.bases().size() == 13);
  CHECK(sparse_paving_from_circuits(6, 4, {}) == Matroid::uniform(6, 4));
  CHECK_THROWS_AS(sparse_paving_from_circuits(6, 4, {ElemSet{0, 1, 2, 3}, ElemSet{1, 2, 3, 4}}),
                  std::invalid_argument);
  CHECK(check_basis_exchange(f3).ok);
}

TEST_CASE("basis exchange checker") {
  CHECK(check_basis_exchange(Matroid::uniform(3, 2)).ok);
  ExchangeCheck c = check_basis_exchange(4, {ElemSet{0, 1}, ElemSet{2, 3}});
  REQUIRE_FALSE(c.ok);
  CHECK(c.witness->x == ElemSet{0, 1});
  CHECK(c.witness->y == ElemSet{2, 3});
  CHECK(c.witness->i == 0);
  // sparse paving output always passes the exchange check
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    int n = rng.range(4, 8);
    Matroid m = sparse_paving_from_circuits(
        n, 3, [&] {
          std::vector<ElemSet> cs;
          for (int k = 0; k < 3; ++k) {
            ElemSet c2;
            while (c2.size() < 3) c2.insert(rng.below(n));
            bool ok = true;
            for (ElemSet o : cs)
              if ((c2 & o).size() > 1) ok = false;
            if (ok) cs.push_back(c2);
          }
          return cs;
        }());
    CHECK(check_basis_exchange(m).ok);
  }
}

TEST_CASE("rank is submodular and monotone") {
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    int n = rng.range(2, 7);
    Matroid m = gen_matroid(rng, n, 4);
    CHECK(m.rank(ElemSet()) == 0);
    for_each_subset(m.ground(), [&](ElemSet a) {
      CHECK(m.rank(a) <= a.size());
      for_each_subset(m.ground(), [&](ElemSet b) {
        CHECK(m.rank(a) + m.rank(b) >= m.rank(a | b) + m.rank(a & b));
      });
    });
  }
  // one exhaustive sweep at n = 10 over all subset pairs
  Matroid big = sparse_paving_from_circuits(10, 3, {ElemSet{0, 1, 2}, ElemSet{3, 4, 5}, ElemSet{6, 7, 8}});
  bool submodular = true;
  for (std::uint64_t a = 0; a < 1024 && submodular; ++a)
    for (std::uint64_t b = 0; b < 1024; ++b)
      if (big.rank(ElemSet(a)) + big.rank(ElemSet(b)) <
          big.rank(ElemSet(a | b)) + big.rank(ElemSet(a & b))) {
        submodular = false;
        break;
      }
  CHECK(submodular);
}

TEST_CASE("capacity errors") {
  CHECK_THROWS_AS(check_basis_exchange(Matroid::uniform(15, 2)), capacity_error);
  CHECK_THROWS_AS(Matroid::uniform(22, 3).bases(), capacity_error);
}

TEST_CASE("VALMAT_CAPACITY overrides the exhaustive bounds") {
  setenv("VALMAT_CAPACITY", "4", 1);
  CHECK_THROWS_AS(check_basis_exchange(Matroid::uniform(5, 2)), capacity_error);
  setenv("VALMAT_CAPACITY", "16", 1);
  CHECK(check_basis_exchange(Matroid::uniform(15, 2)).ok);
  unsetenv("VALMAT_CAPACITY");
  CHECK(check_basis_exchange(Matroid::uniform(5, 2)).ok);
}

TEST_CASE("concurrent rank queries on a shared matroid") {
  Rng rng(211);
  Matroid m = matroid_union(gen_matroid(rng, 8, 3), gen_matroid(rng, 8, 3));
  std::vector<int> expected;
  for_each_subset(m.ground(), [&](ElemSet s) { expected.push_back(m.rank(s)); });
  Matroid fresh = matroid_union(m, Matroid::rank_zero(8));  // cold memo
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&] {
      std::size_t i = 0;
      for_each_subset(fresh.ground(), [&](ElemSet s) {
        if (fresh.rank(s) != expected[i++]) ok = false;
      });
    });
  for (auto& t : workers) t.join();
  CHECK(ok);
}
