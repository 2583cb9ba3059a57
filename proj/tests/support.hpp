#pragma once

#include <doctest.h>

#include "valmat/gen.hpp"
#include "valmat/rng.hpp"

namespace valmat::testing {

// The worked transversal example: graph and its induced table (0-indexed).
inline WeightedBipGraph example_graph() {
  WeightedBipGraph g(4, 2);
  g.add_edge(0, 0, Rat(0));
  g.add_edge(1, 0, Rat(1));
  g.add_edge(2, 0, Rat(1));
  g.add_edge(2, 1, Rat(0));
  g.add_edge(3, 1, Rat(0));
  return g;
}

inline ValMat example_table() {
  ValMat f(4, 2);
  f.set(ElemSet{0, 2}, ExtRat(0));
  f.set(ElemSet{0, 3}, ExtRat(0));
  f.set(ElemSet{1, 2}, ExtRat(1));
  f.set(ElemSet{1, 3}, ExtRat(1));
  f.set(ElemSet{2, 3}, ExtRat(1));
  return f;
}

inline ValMat snowflake() {
  ValMat f(6, 2);
  for_each_subset_of_size(ElemSet::full(6), 2, [&](ElemSet x) { f.set(x, ExtRat(0)); });
  f.set(ElemSet{0, 1}, ExtRat::neg_inf());
  f.set(ElemSet{2, 3}, ExtRat::neg_inf());
  f.set(ElemSet{4, 5}, ExtRat::neg_inf());
  return f;
}

}  // namespace valmat::testing
