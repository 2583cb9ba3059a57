#pragma once

#include <map>

#include "valmat/matroid.hpp"
#include "valmat/rng.hpp"
#include "valmat/valfn.hpp"
#include "valmat/vgm.hpp"

namespace valmat {

/// Canonical pairs P_1..P_n on the 0-indexed ground set [0, 2n):
/// P_i = {2i-2, 2i-1} for the 1-based pair index i.
ElemSet family_pair(int i);
std::vector<ElemSet> family_pairs(int n);

/// The circuit family H = { P_i u P_j : i*j even } (1-based indices).
std::vector<ElemSet> family_H(int n);

/// X* = P_1 u P_2 = {0,1,2,3}.
ElemSet family_star();

/// Parameters of a family member: strictly negative values on H (finite
/// or -infinity off X*), with the X* value the strict maximum among them.
struct FamilyParams {
  int n = 2;
  std::map<ElemSet, ExtRat> values;  // keyed by H \ {X*}
  Rat star_value;

  void validate() const;  // throws std::invalid_argument
};

/// Random parameters; denominators stay <= 1000 to keep arithmetic cheap.
FamilyParams random_family_params(Rng& rng, int n, bool allow_neg_inf);

/// The rank-4 valuated matroid on 2n elements: 0 outside H, the given
/// negative values on H.
ValMat make_Fn(const FamilyParams& p);

/// B0 = all 4-sets except H; sparse paving.
Matroid B0_matroid(int n);
/// B1 = B0 plus X* when the flag is set (circuits H \ {X*}).
Matroid B1_matroid(int n, bool star_included);

/// The monotone valuated generalized matroid
///   |X| for |X|<=3, 4+h(X) for |X|=4, 4 for |X|>=5;
/// requires all family values finite in (-1, 0).
VGM make_h_natural(const FamilyParams& p);

}  // namespace valmat
