#pragma once

#include "valmat/graph.hpp"
#include "valmat/induction.hpp"
#include "valmat/matroid.hpp"
#include "valmat/rado.hpp"
#include "valmat/rng.hpp"
#include "valmat/tropical.hpp"
#include "valmat/valfn.hpp"
#include "valmat/vgm.hpp"

namespace valmat {

// Seeded random instance generators for property checks. Every generator
// produces a structurally valid object (matroids satisfy the axioms by
// construction, valuated matroids come from inductions or sparse paving
// perturbations, vgms from weighted ranks composed with closure-preserving
// operations).

Matroid gen_matroid(Rng& rng, int n, int max_rank);

WeightedBipGraph gen_graph(Rng& rng, int left, int right, int edge_percent);
WeightedBipGraph gen_graph_split(Rng& rng, int nv, int nw, int right, int edge_percent);

/// Valid valuated matroid with nonempty domain (R-induced from a random
/// matroid, or a sparse paving matroid with negative circuit values).
ValMat gen_valmat(Rng& rng, int n, int d);

RadoRep gen_rado_rep(Rng& rng, int nv, int nw, int nu);
/// Representation with layer >= 1 (rank identity holds).
RMinorRep gen_rminor_rep(Rng& rng, int nv, int nw, int nu);

/// Valid vgm: weighted rank functions composed with merge/endow.
VGM gen_vgm(Rng& rng, int n);

GenMatroid gen_genmatroid(Rng& rng, int n);
RNatRep gen_rnat_rep(Rng& rng, int nv, int nw, int nu);

Puiseux gen_puiseux(Rng& rng, int max_terms, bool force_positive);
/// Nonnegative matrix of Puiseux scalars (zero with the given percent).
std::vector<std::vector<Puiseux>> gen_puiseux_matrix(Rng& rng, int rows, int cols, int zero_percent);
/// Polynomial with M-convex support and positive coefficients; multi-affine
/// supports come from matroid bases, general ones from Minkowski sums.
TropPoly gen_troppoly(Rng& rng, int vars, int degree, bool multiaffine);

}  // namespace valmat
