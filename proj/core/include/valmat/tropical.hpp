#pragma once

#include <map>
#include <string>
#include <vector>

#include "valmat/rational.hpp"
#include "valmat/valfn.hpp"

namespace valmat {

/// Toy Puiseux scalar: a finite formal sum of terms c * t^e with exact
/// rational coefficients and exponents, kept sorted by descending
/// exponent. The empty sum is zero; deg(zero) = -infinity.
class Puiseux {
 public:
  Puiseux() = default;
  static Puiseux zero() { return Puiseux(); }
  static Puiseux constant(const Rat& c) { return monomial(c, 0); }
  static Puiseux monomial(const Rat& coeff, const Rat& exponent);

  bool is_zero() const { return terms_.empty(); }
  /// Leading coefficient strictly positive.
  bool positive() const { return !terms_.empty() && terms_.front().first > 0; }
  /// Zero or positive.
  bool nonnegative() const { return terms_.empty() || positive(); }

  ExtRat deg() const {
    return terms_.empty() ? ExtRat::neg_inf() : ExtRat(terms_.front().second);
  }

  friend Puiseux operator+(const Puiseux& a, const Puiseux& b);
  friend Puiseux operator*(const Puiseux& a, const Puiseux& b);
  Puiseux& operator+=(const Puiseux& o) { return *this = *this + o; }

  bool operator==(const Puiseux& o) const { return terms_ == o.terms_; }

  /// Text form like "3t^2+1t^1"; zero prints as "0".
  std::string to_string() const;
  static Puiseux parse(const std::string& text);

  const std::vector<std::pair<Rat, Rat>>& terms() const { return terms_; }

 private:
  std::vector<std::pair<Rat, Rat>> terms_;  // (coefficient, exponent), exponent descending
};

/// Exponent vector of a monomial.
using ExpVec = std::vector<int>;

int expvec_degree(const ExpVec& a);
bool expvec_multiaffine(const ExpVec& a);
ElemSet expvec_support(const ExpVec& a);

/// All lattice points of the simplex {a >= 0 : sum a_i = d} on k
/// coordinates.
std::vector<ExpVec> simplex_points(int k, int d);

/// M-convexity of a set of exponent vectors (vector exchange axiom).
bool is_mconvex(const std::vector<ExpVec>& b);

/// Homogeneous polynomial of degree d in k variables over Puiseux
/// scalars, stored sparsely by exponent vector.
class TropPoly {
 public:
  TropPoly(int vars, int degree) : vars_(vars), degree_(degree) {}

  int vars() const { return vars_; }
  int degree() const { return degree_; }

  void set(const ExpVec& a, Puiseux c);
  Puiseux at(const ExpVec& a) const;
  const std::map<ExpVec, Puiseux>& coeffs() const { return coeffs_; }

  bool multiaffine() const;
  bool nonneg_coeffs() const;

  bool operator==(const TropPoly& o) const {
    return vars_ == o.vars_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
  }

 private:
  int vars_, degree_;
  std::map<ExpVec, Puiseux> coeffs_;
};

/// M-concave function candidate on simplex points (absent = -infinity);
/// the carrier of tropicalizations.
struct DiscreteFn {
  int vars = 0;
  int degree = 0;
  std::map<ExpVec, Rat> values;

  ExtRat at(const ExpVec& a) const {
    auto it = values.find(a);
    return it == values.end() ? ExtRat::neg_inf() : ExtRat(it->second);
  }
  bool operator==(const DiscreteFn& o) const {
    return vars == o.vars && degree == o.degree && values == o.values;
  }
};

/// trop(p)(a) = deg(c_a).
DiscreteFn tropicalize(const TropPoly& p);

/// Restriction of a multi-affine discrete function to a valuated matroid
/// table on 0/1 vectors.
ValMat discrete_to_valmat(const DiscreteFn& f);

/// Generating function q_B = sum over B of w^a / a!; input must be
/// M-convex (std::invalid_argument otherwise).
TropPoly generating_function(int vars, const std::vector<ExpVec>& mconvex_set);

/// (A act p)(v) = p(Av) by exact symbolic expansion; A is vars(p) x k
/// with nonnegative Puiseux entries. Expansion is capped at 10^6 terms.
TropPoly matrix_action(const std::vector<std::vector<Puiseux>>& a, const TropPoly& p);

/// Multi-affine part: terms with degree at most one in each variable.
TropPoly map_part(const TropPoly& p);

/// Deletion: set variable i to zero (drop monomials containing it).
TropPoly poly_delete(const TropPoly& p, int i);
/// Contraction: partial derivative with respect to variable i.
TropPoly poly_contract(const TropPoly& p, int i);

/// Transformation by the complete weighted graph deg(A): the brute-force
/// degree-matching maximum over row/column-sum matrices; the oracle side of the
/// commutation checks.
DiscreteFn transform_by_graph(const std::vector<std::vector<ExtRat>>& edge_deg, const DiscreteFn& g, int out_vars);

struct CommutationReport {
  bool multiaffine_checked = false;
  bool full_checked = false;
  std::vector<std::string> diffs;
  bool ok() const { return diffs.empty(); }
};

/// Checks trop(MAP(A act q)) against bipartite induction of trop(q)
/// (multi-affine case) and trop(A act q) against the subgraph
/// transformation (general case).
CommutationReport check_commutation(const std::vector<std::vector<Puiseux>>& a, const TropPoly& q);

}  // namespace valmat
