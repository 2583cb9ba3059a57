#pragma once

#include <map>
#include <optional>
#include <vector>

#include "valmat/matroid.hpp"
#include "valmat/rational.hpp"

namespace valmat {

/// A valuated matroid: a function from d-subsets of {0..n-1} to the
/// extended rationals, stored sparsely (absent set = -infinity).
/// Constructors normalize by dropping explicit -infinity entries, so
/// equality of tables is equality of functions.
class ValMat {
 public:
  ValMat(int n, int d) : n_(n), d_(d) {
    if (n < 0 || n > ElemSet::kMaxGround || d < 0) throw std::invalid_argument("bad valuated matroid arity");
  }

  /// Trivially valuated matroid: 0 on bases, -infinity elsewhere.
  static ValMat trivial(const Matroid& m);

  /// Free valuated matroid on w elements: value 0 on the full set only.
  static ValMat free_valmat(int w);

  int ground_size() const { return n_; }
  int layer() const { return d_; }

  ExtRat operator()(ElemSet x) const {
    auto it = table_.find(x);
    return it == table_.end() ? ExtRat::neg_inf() : ExtRat(it->second);
  }

  /// Sets f(x) = v; a -infinity v erases the entry. x must be a d-subset.
  void set(ElemSet x, const ExtRat& v);

  const std::map<ElemSet, Rat>& entries() const { return table_; }
  bool dom_empty() const { return table_.empty(); }
  std::vector<ElemSet> dom() const;
  /// The matroid formed by dom(f); throws std::domain_error when dom is empty.
  Matroid dom_matroid() const;

  bool operator==(const ValMat& o) const { return n_ == o.n_ && d_ == o.d_ && table_ == o.table_; }

 private:
  int n_, d_;
  std::map<ElemSet, Rat> table_;
};

struct ValuatedWitness {
  ElemSet x, y;
  int i = -1;
  std::string to_string() const;
};

struct ValuatedCheck {
  bool ok = true;
  std::optional<ValuatedWitness> witness;
};

/// Exhaustively checks the valuated exchange axiom:
///   f(X) + f(Y) <= max_{j in Y\X} f(X - i + j) + f(Y + i - j)
/// for all finite X, Y and i in X\Y. Capacity bound n <= 14.
ValuatedCheck check_valuated(const ValMat& f);

/// Deletion f \ Y: restriction to V\Y (reindexed) when V\Y has full rank
/// in dom(f); the all -infinity function of the same rank otherwise.
ValMat deletion(const ValMat& f, ElemSet y);

/// Contraction f / Y: (f/Y)(X) = f(X u Y) on (d-|Y|)-subsets of V\Y
/// (reindexed) when Y is independent in dom(f); all -infinity otherwise.
ValMat contraction(const ValMat& f, ElemSet y);

/// Dual: f*(X) = f(V \ X) on (n-d)-subsets.
ValMat dual(const ValMat& f);

/// Truncation: f^(1)(X) = max_{v not in X} f(X + v); requires d >= 1.
ValMat truncation(const ValMat& f);

/// Principal extension by weight vector w (one entry per ground element):
/// adds element p = n with f^w(X + p) = max_v (f(X + v) + w_v).
ValMat principal_extension(const ValMat& f, const std::vector<ExtRat>& w);

/// Direct sum on disjoint (reindexed) ground sets.
ValMat direct_sum(const ValMat& f1, const ValMat& f2);

/// Valuated matroid union on a common ground set:
///   (f1 v f2)(X) = max{ f1(Y) + f2(X\Y) : |Y| = d1, |X\Y| = d2 }.
ValMat valuated_union(const ValMat& f1, const ValMat& f2);

}  // namespace valmat
