#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "valmat/elemset.hpp"

namespace valmat {

namespace detail {
class MatroidBackend;
}

/// A matroid over the ground set {0..n-1}, queried through its rank
/// function. Values are immutable after construction; rank memoization
/// is internally synchronized, so all operations are safe to call
/// concurrently.
class Matroid {
 public:
  static Matroid uniform(int n, int r);
  static Matroid free_matroid(int n) { return uniform(n, n); }
  static Matroid rank_zero(int n) { return uniform(n, 0); }
  /// Blocks must be pairwise disjoint; elements outside every block are loops.
  static Matroid partition(int n, const std::vector<ElemSet>& blocks, const std::vector<int>& capacities);
  /// Explicit basis family; must be nonempty and equicardinal.
  static Matroid from_bases(int n, std::vector<ElemSet> bases);
  /// Matroid defined by an arbitrary rank oracle (memoized).
  static Matroid from_oracle(int n, std::function<int(ElemSet)> rank_fn);

  int ground_size() const;
  ElemSet ground() const { return ElemSet::full(ground_size()); }

  /// Matroid rank of s. Throws std::out_of_range if s contains ids >= n.
  int rank(ElemSet s) const;
  int rank() const { return rank(ground()); }

  bool is_independent(ElemSet s) const { return rank(s) == s.size(); }
  bool is_basis(ElemSet s) const { return s.size() == rank() && is_independent(s); }

  /// cl(s) = {x : r(s + x) = r(s)}.
  ElemSet closure(ElemSet s) const;

  /// Enumerates all bases. Capacity error for ground sets beyond the
  /// exhaustive bound (default 20, override with VALMAT_CAPACITY).
  std::vector<ElemSet> bases() const;

  /// Dual matroid: bases are complements of bases.
  Matroid dual() const;

  /// Restriction to `keep`, ground set reindexed order-preservingly.
  Matroid restriction(ElemSet keep) const;

  /// Deletes `del`, contracts `contract` (must be independent and disjoint
  /// from del); remaining elements are reindexed order-preservingly.
  Matroid minor(ElemSet del, ElemSet contract) const;

  /// Truncation to rank k (0 <= k <= rank()).
  Matroid truncate_to(int k) const;

  bool operator==(const Matroid& o) const;  // basis-family equality

 private:
  explicit Matroid(std::shared_ptr<const detail::MatroidBackend> b) : backend_(std::move(b)) {}
  std::shared_ptr<const detail::MatroidBackend> backend_;

  friend Matroid direct_sum(const Matroid& a, const Matroid& b);
  friend Matroid matroid_union(const Matroid& a, const Matroid& b);
  friend Matroid sparse_paving_from_circuits(int n, int d, const std::vector<ElemSet>& circuits);
};

/// Ground sets are treated as disjoint: b's elements are reindexed after a's.
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Matroid union on a common ground set; rank by the min-formula
/// min{ r1(Z) + r2(Z) + |X \ Z| : Z subseteq X }, evaluated exhaustively.
Matroid matroid_union(const Matroid& a, const Matroid& b);

/// Sparse paving matroid of rank d: bases are all d-subsets except the
/// listed circuits. Circuits must have size d and pairwise intersections
/// of size at most d-2; otherwise std::invalid_argument.
Matroid sparse_paving_from_circuits(int n, int d, const std::vector<ElemSet>& circuits);

struct ExchangeWitness {
  ElemSet x, y;
  int i = -1;
  std::string to_string() const;
};

struct ExchangeCheck {
  bool ok = true;
  std::optional<ExchangeWitness> witness;
};

/// Exhaustively verifies the basis exchange axiom on the basis family.
/// Capacity error for ground sets larger than 14 (VALMAT_CAPACITY overrides).
ExchangeCheck check_basis_exchange(const Matroid& m);

/// Exchange check on a raw family (no equicardinality requirement needed;
/// used to vet candidate basis families before building a matroid).
ExchangeCheck check_basis_exchange(int n, const std::vector<ElemSet>& family);

}  // namespace valmat
