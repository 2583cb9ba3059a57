#include "valmat/valfn.hpp"

#include <algorithm>

namespace valmat {

namespace {

// Order-preserving reindexing of subsets of `kept` onto {0..|kept|-1}.
ElemSet reindex(ElemSet s, const std::vector<int>& kept) {
  ElemSet out;
  for (int i = 0; i < static_cast<int>(kept.size()); ++i)
    if (s.contains(kept[i])) out.insert(i);
  return out;
}

}  // namespace

ValMat ValMat::trivial(const Matroid& m) {
  ValMat f(m.ground_size(), m.rank());
  for (ElemSet b : m.bases()) f.set(b, ExtRat(0));
  return f;
}

ValMat ValMat::free_valmat(int w) {
  ValMat f(w, w);
  f.set(ElemSet::full(w), ExtRat(0));
  return f;
}

void ValMat::set(ElemSet x, const ExtRat& v) {
  if (!x.subset_of(ElemSet::full(n_))) throw std::out_of_range("set outside ground set");
  if (x.size() != d_) throw std::invalid_argument("entry is not a d-subset");
  if (v.finite())
    table_[x] = v.value();
  else
    table_.erase(x);
}

std::vector<ElemSet> ValMat::dom() const {
  std::vector<ElemSet> out;
  out.reserve(table_.size());
  for (const auto& [s, v] : table_) out.push_back(s);
  return out;
}

Matroid ValMat::dom_matroid() const {
  if (table_.empty()) throw std::domain_error("effective domain is empty");
  return Matroid::from_bases(n_, dom());
}

std::string ValuatedWitness::to_string() const {
  return "X=" + x.to_string() + " Y=" + y.to_string() + " i=" + std::to_string(i);
}

ValuatedCheck check_valuated(const ValMat& f) {
  if (f.ground_size() > capacity_bound(14))
    throw capacity_error("valuated axiom check on " + std::to_string(f.ground_size()) + " elements exceeds bound");
  for (const auto& [x, fx] : f.entries())
    for (const auto& [y, fy] : f.entries()) {
      if (x == y) continue;
      ExtRat lhs = ExtRat(fx) + ExtRat(fy);
      for (int i : x - y) {
        bool ok = false;
        for (int j : y - x) {
          ExtRat rhs = f(x.without(i).with(j)) + f(y.with(i).without(j));
          if (lhs <= rhs) {
            ok = true;
            break;
          }
        }
        if (!ok) return {false, ValuatedWitness{x, y, i}};
      }
    }
  return {true, std::nullopt};
}

ValMat deletion(const ValMat& f, ElemSet y) {
  ElemSet ground = ElemSet::full(f.ground_size());
  if (!y.subset_of(ground)) throw std::out_of_range("deletion set outside ground set");
  std::vector<int> kept = (ground - y).to_vector();
  ValMat out(static_cast<int>(kept.size()), f.layer());
  bool full_rank = false;
  for (const auto& [b, v] : f.entries())
    if (!b.intersects(y)) full_rank = true;
  if (!full_rank) return out;  // remainder does not span: all -infinity
  for (const auto& [b, v] : f.entries())
    if (!b.intersects(y)) out.set(reindex(b, kept), ExtRat(v));
  return out;
}

ValMat contraction(const ValMat& f, ElemSet y) {
  ElemSet ground = ElemSet::full(f.ground_size());
  if (!y.subset_of(ground)) throw std::out_of_range("contraction set outside ground set");
  std::vector<int> kept = (ground - y).to_vector();
  // Fallback arity: d - |Y| when meaningful, else 0 (only reachable when Y
  // is dependent, where the result is all -infinity anyway).
  int d_out = std::max(f.layer() - y.size(), 0);
  ValMat out(static_cast<int>(kept.size()), d_out);
  bool independent = false;
  for (const auto& [b, v] : f.entries())
    if (y.subset_of(b)) independent = true;
  if (!independent) return out;  // dependent contraction set: all -infinity
  for (const auto& [b, v] : f.entries())
    if (y.subset_of(b)) out.set(reindex(b - y, kept), ExtRat(v));
  return out;
}

ValMat dual(const ValMat& f) {
  if (f.layer() > f.ground_size()) throw std::domain_error("dual undefined when the arity exceeds the ground set");
  ElemSet ground = ElemSet::full(f.ground_size());
  ValMat out(f.ground_size(), f.ground_size() - f.layer());
  for (const auto& [b, v] : f.entries()) out.set(ground - b, ExtRat(v));
  return out;
}

ValMat truncation(const ValMat& f) {
  if (f.layer() < 1) throw std::domain_error("truncation requires rank >= 1");
  ValMat out(f.ground_size(), f.layer() - 1);
  for (const auto& [b, v] : f.entries())
    for (int i : b) {
      ElemSet x = b.without(i);
      out.set(x, max(out(x), ExtRat(v)));
    }
  return out;
}

ValMat principal_extension(const ValMat& f, const std::vector<ExtRat>& w) {
  if (static_cast<int>(w.size()) != f.ground_size()) throw std::invalid_argument("weight vector arity mismatch");
  int n = f.ground_size();
  int p = n;
  ValMat out(n + 1, f.layer());
  for (const auto& [b, v] : f.entries()) {
    out.set(b, ExtRat(v));
    for (int i : b) {
      if (!w[i].finite()) continue;
      ElemSet x = b.without(i).with(p);
      out.set(x, max(out(x), ExtRat(v) + w[i]));
    }
  }
  return out;
}

ValMat direct_sum(const ValMat& f1, const ValMat& f2) {
  int n1 = f1.ground_size();
  ValMat out(n1 + f2.ground_size(), f1.layer() + f2.layer());
  for (const auto& [b1, v1] : f1.entries())
    for (const auto& [b2, v2] : f2.entries()) out.set(ElemSet(b1.bits() | (b2.bits() << n1)), ExtRat(v1 + v2));
  return out;
}

ValMat valuated_union(const ValMat& f1, const ValMat& f2) {
  if (f1.ground_size() != f2.ground_size()) throw std::invalid_argument("valuated union requires a common ground set");
  ValMat out(f1.ground_size(), f1.layer() + f2.layer());
  for (const auto& [b1, v1] : f1.entries())
    for (const auto& [b2, v2] : f2.entries()) {
      if (b1.intersects(b2)) continue;
      ElemSet x = b1 | b2;
      out.set(x, max(out(x), ExtRat(v1 + v2)));
    }
  return out;
}

}  // namespace valmat
