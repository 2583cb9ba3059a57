#include "valmat/family.hpp"

#include <set>

namespace valmat {

ElemSet family_pair(int i) {
  if (i < 1) throw std::invalid_argument("pair index is 1-based");
  return ElemSet{2 * i - 2, 2 * i - 1};
}

std::vector<ElemSet> family_pairs(int n) {
  std::vector<ElemSet> out;
  for (int i = 1; i <= n; ++i) out.push_back(family_pair(i));
  return out;
}

std::vector<ElemSet> family_H(int n) {
  std::vector<ElemSet> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if ((i * j) % 2 == 0) out.push_back(family_pair(i) | family_pair(j));
  return out;
}

ElemSet family_star() { return ElemSet{0, 1, 2, 3}; }

void FamilyParams::validate() const {
  if (n < 2) throw std::invalid_argument("family requires n >= 2");
  if (2 * n > ElemSet::kMaxGround) throw std::invalid_argument("ground set too large");
  if (!(star_value < 0)) throw std::invalid_argument("value at X* must be strictly negative");
  std::vector<ElemSet> h = family_H(n);
  ElemSet star = family_star();
  std::size_t expected = 0;
  for (ElemSet x : h) {
    if (x == star) continue;
    ++expected;
    auto it = values.find(x);
    if (it == values.end()) throw std::invalid_argument("missing value for " + x.to_string());
    const ExtRat& v = it->second;
    if (v.finite() && !(v.value() < 0)) throw std::invalid_argument("value at " + x.to_string() + " must be negative");
    if (!(v < ExtRat(star_value)))
      throw std::invalid_argument("value at X* must be the unique largest value of the family");
  }
  if (values.size() != expected) throw std::invalid_argument("values keyed outside H \\ {X*}");
}

FamilyParams random_family_params(Rng& rng, int n, bool allow_neg_inf) {
  FamilyParams p;
  p.n = n;
  p.star_value = rng.negative_rational();
  ElemSet star = family_star();
  for (ElemSet x : family_H(n)) {
    if (x == star) continue;
    if (allow_neg_inf && rng.coin()) {
      p.values[x] = ExtRat::neg_inf();
      continue;
    }
    // strictly below the star value: subtract a positive rational
    Rat v = p.star_value;
    do {
      v = p.star_value - make_rat(rng.range(1, 1000), rng.range(1, 1000));
    } while (!(v < p.star_value));
    p.values[x] = ExtRat(v);
  }
  return p;
}

ValMat make_Fn(const FamilyParams& p) {
  p.validate();
  ValMat h(2 * p.n, 4);
  ElemSet star = family_star();
  std::set<ElemSet> circuits;
  for (ElemSet c : family_H(p.n)) circuits.insert(c);
  for_each_subset_of_size(ElemSet::full(2 * p.n), 4, [&](ElemSet x) {
    if (x == star) {
      h.set(x, ExtRat(p.star_value));
    } else if (auto it = p.values.find(x); it != p.values.end()) {
      h.set(x, it->second);
    } else if (!circuits.count(x)) {
      h.set(x, ExtRat(0));
    }
  });
  return h;
}

Matroid B0_matroid(int n) { return sparse_paving_from_circuits(2 * n, 4, family_H(n)); }

Matroid B1_matroid(int n, bool star_included) {
  if (!star_included) return B0_matroid(n);
  std::vector<ElemSet> circuits;
  ElemSet star = family_star();
  for (ElemSet x : family_H(n))
    if (x != star) circuits.push_back(x);
  return sparse_paving_from_circuits(2 * n, 4, circuits);
}

VGM make_h_natural(const FamilyParams& p) {
  p.validate();
  for (const auto& [x, v] : p.values)
    if (!v.finite() || v.value() <= -1)
      throw std::invalid_argument("h-natural requires all family values in (-1, 0)");
  if (p.star_value <= -1) throw std::invalid_argument("h-natural requires all family values in (-1, 0)");
  ValMat h = make_Fn(p);
  return VGM::from_function(2 * p.n, [&](ElemSet x) -> ExtRat {
    int k = x.size();
    if (k <= 3) return ExtRat(k);
    if (k == 4) return ExtRat(4) + h(x);
    return ExtRat(4);
  });
}

}  // namespace valmat
