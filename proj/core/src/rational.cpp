#include "valmat/rational.hpp"

#include <cstdlib>
#include <ostream>

#include "valmat/elemset.hpp"

namespace valmat {

Rat rat_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  if (q.get_str() != s) throw std::invalid_argument("rational not in canonical form: " + s);
  return q;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

std::string ExtRat::to_string() const { return finite_ ? rat_to_string(value_) : "-inf"; }

ExtRat extrat_from_string(const std::string& s) {
  if (s == "-inf") return ExtRat::neg_inf();
  return ExtRat(rat_from_string(s));
}

std::ostream& operator<<(std::ostream& os, const ExtRat& v) { return os << v.to_string(); }

std::vector<ElemSet> subsets_of_size(int n, int k) {
  std::vector<ElemSet> out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  for_each_subset_of_size(ElemSet::full(n), k, [&](ElemSet s) { out.push_back(s); });
  return out;
}

int capacity_bound(int default_bound) {
  if (const char* env = std::getenv("VALMAT_CAPACITY")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return default_bound;
}

}  // namespace valmat
