#include "valmat/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace valmat {

namespace detail {

class MatroidBackend {
 public:
  explicit MatroidBackend(int n) : n_(n) {
    if (n < 0 || n > ElemSet::kMaxGround) throw std::invalid_argument("ground set size out of range");
  }
  virtual ~MatroidBackend() = default;

  int ground_size() const { return n_; }

  int rank_checked(ElemSet s) const {
    if (!s.subset_of(ElemSet::full(n_))) throw std::out_of_range("set not contained in ground set");
    return rank(s);
  }

  virtual int rank(ElemSet s) const = 0;

  // Explicit basis list when the backend stores one.
  virtual const std::vector<ElemSet>* stored_bases() const { return nullptr; }

 private:
  int n_;
};

namespace {

class UniformBackend : public MatroidBackend {
 public:
  UniformBackend(int n, int r) : MatroidBackend(n), r_(r) {
    if (r < 0 || r > n) throw std::invalid_argument("uniform matroid rank out of range");
  }
  int rank(ElemSet s) const override { return std::min(s.size(), r_); }

 private:
  int r_;
};

class PartitionBackend : public MatroidBackend {
 public:
  PartitionBackend(int n, std::vector<ElemSet> blocks, std::vector<int> caps)
      : MatroidBackend(n), blocks_(std::move(blocks)), caps_(std::move(caps)) {
    if (blocks_.size() != caps_.size()) throw std::invalid_argument("blocks/capacities size mismatch");
    ElemSet seen;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (!blocks_[i].subset_of(ElemSet::full(n))) throw std::invalid_argument("block outside ground set");
      if (seen.intersects(blocks_[i])) throw std::invalid_argument("partition blocks overlap");
      if (caps_[i] < 0) throw std::invalid_argument("negative capacity");
      seen = seen | blocks_[i];
    }
  }
  int rank(ElemSet s) const override {
    int r = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) r += std::min((s & blocks_[i]).size(), caps_[i]);
    return r;
  }

 private:
  std::vector<ElemSet> blocks_;
  std::vector<int> caps_;
};

class ExplicitBackend : public MatroidBackend {
 public:
  ExplicitBackend(int n, std::vector<ElemSet> bases) : MatroidBackend(n), bases_(std::move(bases)) {
    if (bases_.empty()) throw std::invalid_argument("explicit basis family must be nonempty");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    int d = bases_[0].size();
    for (ElemSet b : bases_) {
      if (b.size() != d) throw std::invalid_argument("basis family not equicardinal");
      if (!b.subset_of(ElemSet::full(n))) throw std::invalid_argument("basis outside ground set");
    }
  }

  // r(S) = max over bases of |B & S|.
  int rank(ElemSet s) const override {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(s.bits());
      if (it != memo_.end()) return it->second;
    }
    int best = 0;
    for (ElemSet b : bases_) best = std::max(best, (b & s).size());
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(s.bits(), best);
    return best;
  }

  const std::vector<ElemSet>* stored_bases() const override { return &bases_; }

 private:
  std::vector<ElemSet> bases_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, int> memo_;
};

class SparsePavingBackend : public MatroidBackend {
 public:
  SparsePavingBackend(int n, int d, std::vector<ElemSet> circuits)
      : MatroidBackend(n), d_(d), circuits_(std::move(circuits)) {
    std::sort(circuits_.begin(), circuits_.end());
  }
  int rank(ElemSet s) const override {
    int k = s.size();
    if (k < d_) return k;
    if (k == d_) return std::binary_search(circuits_.begin(), circuits_.end(), s) ? d_ - 1 : d_;
    return d_;
  }

 private:
  int d_;
  std::vector<ElemSet> circuits_;
};

class DualBackend : public MatroidBackend {
 public:
  explicit DualBackend(Matroid primal) : MatroidBackend(primal.ground_size()), primal_(std::move(primal)) {}
  int rank(ElemSet s) const override {
    return s.size() + primal_.rank(primal_.ground() - s) - primal_.rank();
  }

 private:
  Matroid primal_;
};

class DirectSumBackend : public MatroidBackend {
 public:
  DirectSumBackend(Matroid a, Matroid b)
      : MatroidBackend(a.ground_size() + b.ground_size()), a_(std::move(a)), b_(std::move(b)) {}
  int rank(ElemSet s) const override {
    int n1 = a_.ground_size();
    ElemSet s1 = s & ElemSet::full(n1);
    ElemSet s2(s.bits() >> n1);
    return a_.rank(s1) + b_.rank(s2);
  }

 private:
  Matroid a_, b_;
};

class UnionBackend : public MatroidBackend {
 public:
  UnionBackend(Matroid a, Matroid b) : MatroidBackend(a.ground_size()), a_(std::move(a)), b_(std::move(b)) {
    if (a_.ground_size() != b_.ground_size()) throw std::invalid_argument("matroid union requires a common ground set");
  }
  int rank(ElemSet s) const override {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(s.bits());
      if (it != memo_.end()) return it->second;
    }
    if (s.size() > capacity_bound(20))
      throw capacity_error("union rank minimization over " + std::to_string(s.size()) + " elements exceeds bound");
    int best = -1;
    for_each_subset(s, [&](ElemSet z) {
      int v = a_.rank(z) + b_.rank(z) + (s - z).size();
      if (best < 0 || v < best) best = v;
    });
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(s.bits(), best);
    return best;
  }

 private:
  Matroid a_, b_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, int> memo_;
};

class MinorBackend : public MatroidBackend {
 public:
  MinorBackend(Matroid parent, std::vector<int> kept, ElemSet contracted)
      : MatroidBackend(static_cast<int>(kept.size())),
        parent_(std::move(parent)),
        kept_(std::move(kept)),
        contracted_(contracted),
        contracted_rank_(parent_.rank(contracted)) {}
  int rank(ElemSet s) const override {
    ElemSet orig;
    for (int e : s) orig.insert(kept_[e]);
    return parent_.rank(orig | contracted_) - contracted_rank_;
  }

 private:
  Matroid parent_;
  std::vector<int> kept_;
  ElemSet contracted_;
  int contracted_rank_;
};

class TruncationBackend : public MatroidBackend {
 public:
  TruncationBackend(Matroid parent, int k) : MatroidBackend(parent.ground_size()), parent_(std::move(parent)), k_(k) {}
  int rank(ElemSet s) const override { return std::min(parent_.rank(s), k_); }

 private:
  Matroid parent_;
  int k_;
};

class OracleBackend : public MatroidBackend {
 public:
  OracleBackend(int n, std::function<int(ElemSet)> fn) : MatroidBackend(n), fn_(std::move(fn)) {}
  int rank(ElemSet s) const override {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(s.bits());
      if (it != memo_.end()) return it->second;
    }
    int v = fn_(s);
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(s.bits(), v);
    return v;
  }

 private:
  std::function<int(ElemSet)> fn_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace
}  // namespace detail

using detail::MatroidBackend;

Matroid Matroid::uniform(int n, int r) { return Matroid(std::make_shared<detail::UniformBackend>(n, r)); }

Matroid Matroid::partition(int n, const std::vector<ElemSet>& blocks, const std::vector<int>& capacities) {
  return Matroid(std::make_shared<detail::PartitionBackend>(n, blocks, capacities));
}

Matroid Matroid::from_bases(int n, std::vector<ElemSet> bases) {
  return Matroid(std::make_shared<detail::ExplicitBackend>(n, std::move(bases)));
}

Matroid Matroid::from_oracle(int n, std::function<int(ElemSet)> rank_fn) {
  return Matroid(std::make_shared<detail::OracleBackend>(n, std::move(rank_fn)));
}

int Matroid::ground_size() const { return backend_->ground_size(); }

int Matroid::rank(ElemSet s) const { return backend_->rank_checked(s); }

ElemSet Matroid::closure(ElemSet s) const {
  int rs = rank(s);
  ElemSet cl = s;
  for (int x : ground() - s)
    if (rank(s.with(x)) == rs) cl.insert(x);
  return cl;
}

std::vector<ElemSet> Matroid::bases() const {
  if (const auto* stored = backend_->stored_bases()) return *stored;
  int n = ground_size();
  if (n > capacity_bound(20))
    throw capacity_error("basis enumeration on " + std::to_string(n) + " elements exceeds bound");
  int r = rank();
  std::vector<ElemSet> out;
  for_each_subset_of_size(ground(), r, [&](ElemSet s) {
    if (rank(s) == r) out.push_back(s);
  });
  std::sort(out.begin(), out.end());  // canonical order, comparable across backends
  return out;
}

Matroid Matroid::dual() const { return Matroid(std::make_shared<detail::DualBackend>(*this)); }

Matroid Matroid::restriction(ElemSet keep) const { return minor(ground() - keep, ElemSet()); }

Matroid Matroid::minor(ElemSet del, ElemSet contract) const {
  if (!del.subset_of(ground()) || !contract.subset_of(ground())) throw std::out_of_range("minor arguments outside ground set");
  if (del.intersects(contract)) throw std::invalid_argument("delete and contract sets must be disjoint");
  if (!is_independent(contract)) throw std::domain_error("contract set is dependent");
  std::vector<int> kept = (ground() - del - contract).to_vector();
  return Matroid(std::make_shared<detail::MinorBackend>(*this, std::move(kept), contract));
}

Matroid Matroid::truncate_to(int k) const {
  if (k < 0 || k > rank()) throw std::invalid_argument("truncation rank out of range");
  return Matroid(std::make_shared<detail::TruncationBackend>(*this, k));
}

bool Matroid::operator==(const Matroid& o) const {
  if (ground_size() != o.ground_size()) return false;
  return bases() == o.bases();
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  return Matroid(std::make_shared<detail::DirectSumBackend>(a, b));
}

Matroid matroid_union(const Matroid& a, const Matroid& b) {
  return Matroid(std::make_shared<detail::UnionBackend>(a, b));
}

Matroid sparse_paving_from_circuits(int n, int d, const std::vector<ElemSet>& circuits) {
  if (d < 0 || d > n) throw std::invalid_argument("sparse paving rank out of range");
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (circuits[i].size() != d) throw std::invalid_argument("circuit " + circuits[i].to_string() + " does not have size d");
    if (!circuits[i].subset_of(ElemSet::full(n))) throw std::out_of_range("circuit outside ground set");
    for (std::size_t j = i + 1; j < circuits.size(); ++j)
      if ((circuits[i] & circuits[j]).size() > d - 2)
        throw std::invalid_argument("circuits " + circuits[i].to_string() + " and " + circuits[j].to_string() +
                                    " intersect in more than d-2 elements");
  }
  if (binomial(n, d) == static_cast<long long>(circuits.size()))
    throw std::invalid_argument("every d-subset is a circuit; basis family empty");
  return Matroid(std::make_shared<detail::SparsePavingBackend>(n, d, circuits));
}

std::string ExchangeWitness::to_string() const {
  return "X=" + x.to_string() + " Y=" + y.to_string() + " i=" + std::to_string(i);
}

ExchangeCheck check_basis_exchange(int n, const std::vector<ElemSet>& family) {
  std::vector<ElemSet> sorted = family;
  std::sort(sorted.begin(), sorted.end());
  auto is_member = [&](ElemSet s) { return std::binary_search(sorted.begin(), sorted.end(), s); };
  for (ElemSet x : sorted)
    for (ElemSet y : sorted)
      for (int i : x - y) {
        bool found = false;
        for (int j : y - x)
          if (is_member(x.without(i).with(j))) {
            found = true;
            break;
          }
        if (!found) return {false, ExchangeWitness{x, y, i}};
      }
  return {true, std::nullopt};
}

ExchangeCheck check_basis_exchange(const Matroid& m) {
  if (m.ground_size() > capacity_bound(14))
    throw capacity_error("basis exchange check on " + std::to_string(m.ground_size()) + " elements exceeds bound");
  return check_basis_exchange(m.ground_size(), m.bases());
}

}  // namespace valmat
