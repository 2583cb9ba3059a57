#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace valmat {

/// Error raised when an exhaustive operation exceeds its documented bound.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Subset of a ground set {0, ..., n-1} with n <= 64, stored as a bitmask.
/// All ground sets in this library are 0-indexed integer ranges.
class ElemSet {
 public:
  static constexpr int kMaxGround = 64;

  constexpr ElemSet() : bits_(0) {}
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}
  ElemSet(std::initializer_list<int> elems) : bits_(0) {
    for (int e : elems) insert(e);
  }

  static ElemSet full(int n) {
    check_index(n == 0 ? 0 : n - 1);
    return n == 0 ? ElemSet() : ElemSet(n == 64 ? ~0ull : ((1ull << n) - 1));
  }
  static ElemSet single(int e) {
    check_index(e);
    return ElemSet(1ull << e);
  }
  static ElemSet from_vector(const std::vector<int>& v) {
    ElemSet s;
    for (int e : v) s.insert(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int e) const { return e >= 0 && e < 64 && (bits_ >> e) & 1; }
  bool subset_of(ElemSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(ElemSet o) const { return (bits_ & o.bits_) != 0; }

  void insert(int e) {
    check_index(e);
    bits_ |= 1ull << e;
  }
  void erase(int e) {
    check_index(e);
    bits_ &= ~(1ull << e);
  }
  ElemSet with(int e) const {
    ElemSet s = *this;
    s.insert(e);
    return s;
  }
  ElemSet without(int e) const {
    ElemSet s = *this;
    s.erase(e);
    return s;
  }

  friend ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits_ | b.bits_); }
  friend ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & b.bits_); }
  friend ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & ~b.bits_); }
  friend ElemSet operator^(ElemSet a, ElemSet b) { return ElemSet(a.bits_ ^ b.bits_); }

  auto operator<=>(const ElemSet&) const = default;

  int min_element() const { return bits_ ? std::countr_zero(bits_) : -1; }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) v.push_back(std::countr_zero(b));
    return v;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : to_vector()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  /// Iterates the elements (ascending).
  class iterator {
   public:
    explicit iterator(std::uint64_t bits) : bits_(bits) {}
    int operator*() const { return std::countr_zero(bits_); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

   private:
    std::uint64_t bits_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  static void check_index(int e) {
    if (e < 0 || e >= kMaxGround) throw std::out_of_range("element index out of range: " + std::to_string(e));
  }
  std::uint64_t bits_;
};

/// Calls fn(S) for every subset S of `ground`.
template <typename Fn>
void for_each_subset(ElemSet ground, Fn&& fn) {
  std::uint64_t g = ground.bits();
  std::uint64_t s = 0;
  while (true) {
    fn(ElemSet(s));
    if (s == g) break;
    s = (s - g) & g;  // next subset of g
  }
}

/// Calls fn(S) for every k-subset of `ground`, in ascending mask order.
template <typename Fn>
void for_each_subset_of_size(ElemSet ground, int k, Fn&& fn) {
  if (k < 0 || k > ground.size()) return;
  std::vector<int> elems = ground.to_vector();
  const int n = static_cast<int>(elems.size());
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ElemSet s;
    for (int i : idx) s.insert(elems[i]);
    fn(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// All k-subsets of {0..n-1}, ascending by mask value.
std::vector<ElemSet> subsets_of_size(int n, int k);

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Exhaustive-search capacity: VALMAT_CAPACITY environment variable
/// overrides the per-call default bound when set to a positive integer.
int capacity_bound(int default_bound);

}  // namespace valmat
