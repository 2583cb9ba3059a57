#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace valmat {

/// Exact rational number. All arithmetic in this library is exact;
/// no floating point appears anywhere.
using Rat = mpq_class;

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

/// Extended rational: an exact rational or the distinguished bottom
/// element -infinity. NEG_INF absorbs addition and is the minimum of
/// the order. It is a separate codomain element, not a sentinel value.
class ExtRat {
 public:
  ExtRat() : finite_(false) {}  // -infinity
  ExtRat(Rat v) : finite_(true), value_(std::move(v)) {}
  ExtRat(long v) : finite_(true), value_(v) {}
  ExtRat(int v) : finite_(true), value_(v) {}

  static ExtRat neg_inf() { return ExtRat(); }

  bool finite() const { return finite_; }
  const Rat& value() const {
    if (!finite_) throw std::domain_error("value() on -infinity");
    return value_;
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (!a.finite_ || !b.finite_) return neg_inf();
    return ExtRat(a.value_ + b.value_);
  }
  ExtRat& operator+=(const ExtRat& o) {
    *this = *this + o;
    return *this;
  }
  friend ExtRat operator-(const ExtRat& a, const Rat& b) {
    if (!a.finite_) return neg_inf();
    return ExtRat(a.value_ - b);
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

  friend const ExtRat& max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

  std::string to_string() const;

 private:
  bool finite_;
  Rat value_;
};

ExtRat extrat_from_string(const std::string& s);

std::ostream& operator<<(std::ostream& os, const ExtRat& v);

}  // namespace valmat
