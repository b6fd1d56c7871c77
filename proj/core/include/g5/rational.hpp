#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace g5 {

using Q = boost::multiprecision::cpp_rational;

inline Q frac(long long p, long long q) { return Q(p) / Q(q); }

std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

// Rational extended by -infinity; any sum involving -infinity is -infinity.
class ExtQ {
 public:
  ExtQ() = default;
  ExtQ(const Q& v) : value_(v) {}  // NOLINT
  static ExtQ neg_inf() {
    ExtQ e;
    e.neg_inf_ = true;
    return e;
  }

  bool is_neg_inf() const { return neg_inf_; }
  const Q& value() const { return value_; }

  ExtQ& operator+=(const ExtQ& o) {
    if (neg_inf_ || o.neg_inf_) {
      neg_inf_ = true;
      value_ = 0;
    } else {
      value_ += o.value_;
    }
    return *this;
  }
  friend ExtQ operator+(ExtQ a, const ExtQ& b) { return a += b; }
  friend ExtQ operator-(ExtQ a, const Q& b) {
    if (!a.neg_inf_) a.value_ -= b;
    return a;
  }
  friend bool operator==(const ExtQ& a, const ExtQ& b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
  }
  friend bool operator<(const ExtQ& a, const ExtQ& b) {
    if (a.neg_inf_) return !b.neg_inf_;
    if (b.neg_inf_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtQ& a, const ExtQ& b) { return !(b < a); }
  friend bool operator>=(const ExtQ& a, const ExtQ& b) { return !(a < b); }

  std::string str() const { return neg_inf_ ? "-inf" : to_string(value_); }

 private:
  bool neg_inf_ = false;
  Q value_ = 0;
};

}  // namespace g5
