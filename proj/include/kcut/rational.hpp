#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kcut {

using Int = mpz_class;

// Arbitrary-precision rational, always kept canonical: denominator > 0 and
// gcd(|numerator|, denominator) == 1. All arithmetic is exact.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(int v) : q_(v) {}
  Rat(long v) : q_(static_cast<signed long>(v)) {}
  Rat(const Int& v) : q_(v) {}
  Rat(long num, long den);
  Rat(const Int& num, const Int& den);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Largest integer <= value, smallest integer >= value.
  Int floor() const;
  Int ceil() const;
  // Fractional part value - floor(value), in [0, 1).
  Rat frac() const;

  Rat operator-() const { Rat r; r.q_ = -q_; return r; }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  std::string str() const;

 private:
  mpq_class q_;
};

Rat abs(const Rat& r);

// Parses "n" or "n/d" with an optional leading minus on n; d is a plain
// digit string. Rejects anything else, including a zero denominator.
Rat parse_rat(std::string_view token);

std::string to_string(const Rat& r);
std::string to_string(const Int& v);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace kcut
