#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace rbs {

using Integer = mpz_class;

// Exact rational scalar, kept in lowest terms with positive denominator.
// Thin wrapper over GMP's mpq_class that enforces canonicalization on every
// construction path (mpq_class itself does not canonicalize constructors).
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}            // NOLINT: implicit by design
  Rational(const Integer& v) : q_(v) {}  // NOLINT: implicit by design
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  // Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
  // malformed input or zero denominator.
  static Rational from_string(const std::string& text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational pow(unsigned long e) const;
  Rational reciprocal() const;

  double to_double() const { return q_.get_d(); }
  // Always emits the explicit "p/q" form, e.g. "115/23", "-3/1", "0/1".
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
  Rational& operator/=(const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.q_ != b.q_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.q_ < b.q_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.q_ <= b.q_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.q_ > b.q_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.q_ >= b.q_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;  // invariant: canonical (lowest terms, denominator > 0)
};

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer int_pow(const Integer& base, unsigned long e);

}  // namespace rbs
