#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <ostream>
#include <string>

#include "ualab/errors.hpp"

namespace ualab {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction with non-negative numerator and positive denominator.
/// All probabilities, coincidence ratios and primality values in this
/// library are carried exactly as Rationals; no floating point is used
/// anywhere in results.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  explicit Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    reduce();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    BigInt l = num_ * o.den_;
    BigInt r = o.num_ * den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw DomainError("division by zero rational");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  Rational pow(unsigned e) const {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// "num/den" in lowest terms, e.g. "3/4", "1/1".
  std::string str() const {
    return num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void reduce() {
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace ualab
