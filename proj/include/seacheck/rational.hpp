#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seacheck {

/// Exact rational on int64, always normalized (den > 0, gcd = 1), so
/// structural equality is value equality. Magnitudes here stay tiny
/// (grid denominators ≤ 24 and a few products of those), far from
/// overflow.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Rational zero() { return {0, 1}; }
  static Rational one() { return {1, 1}; }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return {x.num_ * y.num_, x.den_ * y.den_};
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return x.num_ * y.den_ <=> y.num_ * x.den_;
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  long long num_;
  long long den_;
};

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace seacheck
