#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdio>
#include <string>

#include "semiprob/errors.hpp"

namespace semiprob {

using BigInt = boost::multiprecision::cpp_int;

// Exact non-negative rational, always stored in lowest terms with a positive
// denominator. This is the value type of every probability in the library;
// nothing downstream ever compares probabilities through floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
      throw Error("rational with zero denominator");
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ < 0) {
      throw Error("negative rational; probabilities are non-negative");
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1, 1); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }

  std::string to_string() const {
    return num_.str() + "/" + den_.str();
  }

  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

  // Advisory rendering only; 6 significant digits, never parsed back.
  std::string to_decimal() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", to_double());
    return buf;
  }

 private:
  BigInt num_;
  BigInt den_;
};

}  // namespace semiprob
