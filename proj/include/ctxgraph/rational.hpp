#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace ctxgraph {

/// Exact fraction of arbitrary-precision integers, always in lowest terms
/// with a positive denominator.
class Rational {
public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(long long value) : value_(value) {} // NOLINT(google-explicit-constructor)
  Rational(const Integer &num, const Integer &den);

  /// Parses "p/q" or "p".
  static Rational parse(const std::string &text);

  Integer numerator() const;
  Integer denominator() const;

  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }
  double to_double() const;

  /// "p/q"; integers print as "p/1".
  std::string str() const;

  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
  boost::multiprecision::cpp_rational value_;
};

} // namespace ctxgraph
