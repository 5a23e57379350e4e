#include "ctxgraph/rational.hpp"

#include "ctxgraph/error.hpp"

namespace ctxgraph {

Rational::Rational(const Integer &num, const Integer &den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  // Boost rejects a negative denominator, so move the sign up first.
  value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                   : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(const std::string &text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text), Integer(1));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::runtime_error &) {
    throw InvalidInput("bad rational '" + text + "'");
  }
}

Rational::Integer Rational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

Rational::Integer Rational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::str() const { return numerator().str() + "/" + denominator().str(); }

Rational &Rational::operator/=(const Rational &o) {
  if (o.value_ == 0) throw InvalidParameter("division by zero rational");
  value_ /= o.value_;
  return *this;
}

} // namespace ctxgraph
