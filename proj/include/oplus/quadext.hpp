#pragma once

#include <optional>

#include "oplus/exact.hpp"

namespace oplus {

/// Element p + q*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d is a squarefree integer >= 2 and is fixed per value; arithmetic
/// between elements of different fields throws std::domain_error.
/// Values with q == 0 are legal (they are rationals carried along in the
/// field); use is_rational()/rational_value() to collapse them at module
/// boundaries.
class QuadExt {
 public:
  QuadExt(Rational p, Rational q, Int d);
  QuadExt(Rational p, Int d);  // the rational p embedded in Q(sqrt(d))

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Int& d() const { return d_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }
  const Rational& rational_value() const;  // throws unless is_rational()

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x);
  friend bool operator==(const QuadExt& x, const QuadExt& y);

 private:
  Rational p_, q_;
  Int d_;
};

QuadExt operator+(const QuadExt& x, const Rational& y);
QuadExt operator-(const QuadExt& x, const Rational& y);
QuadExt operator*(const QuadExt& x, const Rational& y);
QuadExt operator/(const QuadExt& x, const Rational& y);
QuadExt operator*(const Rational& x, const QuadExt& y);

/// p - q*sqrt(d)
QuadExt conj(const QuadExt& z);

/// N(z) = z * conj(z) = p^2 - d*q^2, a rational.
Rational norm(const QuadExt& z);

/// z^m by repeated squaring, m >= 0.
QuadExt pow(const QuadExt& z, unsigned long m);

/// Multiplicative inverse conj(z)/N(z); throws std::domain_error for zero.
QuadExt inverse(const QuadExt& z);

}  // namespace oplus
