#include "oplus/quadext.hpp"

#include <stdexcept>

namespace oplus {

namespace {

void check_radicand(const Int& d) {
  if (d < 2) throw std::domain_error("quadratic radicand must be >= 2");
  if (!is_squarefree(d)) throw std::domain_error("quadratic radicand must be squarefree");
}

const Int& common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.d() != y.d())
    throw std::domain_error("mixed radicands in quadratic-field arithmetic");
  return x.d();
}

}  // namespace

QuadExt::QuadExt(Rational p, Rational q, Int d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  check_radicand(d_);
}

QuadExt::QuadExt(Rational p, Int d) : QuadExt(std::move(p), Rational(0), std::move(d)) {}

const Rational& QuadExt::rational_value() const {
  if (!is_rational())
    throw std::domain_error("quadratic element with nonzero radical part");
  return p_;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.p_ + y.p_, x.q_ + y.q_, common_radicand(x, y));
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.p_ - y.p_, x.q_ - y.q_, common_radicand(x, y));
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  const Int& d = common_radicand(x, y);
  return QuadExt(x.p_ * y.p_ + Rational(d) * x.q_ * y.q_,
                 x.p_ * y.q_ + x.q_ * y.p_, d);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  common_radicand(x, y);
  return x * inverse(y);
}

QuadExt operator-(const QuadExt& x) { return QuadExt(-x.p_, -x.q_, x.d_); }

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.p_ != y.p_ || x.q_ != y.q_) return false;
  return x.q_ == 0 || x.d_ == y.d_;  // rationals are equal across fields
}

QuadExt operator+(const QuadExt& x, const Rational& y) {
  return QuadExt(x.p() + y, x.q(), x.d());
}
QuadExt operator-(const QuadExt& x, const Rational& y) {
  return QuadExt(x.p() - y, x.q(), x.d());
}
QuadExt operator*(const QuadExt& x, const Rational& y) {
  return QuadExt(x.p() * y, x.q() * y, x.d());
}
QuadExt operator/(const QuadExt& x, const Rational& y) {
  if (y == 0) throw std::domain_error("division by zero");
  return QuadExt(x.p() / y, x.q() / y, x.d());
}
QuadExt operator*(const Rational& x, const QuadExt& y) { return y * x; }

QuadExt conj(const QuadExt& z) { return QuadExt(z.p(), -z.q(), z.d()); }

Rational norm(const QuadExt& z) {
  return z.p() * z.p() - Rational(z.d()) * z.q() * z.q();
}

QuadExt pow(const QuadExt& z, unsigned long m) {
  QuadExt result(Rational(1), z.d());
  QuadExt base = z;
  while (m > 0) {
    if (m & 1) result = result * base;
    base = base * base;
    m >>= 1;
  }
  return result;
}

QuadExt inverse(const QuadExt& z) {
  Rational n = norm(z);
  if (n == 0) throw std::domain_error("inverse of zero");  // norm(z)=0 iff z=0 for squarefree d
  return conj(z) / n;
}

}  // namespace oplus
