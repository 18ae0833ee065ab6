#include "oplus/exact.hpp"

#include <stdexcept>

namespace oplus {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  return make_rational(num, den);
}

Int parse_int(std::string_view text) {
  // mpz_class accepts leading whitespace and an optional sign; reject
  // anything else (including the empty string) up front.
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
}

Int integer_sqrt(const Int& n) {
  if (n < 0) throw std::domain_error("integer_sqrt of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return r;
}

std::optional<Int> exact_cube_root(const Int& n) {
  Int a = abs(n);
  Int r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), 3);
  if (!exact) return std::nullopt;
  return n < 0 ? Int(-r) : r;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  auto n = exact_sqrt(num(r));
  if (!n) return std::nullopt;
  auto d = exact_sqrt(den(r));
  if (!d) return std::nullopt;
  return make_rational(*n, *d);
}

SquarefreeDecomposition squarefree_decompose(const Int& n) {
  if (n < 1) throw std::domain_error("squarefree_decompose needs n >= 1");
  Int rest = n;
  Int square_part = 1;
  Int squarefree_part = 1;
  for (Int p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned long e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e == 0) continue;
    for (unsigned long i = 0; i + 1 < e; i += 2) square_part *= p;
    if (e % 2 == 1) squarefree_part *= p;
  }
  // whatever survives trial division is prime
  squarefree_part *= rest;
  return {squarefree_part, square_part};
}

bool is_squarefree(const Int& n) {
  return n >= 1 && squarefree_decompose(n).square_part == 1;
}

}  // namespace oplus
