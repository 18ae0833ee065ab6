#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace oplus {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with positive denominator. Throws
/// std::invalid_argument when den == 0.
Rational make_rational(const Int& num, const Int& den);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a plain (possibly signed) integer. Throws std::invalid_argument.
Int parse_int(std::string_view text);

inline const Int& num(const Rational& r) { return r.get_num(); }
inline const Int& den(const Rational& r) { return r.get_den(); }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// floor(sqrt(n)). Throws std::domain_error for negative input.
Int integer_sqrt(const Int& n);

bool is_perfect_square(const Int& n);

/// Exact square root when n is a perfect square.
std::optional<Int> exact_sqrt(const Int& n);

/// Exact cube root when n is a perfect cube (negative n allowed).
std::optional<Int> exact_cube_root(const Int& n);

/// Exact square root of a nonnegative rational, when both numerator and
/// denominator are perfect squares.
std::optional<Rational> rational_sqrt(const Rational& r);

/// n = square_part^2 * squarefree_part with squarefree_part squarefree.
struct SquarefreeDecomposition {
  Int squarefree_part;
  Int square_part;
};

/// Trial-division decomposition; inputs at desk scale. Throws
/// std::domain_error for n < 1.
SquarefreeDecomposition squarefree_decompose(const Int& n);

bool is_squarefree(const Int& n);

}  // namespace oplus
