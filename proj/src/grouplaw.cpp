#include "oplus/grouplaw.hpp"

namespace oplus {

Rational discriminant(const ConstraintPair& pair) {
  return Rational(9) - Rational(8) * pair.u - Rational(4) * pair.v +
         Rational(4) * pair.u * pair.v;
}

namespace {

// offset from the linear relation 3*scale + 2*offset = v - u.
Rational bilinear_offset(const ConstraintPair& pair, const Rational& scale) {
  return (pair.v - pair.u - Rational(3) * scale) / Rational(2);
}

QuadExt bilinear_offset(const ConstraintPair& pair, const QuadExt& scale) {
  return (QuadExt(pair.v - pair.u, scale.d()) - Rational(3) * scale) / Rational(2);
}

}  // namespace

SolveResult solve(const ConstraintPair& pair) {
  SolveResult result;
  result.discriminant = discriminant(pair);

  if (pair.v - pair.u == 2)
    result.rational_laws.push_back(RationalLaw::affine(pair.u - Rational(2)));

  const Rational center = pair.u + pair.v - Rational(3);
  const Rational& disc = result.discriminant;

  if (disc == 0) {
    if (center != 0)
      result.rational_laws.push_back(
          RationalLaw::bilinear(center, bilinear_offset(pair, center)));
    return result;
  }
  if (disc < 0) return result;  // complex fields are out of scope

  if (auto root = rational_sqrt(disc)) {
    // +sqrt root first; a zero scale falls back to the affine family.
    for (const Rational& scale : {Rational(center + *root), Rational(center - *root)}) {
      if (scale == 0) continue;
      result.rational_laws.push_back(
          RationalLaw::bilinear(scale, bilinear_offset(pair, scale)));
    }
    return result;
  }

  // disc = (radical^2 * d) / den^2 with d squarefree: sqrt(disc) = (radical/den)*sqrt(d)
  auto decomposition = squarefree_decompose(num(disc) * den(disc));
  Int d = decomposition.squarefree_part;
  Rational radical = make_rational(decomposition.square_part, den(disc));
  result.field_radicand = d;
  for (int sign : {+1, -1}) {
    QuadExt scale(center, sign * radical, d);
    result.quadratic_laws.push_back(
        QuadLaw::bilinear(scale, bilinear_offset(pair, scale)));
  }
  return result;
}

bool is_true_over_q(const ConstraintPair& pair, bool bilinear_only) {
  SolveResult result = solve(pair);
  for (const RationalLaw& law : result.rational_laws)
    if (law.is_bilinear() || !bilinear_only) return true;
  return false;
}

}  // namespace oplus
