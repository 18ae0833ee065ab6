#include "oplus/pell.hpp"

#include <stdexcept>
#include <utility>

namespace oplus::pell {

PellTriple::PellTriple(Int x_, Int y_, Int m_, Int N_)
    : x(std::move(x_)), y(std::move(y_)), m(std::move(m_)), N(std::move(N_)) {
  if (N < 2 || is_perfect_square(N))
    throw std::domain_error("Pell modulus must be a positive nonsquare");
  if (x * x - N * y * y != m)
    throw std::domain_error("triple does not satisfy x^2 - N*y^2 = m");
}

PellTriple compose(const PellTriple& s, const PellTriple& t, int sign) {
  if (s.N != t.N) throw std::domain_error("composition needs a common modulus");
  if (sign != 1 && sign != -1) throw std::domain_error("sign must be +1 or -1");
  return PellTriple(s.x * t.x + sign * s.N * s.y * t.y,
                    s.x * t.y + sign * s.y * t.x, s.m * t.m, s.N);
}

namespace {

Int round_sqrt(const Int& N) {
  Int lo = integer_sqrt(N);
  return (N - lo * lo <= (lo + 1) * (lo + 1) - N) ? lo : lo + 1;
}

// Scaling integer x >= 0 with a + b*x = 0 mod |k| closest to sqrt(N) in
// the |x^2 - N| sense; ties go to the smaller candidate.
Int pick_scaling(const Int& a, const Int& b, const Int& k, const Int& N) {
  Int modulus = abs(k);
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw std::logic_error("chakravala invariant gcd(b, k) = 1 broken");
  Int base = (-a * inv) % modulus;
  if (base < 0) base += modulus;

  Int root = integer_sqrt(N);
  Int below = base + ((root - base) / modulus) * modulus;
  while (below > root) below -= modulus;
  while (below + modulus <= root) below += modulus;
  Int above = below + modulus;
  if (below < 0) return above;

  Int gap_below = N - below * below;
  Int gap_above = above * above - N;
  if (gap_below < gap_above) return below;
  if (gap_above < gap_below) return above;
  return below;
}

ChakravalaTrace run_chakravala(const Int& N, bool record) {
  if (N < 2) throw std::domain_error("chakravala needs N >= 2");
  if (is_perfect_square(N)) throw std::domain_error("chakravala needs nonsquare N");

  Int a = round_sqrt(N);
  Int b = 1;
  Int k = a * a - N;

  std::vector<ChakravalaStep> steps;
  while (k != 1) {
    if (k == -1) {
      if (record) steps.push_back({a, b, k, 0});
      Int a2 = a * a + N * b * b;
      b = 2 * a * b;
      a = a2;
      k = 1;
      break;
    }
    Int x = pick_scaling(a, b, k, N);
    if (record) steps.push_back({a, b, k, x});
    Int modulus = abs(k);
    Int a_next = (a * x + N * b) / modulus;
    Int b_next = (a + b * x) / modulus;
    k = (x * x - N) / k;
    a = a_next;
    b = b_next;
  }
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return {std::move(steps), PellTriple(a, b, 1, N)};
}

}  // namespace

PellTriple chakravala(const Int& N) { return run_chakravala(N, false).result; }

ChakravalaTrace chakravala_trace(const Int& N) { return run_chakravala(N, true); }

FundamentalUnit fundamental_unit_norm_one(const Int& radicand) {
  PellTriple minimal = chakravala(radicand);
  return {minimal.x, minimal.y, radicand};
}

namespace {

void check_sequence_radicand(const Int& d) {
  if (d < 1 || d % 2 == 0 || !is_squarefree(d))
    throw std::domain_error("t_sequence needs d positive, odd, squarefree");
}

SequenceTerm term_from_power(const QuadExt& power, const Int& d) {
  const Rational& n = power.p();
  const Rational& coeff = power.q();
  if (!is_integer(n) || !is_integer(coeff) || num(coeff) % 2 != 0)
    throw std::logic_error("unit power left Z[sqrt(2d)] or broke the parity fact");
  SequenceTerm term{num(coeff) / 2, num(n)};
  if (term.n * term.n - 8 * d * term.t * term.t != 1)
    throw std::logic_error("sequence term fails n^2 - 8d*t^2 = 1");
  return term;
}

QuadExt norm_one_unit(const Int& d) {
  FundamentalUnit unit = fundamental_unit_norm_one(2 * d);
  return QuadExt(Rational(unit.alpha), Rational(unit.beta), 2 * d);
}

}  // namespace

SequenceTerm t_sequence(const Int& d, unsigned long m) {
  check_sequence_radicand(d);
  if (m < 1) throw std::domain_error("t_sequence needs m >= 1");
  return term_from_power(pow(norm_one_unit(d), m), d);
}

std::optional<int> is_in_t_sequence(const Int& t, const Int& d) {
  check_sequence_radicand(d);
  if (t < 1) throw std::domain_error("is_in_t_sequence needs t >= 1");

  std::optional<int> found;
  QuadExt unit = norm_one_unit(d);
  QuadExt power = unit;
  for (int m = 1;; ++m, power = power * unit) {
    SequenceTerm term = term_from_power(power, d);
    if (term.t == t) found = m;
    if (term.t >= t) break;
  }
  // independent route: t is a term iff 8d*t^2 + 1 is a perfect square
  bool square = is_perfect_square(8 * d * t * t + 1);
  if (square != found.has_value())
    throw std::logic_error("t-sequence walk disagrees with the square test");
  return found;
}

}  // namespace oplus::pell
