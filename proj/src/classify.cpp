#include "oplus/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "oplus/pell.hpp"

namespace oplus::classify {

std::string case_name(Case c) {
  switch (c) {
    case Case::affine: return "affine";
    case Case::prime_case: return "prime_case";
    case Case::near_diagonal: return "near_diagonal";
    case Case::pell_2t2: return "pell_2t2";
    case Case::pell_2dt2: return "pell_2dt2";
    case Case::mordell_2t3: return "mordell_2t3";
    case Case::ramanujan_nagell: return "ramanujan_nagell";
    case Case::general: return "general";
  }
  return "general";
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

namespace {

Int half_product(const Int& u, const Int& v) { return (u - 1) * (v - 2); }

Rational disc_of(const Int& u, const Int& v) {
  return discriminant({Rational(u), Rational(v)});
}

// nonnegative n with n^2 = 9 - 8u - 4v + 4uv, when the discriminant is a
// square (always the case for a true classification).
std::optional<Int> square_witness(const Int& u, const Int& v) {
  Rational d = disc_of(u, v);
  if (d < 0) return std::nullopt;
  return exact_sqrt(num(d));
}

std::vector<std::pair<Rational, Rational>> rational_bilinear_coeffs(const Int& u,
                                                                    const Int& v) {
  std::vector<std::pair<Rational, Rational>> coeffs;
  SolveResult laws = solve({Rational(u), Rational(v)});
  for (const RationalLaw& law : laws.rational_laws)
    if (law.is_bilinear()) coeffs.emplace_back(law.scale(), law.offset());
  return coeffs;
}

// (u-1)(v-2) = 2(2^(t-3) - 1) rearranges to (u-1)(v-2)/2 + 1 = 2^(t-3).
std::optional<Int> ramanujan_nagell_t(const Int& u, const Int& v) {
  Int product = half_product(u, v);
  if (product < 0 || product % 2 != 0) return std::nullopt;
  Int h = product / 2 + 1;
  if (mpz_popcount(h.get_mpz_t()) != 1) return std::nullopt;  // not a power of two
  return Int(3 + mpz_sizeinbase(h.get_mpz_t(), 2) - 1);
}

std::optional<Int> mordell_t(const Int& u, const Int& v) {
  Int product = half_product(u, v);
  if (product % 2 != 0) return std::nullopt;
  return exact_cube_root(product / 2);
}

std::optional<Int> pell_t(const Int& u, const Int& v, const Int& d) {
  Int product = half_product(u, v);
  if (product <= 0 || product % (2 * d) != 0) return std::nullopt;
  auto t = exact_sqrt(product / (2 * d));
  if (!t || *t == 0) return std::nullopt;
  return t;
}

}  // namespace

bool precheck(const Int& u, const Int& v) {
  Int product = half_product(u, v);
  return product % 2 == 0 && product >= 0;
}

Int sigma0(const Int& n) {
  if (n < 1) throw std::domain_error("sigma0 needs n >= 1");
  Int rest = n;
  Int count = 1;
  for (Int p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned long e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (rest > 1) count *= 2;
  return count;
}

std::vector<std::pair<Int, Int>> enumerate_uv_for_n(const Int& n,
                                                    bool include_negative_divisors) {
  if (n < 3 || n % 2 == 0)
    throw std::domain_error("enumerate_uv_for_n needs odd n >= 3");
  Int target = (n * n - 1) / 4;

  std::vector<Int> divisors;
  for (Int low = 1; low * low <= target; ++low) {
    if (target % low != 0) continue;
    divisors.push_back(low);
    if (low * low != target) divisors.push_back(target / low);
  }
  std::sort(divisors.begin(), divisors.end());

  std::vector<std::pair<Int, Int>> pairs;
  for (const Int& divisor : divisors)
    pairs.emplace_back(divisor + 1, target / divisor + 2);
  if (include_negative_divisors)
    for (const Int& divisor : divisors)
      pairs.emplace_back(-divisor + 1, target / -divisor + 2);
  return pairs;
}

Classification classify_prime_case(const Int& u, const Int& v) {
  if (!is_prime(u - 1) || !is_prime(v - 2))
    throw std::domain_error("prime case needs u-1 and v-2 prime");
  Classification result{Case::prime_case, false, std::nullopt};
  if ((u == 4 && v == 4) || (u == 3 && v == 5)) {
    result.truth = true;
    result.witness = Witness{Int(5), std::nullopt, std::nullopt, std::nullopt, {}};
  }
  return result;
}

Classification classify_near_diagonal(const Int& u, const Int& v) {
  if (abs(u - v + 1) != 1)
    throw std::domain_error("near-diagonal case needs |u-v+1| = 1");
  Int n = (u == v) ? abs(2 * u - 3) : abs(2 * v - 5);
  return {Case::near_diagonal, true,
          Witness{n, std::nullopt, std::nullopt, std::nullopt, {}}};
}

Classification classify_pell(const Int& u, const Int& v, const Int& d) {
  if (d < 1 || d % 2 == 0 || !is_squarefree(d))
    throw std::domain_error("classify_pell needs d positive, odd, squarefree");
  auto t = pell_t(u, v, d);
  if (!t)
    throw std::domain_error("(u-1)(v-2) is not of the form 2d*t^2 with t > 0");

  Classification result{d == 1 ? Case::pell_2t2 : Case::pell_2dt2, false,
                        std::nullopt};
  Witness witness;
  witness.t = *t;
  witness.d = d;
  if (auto m = pell::is_in_t_sequence(*t, d)) {
    result.truth = true;
    witness.m = *m;
    witness.n = pell::t_sequence(d, static_cast<unsigned long>(*m)).n;
  }
  result.witness = witness;
  return result;
}

Classification classify_mordell_2t3(const Int& u, const Int& v) {
  auto t = mordell_t(u, v);
  if (!t) throw std::domain_error("(u-1)(v-2) is not of the form 2t^3");

  Classification result{Case::mordell_2t3, *t == 0 || *t == 1, std::nullopt};
  Witness witness;
  witness.t = *t;
  if (result.truth) {
    witness.n = square_witness(u, v);
    witness.law_coeffs = rational_bilinear_coeffs(u, v);
  }
  result.witness = witness;
  return result;
}

Classification classify_ramanujan_nagell(const Int& u, const Int& v) {
  auto t = ramanujan_nagell_t(u, v);
  if (!t)
    throw std::domain_error("(u-1)(v-2) is not of the form 2(2^(t-3) - 1)");

  bool truth = *t == 3 || *t == 4 || *t == 5 || *t == 7 || *t == 15;
  Classification result{Case::ramanujan_nagell, truth, std::nullopt};
  Witness witness;
  witness.t = *t;
  if (truth) witness.n = square_witness(u, v);
  result.witness = witness;
  return result;
}

Classification classify(const Int& u, const Int& v) {
  if (v - u == 2) {
    Classification result{Case::affine, true, std::nullopt};
    result.witness = Witness{square_witness(u, v), std::nullopt, std::nullopt,
                             std::nullopt, {}};
    return result;
  }
  if (is_prime(u - 1) && is_prime(v - 2)) return classify_prime_case(u, v);
  if (abs(u - v + 1) == 1) return classify_near_diagonal(u, v);
  if (ramanujan_nagell_t(u, v)) return classify_ramanujan_nagell(u, v);
  if (mordell_t(u, v)) return classify_mordell_2t3(u, v);

  Int product = half_product(u, v);
  if (product > 0 && product % 2 == 0) {
    // the squarefree part of (u-1)(v-2)/2 is the only d that can make
    // the product equal 2d*t^2; use it when it is odd
    Int d = squarefree_decompose(product / 2).squarefree_part;
    if (d % 2 == 1 && pell_t(u, v, d)) return classify_pell(u, v, d);
  }

  Classification result{Case::general,
                        is_true_over_q({Rational(u), Rational(v)}, true),
                        std::nullopt};
  if (result.truth)
    result.witness = Witness{square_witness(u, v), std::nullopt, std::nullopt,
                             std::nullopt, {}};
  return result;
}

std::vector<std::pair<Int, Int>> ramanujan_nagell_search(long long t_max) {
  if (t_max < 3) throw std::domain_error("ramanujan_nagell_search needs t_max >= 3");
  std::vector<std::pair<Int, Int>> solutions;
  Int power = 8;  // 2^3
  for (long long t = 3; t <= t_max; ++t, power *= 2)
    if (auto n = exact_sqrt(power - 7)) solutions.emplace_back(*n, Int(static_cast<long>(t)));
  return solutions;
}

}  // namespace oplus::classify
