#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oplus/exact.hpp"
#include "oplus/grouplaw.hpp"

namespace oplus::classify {

enum class Case {
  affine,
  prime_case,
  near_diagonal,
  pell_2t2,
  pell_2dt2,
  mordell_2t3,
  ramanujan_nagell,
  general,
};

std::string case_name(Case c);

struct Witness {
  std::optional<Int> n;  // n^2 = 9 - 8u - 4v + 4uv when present
  std::optional<int> m;  // sequence index (Pell cases)
  std::optional<Int> t;  // theorem parameter (Pell/Mordell/Ramanujan-Nagell)
  std::optional<Int> d;  // radicand parameter (Pell cases)
  std::vector<std::pair<Rational, Rational>> law_coeffs;  // (scale, offset)
};

/// Verdict of one theorem classifier: which case, whether (u,v,P,Q) is
/// true in the bilinear sense, and the certifying data.
struct Classification {
  Case case_ = Case::general;
  bool truth = false;
  std::optional<Witness> witness;
};

bool is_prime(const Int& n);

/// Necessary conditions for bilinear truth over Q:
/// (u-1)(v-2) even and >= 0.
bool precheck(const Int& u, const Int& v);

/// Number of positive divisors, by trial division.
Int sigma0(const Int& n);

/// All integer (u,v) with (u-1)(v-2) = (n^2-1)/4, one pair per divisor
/// delta: (delta+1, (n^2-1)/(4*delta)+2). Positive divisors ascending;
/// with include_negative_divisors the negative-divisor pairs follow,
/// ordered by |delta|. n must be odd and >= 3.
std::vector<std::pair<Int, Int>> enumerate_uv_for_n(const Int& n,
                                                    bool include_negative_divisors = false);

/// u-1 and v-2 both prime: true exactly for (4,4) and (3,5), witness n=5.
Classification classify_prime_case(const Int& u, const Int& v);

/// |u-v+1| = 1: always true; witness n = |2u-3| (u=v) or |2v-5| (u=v-2).
Classification classify_near_diagonal(const Int& u, const Int& v);

/// (u-1)(v-2) = 2d*t^2 with t > 0: true iff t lies in the d-sequence of
/// t_sequence. d must be positive, odd, squarefree; throws
/// std::domain_error when no integer t fits.
Classification classify_pell(const Int& u, const Int& v, const Int& d);

/// (u-1)(v-2) = 2t^3: true iff t is 0 or 1. For the t = 0 worked cases
/// (u=1 or v=2) and t = 1, the witness carries the rational bilinear
/// (scale, offset) pairs.
Classification classify_mordell_2t3(const Int& u, const Int& v);

/// (u-1)(v-2) = 2(2^(t-3) - 1): true iff t is one of {3,4,5,7,15}
/// (Nagell's theorem); witness carries t and n with n^2 + 7 = 2^t.
Classification classify_ramanujan_nagell(const Int& u, const Int& v);

/// Tries the special cases in a fixed order (affine, prime_case,
/// near_diagonal, ramanujan_nagell, mordell_2t3, pell_2t2, pell_2dt2,
/// general) and returns the first whose hypothesis holds. truth always
/// means bilinear truth over Q; every path agrees with the direct
/// perfect-square test on the discriminant.
Classification classify(const Int& u, const Int& v);

/// Integral points of y^2 = x^3 + k with |x| <= bound, both signs of y,
/// ordered by x then y descending. Exhaustive within the bound.
struct MordellSolutionSet {
  Int k;
  long long bound;
  std::vector<std::pair<Int, Int>> solutions;
};

/// OpenMP kernel over the x range.
MordellSolutionSet mordell_search(const Int& k, long long bound);
/// Plain-loop reference implementation; must agree with mordell_search.
MordellSolutionSet mordell_search_serial(const Int& k, long long bound);

/// All positive (n, t) with n^2 + 7 = 2^t and t <= t_max (t_max >= 3).
/// For t_max >= 15 this reproduces Nagell's five solutions.
std::vector<std::pair<Int, Int>> ramanujan_nagell_search(long long t_max);

/// All integer (u, v) in [lo, hi]^2 whose discriminant 9-8u-4v+4uv is a
/// perfect square >= 0, i.e. bilinear truth by the direct test. Ordered
/// by u then v. OpenMP kernel; the _serial variant is the reference.
std::vector<std::pair<long long, long long>> search_true_pairs(long long lo, long long hi);
std::vector<std::pair<long long, long long>> search_true_pairs_serial(long long lo, long long hi);

}  // namespace oplus::classify
