#pragma once

#include <optional>
#include <vector>

#include "oplus/exact.hpp"
#include "oplus/quadext.hpp"

namespace oplus::pell {

/// An integer solution (x, y; m) of x^2 - N*y^2 = m for a fixed positive
/// nonsquare N. The identity is checked on construction.
struct PellTriple {
  Int x;
  Int y;
  Int m;
  Int N;

  PellTriple(Int x, Int y, Int m, Int N);
};

/// Brahmagupta composition (a,b;m) * (c,d;n) -> (ac +- Nbd, ad +- bc; mn).
/// sign is +1 or -1; both triples must share N.
PellTriple compose(const PellTriple& s, const PellTriple& t, int sign);

struct ChakravalaStep {
  Int a, b, k;  // state x^2 - N y^2 = k before the step
  Int x;        // chosen scaling integer (0 on the final composition step)
};

/// Minimal positive solution (x, y; 1) of x^2 - N*y^2 = 1 by the cyclic
/// Jayadeva-Bhaskara method: from (a,b;k) pick the scaling x with
/// a + b*x = 0 mod |k| minimizing |x^2 - N| (ties toward the smaller x)
/// and update (a,b,k) <- ((ax+Nb)/|k|, (a+bx)/|k|, (x^2-N)/k); a landing
/// at k = -1 is squared up via composition. Throws std::domain_error for
/// square or nonpositive N.
PellTriple chakravala(const Int& N);

/// chakravala with the visited (a, b, k, x) states recorded.
struct ChakravalaTrace {
  std::vector<ChakravalaStep> steps;
  PellTriple result;
};
ChakravalaTrace chakravala_trace(const Int& N);

/// Smallest unit alpha + beta*sqrt(radicand) > 1 of norm +1. Note this is
/// the norm-one fundamental unit: for radicands like 2 the fundamental
/// unit of the full ring (1 + sqrt(2)) has norm -1 and is not returned.
struct FundamentalUnit {
  Int alpha;
  Int beta;
  Int radicand;
};
FundamentalUnit fundamental_unit_norm_one(const Int& radicand);

/// Element m of the solution sequence of n^2 - 8d*t^2 = 1: with
/// eps = alpha + beta*sqrt(2d) the norm-one fundamental unit,
///   t_m = (eps^m - conj(eps)^m) / (4*sqrt(2d)),
///   n_m = (eps^m + conj(eps)^m) / 2.
/// Exact powers in Z[sqrt(2d)]; the division by 2 is asserted integral
/// (n odd forces an even sqrt(2d)-coefficient). d must be a positive odd
/// squarefree integer (d = 1 gives the eps = 3 + 2*sqrt(2) sequence),
/// m >= 1.
struct SequenceTerm {
  Int t;
  Int n;
};
SequenceTerm t_sequence(const Int& d, unsigned long m);

/// Index m with t_sequence(d, m).t == t, or nullopt. Found by walking the
/// sequence; cross-checked against the perfect-square test on 8d*t^2 + 1
/// (the two must agree, else std::logic_error).
std::optional<int> is_in_t_sequence(const Int& t, const Int& d);

}  // namespace oplus::pell
