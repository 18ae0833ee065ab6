// Shared generators and brute-force oracles. The oracles here are kept
// deliberately independent of the library code paths they check.
#pragma once

#include <random>
#include <utility>
#include <vector>

#include "oplus/exact.hpp"

namespace testsupport {

using oplus::Int;
using oplus::Rational;

class Gen {
 public:
  explicit Gen(unsigned long seed = 20240229) : rng_(seed) {}

  long int_between(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  Rational rational(long max_abs_num = 50, long max_den = 12) {
    return oplus::make_rational(Int(int_between(-max_abs_num, max_abs_num)),
                                Int(int_between(1, max_den)));
  }

  Rational nonzero_rational(long max_abs_num = 50, long max_den = 12) {
    for (;;) {
      Rational r = rational(max_abs_num, max_den);
      if (r != 0) return r;
    }
  }

 private:
  std::mt19937_64 rng_;
};

// Minimal positive solution of x^2 - N*y^2 = 1 by scanning y = 1, 2, ...
inline std::pair<Int, Int> pell_minimum_bruteforce(const Int& N) {
  for (Int y = 1;; ++y) {
    Int square = N * y * y + 1;
    Int root = oplus::integer_sqrt(square);
    if (root * root == square) return {root, y};
  }
}

// Divisor count by the dumbest possible loop.
inline Int divisor_count_bruteforce(const Int& n) {
  Int count = 0;
  for (Int d = 1; d <= n; ++d)
    if (n % d == 0) ++count;
  return count;
}

// True iff no p^2 with p >= 2 divides n.
inline bool squarefree_bruteforce(const Int& n) {
  for (Int p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

// The direct square test on 9 - 8u - 4v + 4uv that every theorem path
// must agree with.
inline bool discriminant_square_bruteforce(long u, long v) {
  Int disc = Int(9) - Int(8) * u - Int(4) * v + Int(4) * u * v;
  if (disc < 0) return false;
  Int root = oplus::integer_sqrt(disc);
  return root * root == disc;
}

}  // namespace testsupport
