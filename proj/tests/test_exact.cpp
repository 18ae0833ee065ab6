#include <doctest.h>

#include <stdexcept>

#include "oplus/exact.hpp"
#include "oplus/quadext.hpp"
#include "support.hpp"

using namespace oplus;
using testsupport::Gen;

TEST_CASE("integer_sqrt on known values") {
  CHECK(integer_sqrt(0) == 0);
  CHECK(integer_sqrt(801) == 28);  // 28^2 = 784 <= 801 < 841
  CHECK(integer_sqrt(121) == 11);
  CHECK_THROWS_AS(integer_sqrt(Int(-1)), std::domain_error);
}

TEST_CASE("integer_sqrt bracketing property") {
  Gen gen;
  for (int i = 0; i < 500; ++i) {
    Int n = gen.int_between(0, 1000000000);
    n *= gen.int_between(1, 1000000000);
    Int root = integer_sqrt(n);
    CHECK(root * root <= n);
    CHECK(n < (root + 1) * (root + 1));
  }
}

TEST_CASE("perfect square and cube helpers") {
  CHECK(is_perfect_square(Int(0)));
  CHECK(is_perfect_square(Int(784)));
  CHECK(!is_perfect_square(Int(801)));
  CHECK(!is_perfect_square(Int(-4)));
  CHECK(exact_sqrt(Int(289)) == Int(17));
  CHECK(!exact_sqrt(Int(33)).has_value());
  CHECK(exact_cube_root(Int(8)) == Int(2));
  CHECK(exact_cube_root(Int(-27)) == Int(-3));
  CHECK(!exact_cube_root(Int(9)).has_value());
}

TEST_CASE("squarefree_decompose on known values") {
  auto one = squarefree_decompose(1);
  CHECK(one.squarefree_part == 1);
  CHECK(one.square_part == 1);

  auto big = squarefree_decompose(801);
  CHECK(big.squarefree_part == 89);
  CHECK(big.square_part == 3);

  auto eight = squarefree_decompose(8);
  CHECK(eight.squarefree_part == 2);
  CHECK(eight.square_part == 2);

  CHECK_THROWS_AS(squarefree_decompose(0), std::domain_error);
}

TEST_CASE("squarefree_decompose reconstruction property") {
  Gen gen;
  for (int i = 0; i < 300; ++i) {
    Int n = gen.int_between(1, 200000);
    auto parts = squarefree_decompose(n);
    CHECK(parts.square_part * parts.square_part * parts.squarefree_part == n);
    CHECK(testsupport::squarefree_bruteforce(parts.squarefree_part));
  }
}

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  Rational r = make_rational(4, -6);
  CHECK(num(r) == -2);
  CHECK(den(r) == 3);
  CHECK(make_rational(0, 5) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

  CHECK(parse_rational("3/2") == make_rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rational field axioms hold exactly") {
  Gen gen;
  for (int i = 0; i < 400; ++i) {
    Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == 0);
    if (a != 0) CHECK(a * (Rational(1) / a) == 1);
  }
}

TEST_CASE("rational_sqrt detects rational squares componentwise") {
  CHECK(rational_sqrt(make_rational(9, 4)) == make_rational(3, 2));
  CHECK(rational_sqrt(Rational(121)) == Rational(11));
  CHECK(!rational_sqrt(Rational(801)).has_value());
  CHECK(!rational_sqrt(make_rational(4, 3)).has_value());
  CHECK(!rational_sqrt(Rational(-9)).has_value());
  CHECK(rational_sqrt(Rational(0)) == Rational(0));
}

TEST_CASE("quadratic field arithmetic on known values") {
  QuadExt unit(3, 2, 2);  // 3 + 2*sqrt(2)
  CHECK(unit * conj(unit) == QuadExt(1, 0, 2));
  CHECK(pow(unit, 0) == QuadExt(1, 0, 2));
  CHECK(pow(unit, 3) == QuadExt(99, 70, 2));
  CHECK(norm(unit) == 1);
  CHECK(norm(QuadExt(0, 0, 2)) == 0);
  CHECK(norm(QuadExt(1, 1, 2)) == -1);
}

TEST_CASE("quadratic field rejects invalid radicands and mixed fields") {
  CHECK_THROWS_AS(QuadExt(1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(QuadExt(1, 1, 12), std::domain_error);
  QuadExt a(1, 1, 2), b(1, 1, 3);
  CHECK_THROWS_AS(a + b, std::domain_error);
  CHECK_THROWS_AS(a * b, std::domain_error);
}

TEST_CASE("norm is multiplicative") {
  Gen gen;
  for (Int d : {Int(2), Int(5), Int(89)}) {
    for (int i = 0; i < 150; ++i) {
      QuadExt x(gen.rational(), gen.rational(), d);
      QuadExt y(gen.rational(), gen.rational(), d);
      CHECK(norm(x * y) == norm(x) * norm(y));
    }
  }
}

TEST_CASE("powers add exponents") {
  Gen gen;
  for (int i = 0; i < 60; ++i) {
    QuadExt z(gen.rational(9, 4), gen.rational(9, 4), 3);
    unsigned long m = gen.int_between(0, 6), n = gen.int_between(0, 6);
    CHECK(pow(z, m + n) == pow(z, m) * pow(z, n));
  }
}

TEST_CASE("quadratic division undoes multiplication") {
  Gen gen;
  for (int i = 0; i < 150; ++i) {
    QuadExt x(gen.rational(), gen.rational(), 7);
    QuadExt y(gen.rational(), gen.rational(), 7);
    if (y.is_zero()) continue;
    CHECK((x * y) / y == x);
  }
  CHECK_THROWS_AS(inverse(QuadExt(0, 0, 7)), std::domain_error);
}

TEST_CASE("rational values collapse across fields") {
  QuadExt two(2, 0, 5);
  CHECK(two.is_rational());
  CHECK(two.rational_value() == 2);
  CHECK(two == QuadExt(2, 0, 7));  // same rational, different carrier field
  CHECK_THROWS_AS(QuadExt(1, 1, 5).rational_value(), std::domain_error);
}
