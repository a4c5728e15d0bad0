#include <doctest.h>

#include <set>

#include "test_support.hpp"

using namespace skewbez;

TEST_CASE("field construction") {
  CHECK(Field::rationals().is_rational());
  CHECK(Field::prime_field(7).modulus() == 7);
  CHECK_THROWS_AS(Field::prime_field(2), domain_error);  // char 2 excluded
  CHECK_THROWS_AS(Field::prime_field(9), domain_error);
  CHECK_THROWS_AS(Field::prime_field(1), domain_error);
}

TEST_CASE("scalar arithmetic is exact") {
  Field q = Field::rationals();
  Scalar a = Scalar::of_fraction(q, 1, 3), b = Scalar::of_fraction(q, 1, 6);
  CHECK(a + b == Scalar::of_fraction(q, 1, 2));
  CHECK(a / b == Scalar::of_int(q, 2));
  CHECK(a.pow(-2) == Scalar::of_int(q, 9));

  Field f7 = Field::prime_field(7);
  Scalar x = Scalar::of_int(f7, 3);
  CHECK(x * x == Scalar::of_int(f7, 2));
  CHECK(x.inverse() == Scalar::of_int(f7, 5));
  CHECK(Scalar::of_fraction(f7, 1, 2) == Scalar::of_int(f7, 4));
  CHECK_THROWS_AS(Scalar::zero(f7).inverse(), domain_error);
  CHECK_THROWS_AS(x + Scalar::one(q), domain_error);
}

TEST_CASE("scalar strings round trip") {
  Field q = Field::rationals();
  CHECK(Scalar::of_fraction(q, -3, 7).str() == "-3/7");
  CHECK(Scalar::parse("-3/7", q) == Scalar::of_fraction(q, -3, 7));

  Field f13 = Field::prime_field(13);
  CHECK(Scalar::of_int(f13, 5).str() == "5 mod 13");
  CHECK(Scalar::parse("5 mod 13", f13) == Scalar::of_int(f13, 5));
  CHECK(Scalar::parse("-1", f13) == Scalar::of_int(f13, 12));
  CHECK_THROWS_AS(Scalar::parse("5 mod 7", f13), domain_error);
  CHECK_THROWS_AS(Scalar::parse("abc", q), domain_error);
}

TEST_CASE("square classes over Q") {
  Field q = Field::rationals();
  CHECK(SquareClass::of(Scalar::of_fraction(q, 8, 9)).representative() == 2);
  CHECK(SquareClass::of(Scalar::of_int(q, -4)).representative() == -1);
  CHECK(SquareClass::of(Scalar::of_int(q, 1)).is_trivial());
  CHECK_THROWS_AS(SquareClass::of(Scalar::zero(q)), domain_error);
}

TEST_CASE("square classes over F_p agree with enumeration") {
  Field f7 = Field::prime_field(7);
  // brute-force squares mod 7
  std::set<long> squares;
  for (long t = 1; t < 7; ++t) squares.insert(t * t % 7);
  CHECK(squares == std::set<long>{1, 2, 4});
  CHECK(detail::least_nonresidue(7) == 3);

  for (long x = 1; x < 7; ++x) {
    SquareClass cls = SquareClass::of(Scalar::of_int(f7, x));
    CHECK(cls.is_trivial() == (squares.count(x) > 0));
  }
  CHECK(SquareClass::of(Scalar::of_int(f7, 3)).representative() == 3);
  CHECK(detail::least_nonresidue(3) == 2);
}

TEST_CASE("class multiplication") {
  Field q = Field::rationals();
  auto cls = [&](long n) { return SquareClass::of(Scalar::of_int(q, n)); };
  CHECK(cls(2) * cls(3) == cls(6));
  CHECK(cls(-1) * cls(-1) == SquareClass::one(q));
  CHECK(cls(6) * cls(10) == cls(15));

  Field f7 = Field::prime_field(7);
  CHECK_THROWS_AS(cls(2) * SquareClass::one(f7), domain_error);
  SquareClass n = SquareClass::of(Scalar::of_int(f7, 3));
  CHECK(n * n == SquareClass::one(f7));
  CHECK(n.str() == "nonsquare mod 7");
  CHECK(SquareClass::one(f7).str() == "square mod 7");
}

TEST_CASE("square_class is invariant under multiplication by squares") {
  Rng rng(20240811);
  for (const Field& f : test_fields()) {
    for (int i = 0; i < 100; ++i) {
      Scalar x = random_scalar(rng, f, true);
      Scalar t = random_scalar(rng, f, true);
      CHECK(SquareClass::of(x * t * t) == SquareClass::of(x));
      Scalar y = random_scalar(rng, f, true);
      CHECK(SquareClass::of(x * y) == SquareClass::of(x) * SquareClass::of(y));
    }
  }
}

TEST_CASE("squarefree parts of medium composites") {
  // two primes above the trial bound; rho splits them
  mpz_class p1(10000019), p2(10000079);
  CHECK(detail::squarefree_part(p1 * p2) == p1 * p2);
  CHECK(detail::squarefree_part(p1 * p1 * p2) == p2);
  CHECK(detail::squarefree_part(p1) == p1);
  mpz_class square = p1 * p1;
  CHECK(detail::squarefree_part(square) == 1);
  CHECK(detail::squarefree_part(square * 2) == 2);

  auto factors = detail::factor_integer(mpz_class(2) * 2 * 3 * p1);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == std::pair<mpz_class, int>{2, 2});
  CHECK(factors[1] == std::pair<mpz_class, int>{3, 1});
  CHECK(factors[2] == std::pair<mpz_class, int>{p1, 1});
}

TEST_CASE("factorization fails loudly when the rho budget is exhausted") {
  // a semiprime with ~80-bit factors is far beyond the documented budget
  mpz_class a, b, base = mpz_class(1) << 80;
  mpz_nextprime(a.get_mpz_t(), base.get_mpz_t());
  base <<= 1;
  mpz_nextprime(b.get_mpz_t(), base.get_mpz_t());
  CHECK_THROWS_WITH_AS(detail::squarefree_part(a * b), doctest::Contains("rho"),
                       domain_error);
}
