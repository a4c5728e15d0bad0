#include <doctest.h>

#include "skewbez/spinor.hpp"
#include "skewbez/synthesis.hpp"
#include "test_support.hpp"

using namespace skewbez;

namespace {

Poly lehmer(const Field& f) {
  return parse_poly("1,1,0,-1,-1,-1,-1,-1,0,1,1", f);
}

}  // namespace

TEST_CASE("symplectic synthesis on the worked 2x2 example") {
  Field f = Field::rationals();
  Poly q = Poly::from_ints(f, {1, -3, 1});
  SynthesisResult res = symplectic_with_charpoly(q);
  CHECK(res.space.epsilon == -1);
  CHECK(res.space.gram.at(0, 1) == Scalar::one(f));
  CHECK(res.space.gram.at(1, 0) == Scalar::of_int(f, -1));
  CHECK(res.gamma == companion(q));
  CHECK(res.companion_p == Poly::from_ints(f, {1, -2, 1}));
}

TEST_CASE("the Lehmer polynomial is symplectically realizable") {
  Field f = Field::rationals();
  SynthesisResult res = symplectic_with_charpoly(lehmer(f));
  CHECK(res.space.dim == 10);
  CHECK(res.space.gram.det() == Scalar::one(f));
  CHECK(char_poly(res.gamma) == lehmer(f));
  CHECK(is_isometry(res.space, res.gamma));
}

TEST_CASE("symplectic synthesis rejects bad degrees") {
  Field f = Field::rationals();
  CHECK_THROWS_AS(symplectic_with_charpoly(Poly::from_ints(f, {1, 1})), domain_error);
  CHECK_THROWS_AS(symplectic_with_charpoly(Poly::from_ints(f, {1, 2, 2, 1})),
                  domain_error);  // reciprocal odd degree
  CHECK_THROWS_AS(symplectic_with_charpoly(Poly::from_ints(f, {1, 2, 1, 1})),
                  domain_error);  // not reciprocal
}

TEST_CASE("symplectic determinant is one, always") {
  Rng rng(21);
  for (const Field& f : test_fields()) {
    for (int rep = 0; rep < 10; ++rep) {
      int d = 2 * (1 + static_cast<int>(rng() % 8));
      Poly q = random_monic_reciprocal(rng, f, d);
      SynthesisResult res = symplectic_with_charpoly(q);
      CHECK(res.space.gram.det() == Scalar::one(f));
      CHECK(char_poly(res.gamma) == q);
      CHECK(res.space.gram.is_skew_symmetric());
    }
  }
}

TEST_CASE("orthogonal synthesis on Phi30") {
  Field f = Field::rationals();
  Poly q = cyclotomic(f, 30);
  SynthesisResult res = orthogonal_with_charpoly(q);
  CHECK(res.space.dim == 8);
  CHECK(res.blocks.d0 == 8);
  CHECK(res.blocks.v_plus == 0);
  CHECK(res.blocks.v_minus == 0);
  // p0 = (T-1)(T+1)^7 with the default e = 1
  CHECK(res.companion_p ==
        Poly::from_ints(f, {-1, 1}) * Poly::from_ints(f, {1, 1}).pow(7));
  CHECK(char_poly(res.gamma) == q);
  CHECK_FALSE(res.space.gram.det().is_zero());
  CHECK(is_isometry(res.space, res.gamma));
}

TEST_CASE("orthogonal synthesis with trivial Bezoutian block") {
  Field f = Field::rationals();
  Poly q = Poly::from_ints(f, {-1, 1}).pow(2) * Poly::from_ints(f, {1, 1});
  SynthesisResult res = orthogonal_with_charpoly(q);
  CHECK(res.blocks.d0 == 0);
  CHECK(res.space.gram == Matrix::identity(f, 3));
  Matrix want = Matrix::diagonal(
      f, {Scalar::one(f), Scalar::one(f), Scalar::of_int(f, -1)});
  CHECK(res.gamma == want);

  SynthesisResult line = orthogonal_with_charpoly(Poly::from_ints(f, {1, 1}));
  CHECK(line.space.dim == 1);
  CHECK(line.gamma == Matrix::identity(f, 1) * Scalar::of_int(f, -1));
}

TEST_CASE("orthogonal synthesis validates e and the forms") {
  Field f = Field::rationals();
  Poly q = cyclotomic(f, 30);
  CHECK_THROWS_AS(orthogonal_with_charpoly(q, 2), domain_error);
  CHECK_THROWS_AS(orthogonal_with_charpoly(q, 9), domain_error);
  CHECK_NOTHROW(orthogonal_with_charpoly(q, 7));

  Poly with_minus = q * Poly::from_ints(f, {1, 1});
  CHECK_THROWS_AS(
      orthogonal_with_charpoly(with_minus, 1, std::nullopt,
                               std::vector<Scalar>{Scalar::zero(f)}),
      domain_error);
  CHECK_THROWS_AS(
      orthogonal_with_charpoly(with_minus, 1, std::nullopt,
                               std::vector<Scalar>{Scalar::one(f), Scalar::one(f)}),
      domain_error);
}

TEST_CASE("random orthogonal synthesis satisfies the contracts") {
  Rng rng(22);
  for (const Field& f : test_fields()) {
    for (int rep = 0; rep < 10; ++rep) {
      int d = 1 + static_cast<int>(rng() % 12);
      Poly q = random_monic_reciprocal(rng, f, d);
      SynthesisResult res = orthogonal_with_charpoly(q);
      CHECK(char_poly(res.gamma) == q);
      CHECK(res.space.gram.is_symmetric());
      CHECK_FALSE(res.space.gram.det().is_zero());
      CHECK(is_isometry(res.space, res.gamma));

      // det is forced modulo squares when q(+-1) != 0
      Scalar at_plus = q.eval(Scalar::one(f));
      Scalar at_minus = q.eval(Scalar::of_int(f, -1));
      if (!at_plus.is_zero() && !at_minus.is_zero())
        CHECK(SquareClass::of(res.space.gram.det()) ==
              SquareClass::of(at_plus * at_minus));
    }
  }
}

TEST_CASE("spinor-targeted synthesis") {
  Field f = Field::rationals();
  Poly q = Poly::from_ints(f, {1, 1}) * cyclotomic(f, 5);
  SquareClass two = SquareClass::of(Scalar::of_int(f, 2));
  SynthesisResult res = orthogonal_with_spinor(q, two);
  CHECK(res.blocks.v_minus == 1);
  CHECK(res.blocks.minus_form[0] == Scalar::of_int(f, 2));  // 2 * Phi5(-1) = 2
  CHECK(spinor_norm(res.space, res.gamma) == two);
  CHECK(spinor_norm_by_reflections(res.space, res.gamma) == two);
}

TEST_CASE("spinor norm is forced when q(-1) != 0") {
  Field f = Field::rationals();
  Poly q = cyclotomic(f, 30);
  SquareClass one = SquareClass::one(f);
  SynthesisResult res = orthogonal_with_spinor(q, one);  // Phi30(-1) = 1
  CHECK(spinor_norm(res.space, res.gamma) == one);
  CHECK_THROWS_WITH_AS(orthogonal_with_spinor(q, SquareClass::of(Scalar::of_int(f, 2))),
                       doctest::Contains("forced"), domain_error);
}

TEST_CASE("spinor-targeted synthesis reaches both classes over F_p") {
  for (std::uint64_t p : {3ull, 5ull, 13ull}) {
    Field f = Field::prime_field(p);
    Rng rng(p);
    // the (T+1) factor guarantees v_minus > 0
    Poly q = Poly::from_ints(f, {1, 1}) * random_monic_reciprocal(rng, f, 4);
    for (const mpz_class& rep :
         {mpz_class(1), detail::least_nonresidue(mpz_class(static_cast<unsigned long>(p)))}) {
      SquareClass target =
          SquareClass::of(Scalar(f, mpq_class(rep)));
      SynthesisResult res = orthogonal_with_spinor(q, target);
      CHECK(spinor_norm(res.space, res.gamma) == target);
    }
  }
}

TEST_CASE("monomial modification") {
  Field f = Field::rationals();
  Poly p = Poly::from_ints(f, {1, -3, 1});
  CHECK(mpv_modification(p, +1) == Poly::from_ints(f, {1, -2, 1}));
  CHECK(mpv_modification(p, -1) == Poly::from_ints(f, {1, -4, 1}));
  CHECK_THROWS_AS(mpv_modification(Poly::from_ints(f, {1, 1}), +1), domain_error);
  CHECK_THROWS_AS(mpv_modification(Poly::from_ints(f, {1, 2}), +1), domain_error);

  Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    int d = 2 * (1 + static_cast<int>(rng() % 6));
    Poly r = random_monic_reciprocal(rng, f, d);
    for (int sign : {+1, -1}) {
      Poly modified = mpv_modification(r, sign);
      CHECK(reciprocity_type(modified) == Reciprocity::reciprocal);
      CHECK(gcd(r, modified).degree() == 0);
      CHECK(resultant(r, modified) == Scalar::one(f));
    }
  }
}

TEST_CASE("the modified Lehmer polynomial is a cyclotomic product") {
  Field f = Field::rationals();
  Poly modified = mpv_modification(lehmer(f), +1);
  // strip cyclotomic factors by trial division; nothing may remain
  Poly rest = modified;
  for (unsigned n = 1; n <= 40 && rest.degree() > 0; ++n) {
    Poly phi = cyclotomic(f, n);
    for (;;) {
      auto [quot, rem] = rest.divrem(phi);
      if (!rem.is_zero()) break;
      rest = quot;
    }
  }
  CHECK(rest.degree() == 0);
  CHECK(rest.leading() == Scalar::one(f));
}
