#include "skewbez/synthesis.hpp"

#include "skewbez/spinor.hpp"

namespace skewbez {

namespace {

void require_monic_reciprocal(const Poly& q, const char* op) {
  if (q.is_zero() || !q.is_monic())
    throw domain_error(std::string(op) + " requires a monic q");
  if (reciprocity_type(q) != Reciprocity::reciprocal)
    throw domain_error(std::string(op) + " requires a reciprocal q");
}

std::vector<Scalar> default_form(const Field& f, int n) {
  return std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::one(f));
}

}  // namespace

Poly mpv_modification(const Poly& p, int sign) {
  if (sign != 1 && sign != -1)
    throw domain_error("modification sign must be +1 or -1");
  require_monic_reciprocal(p, "monomial modification");
  if (p.degree() % 2)
    throw domain_error("monomial modification requires even degree");
  const Field& f = p.field();
  Poly mono = Poly::x_power(f, p.degree() / 2);
  return sign == 1 ? p + mono : p - mono;
}

SynthesisResult symplectic_with_charpoly(const Poly& q) {
  require_monic_reciprocal(q, "symplectic synthesis");
  if (q.degree() < 2 || q.degree() % 2)
    throw domain_error("symplectic synthesis requires even degree >= 2");
  Poly p = mpv_modification(q, +1);
  SkewBezoutian bez = build(p, q, -1);
  SynthesisResult::Blocks blocks{q.degree(), p, q, 0, 0, {}, {}};
  return SynthesisResult{std::move(bez.space), std::move(bez.gamma), std::move(p),
                         std::move(blocks)};
}

SynthesisResult orthogonal_with_charpoly(const Poly& q, int e,
                                         std::optional<std::vector<Scalar>> plus_form,
                                         std::optional<std::vector<Scalar>> minus_form) {
  require_monic_reciprocal(q, "orthogonal synthesis");
  const Field& f = q.field();
  PmFactorization fac = factor_pm_one(q);
  int d0 = fac.q0.degree();

  std::vector<Scalar> plus = plus_form ? *plus_form : default_form(f, fac.v_plus);
  std::vector<Scalar> minus = minus_form ? *minus_form : default_form(f, fac.v_minus);
  if (static_cast<int>(plus.size()) != fac.v_plus ||
      static_cast<int>(minus.size()) != fac.v_minus)
    throw domain_error("diagonal form has wrong dimension: V+ needs " +
                       std::to_string(fac.v_plus) + " entries, V- needs " +
                       std::to_string(fac.v_minus));
  for (const Scalar& a : plus)
    if (a.is_zero()) throw domain_error("requested form on V+ is degenerate");
  for (const Scalar& a : minus)
    if (a.is_zero()) throw domain_error("requested form on V- is degenerate");

  std::vector<Matrix> gram_blocks, gamma_blocks;
  Poly p0 = Poly::constant(f, Scalar::one(f));
  if (d0 > 0) {
    if (e % 2 == 0) throw domain_error("e must be odd");
    if (e < 0 || e > d0)
      throw domain_error("e must lie in [0, " + std::to_string(d0) + "]");
    p0 = Poly::from_ints(f, {-1, 1}).pow(static_cast<unsigned>(e)) *
         Poly::from_ints(f, {1, 1}).pow(static_cast<unsigned>(d0 - e));
    SkewBezoutian bez = build(p0, fac.q0, +1);
    gram_blocks.push_back(std::move(bez.space.gram));
    gamma_blocks.push_back(std::move(bez.gamma));
  }
  if (fac.v_plus > 0) {
    gram_blocks.push_back(Matrix::diagonal(f, plus));
    gamma_blocks.push_back(Matrix::identity(f, fac.v_plus));
  }
  if (fac.v_minus > 0) {
    gram_blocks.push_back(Matrix::diagonal(f, minus));
    gamma_blocks.push_back(-Matrix::identity(f, fac.v_minus));
  }

  SynthesisResult::Blocks blocks{d0,        p0,           fac.q0, fac.v_plus,
                                 fac.v_minus, std::move(plus), std::move(minus)};
  return SynthesisResult{
      BilinearSpace(+1, Matrix::block_diag(gram_blocks)),
      Matrix::block_diag(gamma_blocks), blocks.p0, std::move(blocks)};
}

SynthesisResult orthogonal_with_spinor(const Poly& q, const SquareClass& s) {
  require_monic_reciprocal(q, "orthogonal synthesis");
  detail::require_same_field(q.field(), s.field(), "spinor-targeted synthesis");
  const Field& f = q.field();
  PmFactorization fac = factor_pm_one(q);
  Scalar q0_at_minus_one = fac.q0.eval(Scalar::of_int(f, -1));

  if (fac.v_minus == 0) {
    SquareClass forced = SquareClass::of(q0_at_minus_one);
    if (s != forced)
      throw domain_error(
          "spinor norm is forced to the class of q0(-1) = " + forced.str() +
          " when q has no root at -1; requested " + s.str());
    return orthogonal_with_charpoly(q);
  }

  std::vector<Scalar> minus = default_form(f, fac.v_minus);
  minus[0] = s.as_scalar() * q0_at_minus_one;
  SynthesisResult result = orthogonal_with_charpoly(q, 1, std::nullopt, minus);

  SquareClass achieved = spinor_norm(result.space, result.gamma);
  if (achieved != s)
    throw internal_error("spinor-targeted synthesis produced class " +
                         achieved.str() + " instead of " + s.str());
  return result;
}

}  // namespace skewbez
