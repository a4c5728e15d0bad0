#include "skewbez/spinor.hpp"

namespace skewbez {

namespace {

void require_quadratic(const BilinearSpace& space, const char* op) {
  if (space.epsilon != 1)
    throw domain_error(std::string(op) + " requires a symmetric space");
  if (!space.nondegenerate())
    throw domain_error(std::string(op) + " requires a nondegenerate space");
}

void require_isometry(const BilinearSpace& space, const Matrix& m, const char* op) {
  if (!is_isometry(space, m))
    throw domain_error(std::string(op) + ": the given matrix is not an isometry");
}

SquareClass times_minus_two_to(SquareClass cls, int exponent) {
  if (exponent % 2)
    cls = cls * SquareClass::of(Scalar::of_int(cls.field(), -2));
  return cls;
}

// Restriction of the form to the span of the columns of basis.
Matrix restricted_gram(const BilinearSpace& space, const Matrix& basis) {
  return basis.transposed() * space.gram * basis;
}


// Generalized eigenspace at +-1: kernel of (gamma -+ id)^dim.  Primary
// components of an isometry pair trivially against each other, so this
// subspace is nondegenerate even when the plain eigenspace is not (which
// happens for non-semisimple isometries, e.g. doubled Jordan blocks).
Matrix eigenspace_basis(const BilinearSpace& space, const Matrix& gamma, int sign) {
  Matrix shifted =
      gamma - Matrix::identity(space.field(), space.dim) * Scalar::of_int(space.field(), sign);
  return primitive_columns(shifted.pow(static_cast<unsigned>(space.dim)).kernel_basis());
}

}  // namespace

EigenspaceSplit minus_eigenspace(const BilinearSpace& space, const Matrix& gamma) {
  require_quadratic(space, "eigenspace split");
  require_isometry(space, gamma, "eigenspace split");
  const Field& f = space.field();

  Matrix basis = eigenspace_basis(space, gamma, -1);
  int v_minus = basis.cols();
  Matrix w = restricted_gram(space, basis);
  if (v_minus > 0 && w.det().is_zero())
    throw internal_error("the (-1)-primary component of the isometry is degenerate");

  Poly q = char_poly(gamma);
  Poly q_minus = q;
  Poly t_plus_one = Poly::from_ints(f, {1, 1});
  for (int i = 0; i < v_minus; ++i) {
    auto [quot, rem] = q_minus.divrem(t_plus_one);
    if (!rem.is_zero())
      throw internal_error("(T+1)^{v_-} does not divide the characteristic polynomial");
    q_minus = quot;
  }
  if (q_minus.eval(Scalar::of_int(f, -1)).is_zero())
    throw internal_error("q_- vanishes at -1 after removing the eigenspace factor");

  return EigenspaceSplit{std::move(basis), v_minus, std::move(w), std::move(q_minus)};
}

SquareClass zassenhaus(const BilinearSpace& space, const Matrix& gamma) {
  require_quadratic(space, "zassenhaus formula");
  require_isometry(space, gamma, "zassenhaus formula");
  Scalar q_at = char_poly(gamma).eval(Scalar::of_int(space.field(), -1));
  if (q_at.is_zero())
    throw domain_error("zassenhaus formula needs q(-1) != 0; use spinor_norm instead");
  return times_minus_two_to(SquareClass::of(q_at), space.dim);
}

SquareClass spinor_norm(const BilinearSpace& space, const Matrix& gamma) {
  require_quadratic(space, "spinor norm");
  require_isometry(space, gamma, "spinor norm");
  const Field& f = space.field();

  EigenspaceSplit split = minus_eigenspace(space, gamma);
  SquareClass cls = SquareClass::of(split.q_minus.eval(Scalar::of_int(f, -1)));
  if (split.v_minus > 0) cls = cls * SquareClass::of(split.restricted_gram.det());
  return times_minus_two_to(cls, space.dim - split.v_minus);
}

Matrix reflection(const BilinearSpace& space, const Matrix& w) {
  Scalar norm = space.psi(w, w);
  if (norm.is_zero()) throw domain_error("reflection requires an anisotropic vector");
  Scalar two_over = Scalar::of_int(space.field(), 2) / norm;
  return Matrix::identity(space.field(), space.dim) -
         (w * (w.transposed() * space.gram)) * two_over;
}

std::vector<Matrix> reflection_decomposition(const BilinearSpace& space,
                                             const Matrix& gamma) {
  require_quadratic(space, "reflection decomposition");
  require_isometry(space, gamma, "reflection decomposition");
  const Field& f = space.field();

  std::vector<Matrix> refs;
  Matrix m = gamma;
  // Columns of s span the yet-unprocessed subspace: the orthogonal
  // complement of the anisotropic vectors fixed so far.  Each round fixes
  // one more using at most two reflections.
  Matrix s = Matrix::identity(f, space.dim);
  while (s.cols() > 0) {
    Matrix w = restricted_gram(space, s);
    int k = s.cols();
    Matrix a(f, space.dim, 1);
    bool found = false;
    for (int i = 0; i < k && !found; ++i)
      if (!w.at(i, i).is_zero()) {
        a = s.col(i);
        found = true;
      }
    for (int i = 0; i < k && !found; ++i)
      for (int j = i + 1; j < k && !found; ++j)
        if (!w.at(i, j).is_zero()) {
          a = s.col(i) + s.col(j);  // psi(a, a) = 2 w_ij != 0 in char != 2
          found = true;
        }
    if (!found)
      throw internal_error("unprocessed subspace has no anisotropic vector");
    a = primitive_column(a);

    Matrix moved = m * a;
    if (moved != a) {
      Matrix diff = primitive_column(moved - a);
      if (!space.psi(diff, diff).is_zero()) {
        m = reflection(space, diff) * m;
        refs.push_back(std::move(diff));
      } else {
        // psi(diff,diff) + psi(sum,sum) = 4 psi(a,a) != 0, so the sum works:
        // r_sum sends m(a) to -a and r_a fixes the rest.
        Matrix sum = primitive_column(moved + a);
        m = reflection(space, sum) * m;
        m = reflection(space, a) * m;
        refs.push_back(std::move(sum));
        refs.push_back(a);
      }
      if (m * a != a) throw internal_error("reflection step failed to fix the vector");
    }
    // Shrink to the orthogonal complement of a inside span(s).
    Matrix functional = a.transposed() * space.gram * s;  // 1 x k
    Matrix kernel = functional.kernel_basis();
    if (kernel.cols() == 0) {
      s = Matrix(f, space.dim, 0);
    } else {
      s = primitive_columns(s * kernel);
    }
  }
  if (m != Matrix::identity(f, space.dim))
    throw internal_error("reflection decomposition did not reach the identity");
  return refs;
}

SquareClass spinor_norm_by_reflections(const BilinearSpace& space,
                                       const Matrix& gamma) {
  SquareClass cls = SquareClass::one(space.field());
  for (const Matrix& w : reflection_decomposition(space, gamma))
    cls = cls * SquareClass::of(space.psi(w, w));
  return cls;
}

SquareClass det_class(const BilinearSpace& space) {
  Scalar d = space.gram.det();
  if (d.is_zero()) throw domain_error("determinant class of a degenerate space");
  return SquareClass::of(d);
}

SquareClass disc(const BilinearSpace& space) {
  SquareClass cls = det_class(space);
  long d = space.dim;
  if ((d * (d - 1) / 2) % 2)
    cls = cls * SquareClass::of(Scalar::of_int(space.field(), -1));
  return cls;
}

bool disc_relation_check(const BilinearSpace& space, const Matrix& gamma) {
  require_quadratic(space, "discriminant relation");
  require_isometry(space, gamma, "discriminant relation");
  const Field& f = space.field();
  Poly q = char_poly(gamma);
  if (reciprocity_type(q) != Reciprocity::reciprocal)
    throw domain_error("discriminant relation requires a reciprocal characteristic polynomial");
  PmFactorization fac = factor_pm_one(q);

  SquareClass rhs = SquareClass::of(fac.q0.eval(Scalar::of_int(f, -1))) *
                    SquareClass::of(fac.q0.eval(Scalar::of_int(f, 1)));
  for (int sign : {+1, -1}) {
    Matrix basis = eigenspace_basis(space, gamma, sign);
    if (basis.cols() == 0) continue;
    Scalar det = restricted_gram(space, basis).det();
    if (det.is_zero())
      throw internal_error("eigenspace of the isometry is degenerate");
    rhs = rhs * SquareClass::of(det);
  }
  return det_class(space) == rhs;
}

bool edwards_disc_check(const Poly& q) {
  if (q.is_zero() || !q.is_monic())
    throw domain_error("discriminant congruence requires a monic polynomial");
  if (reciprocity_type(q) != Reciprocity::reciprocal)
    throw domain_error("discriminant congruence requires a reciprocal polynomial");
  if (q.degree() % 2 || q.degree() < 2)
    throw domain_error("discriminant congruence requires even degree >= 2");
  Scalar d = discriminant(q);
  if (d.is_zero())
    throw domain_error("discriminant congruence requires a separable polynomial");
  const Field& f = q.field();
  int m = q.degree() / 2;
  Scalar rhs = q.eval(Scalar::of_int(f, -1)) * q.eval(Scalar::of_int(f, 1));
  if (m % 2) rhs = -rhs;
  return SquareClass::of(d) == SquareClass::of(rhs);
}

bool baeza_edwards_check(const BilinearSpace& space, const Matrix& gamma) {
  require_quadratic(space, "discriminant comparison");
  require_isometry(space, gamma, "discriminant comparison");
  Poly q = char_poly(gamma);
  if (reciprocity_type(q) != Reciprocity::reciprocal)
    throw domain_error("discriminant comparison requires a reciprocal characteristic polynomial");
  if (q.degree() % 2)
    throw domain_error("discriminant comparison requires even degree");
  Scalar d = discriminant(q);
  if (d.is_zero())
    throw domain_error("discriminant comparison requires a separable characteristic polynomial");
  return disc(space) == SquareClass::of(d);
}

}  // namespace skewbez
