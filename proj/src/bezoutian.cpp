#include "skewbez/bezoutian.hpp"

namespace skewbez {

BilinearSpace::BilinearSpace(int epsilon_, Matrix gram_)
    : dim(gram_.rows()), epsilon(epsilon_), gram(std::move(gram_)) {
  if (epsilon != 1 && epsilon != -1)
    throw domain_error("epsilon must be +1 or -1");
  if (!gram.is_square()) throw domain_error("Gram matrix must be square");
  if (epsilon == 1 ? !gram.is_symmetric() : !gram.is_skew_symmetric())
    throw domain_error(std::string("Gram matrix is not ") +
                       (epsilon == 1 ? "symmetric" : "skew-symmetric"));
}

Matrix companion(const Poly& q) {
  if (q.is_zero() || !q.is_monic())
    throw domain_error("companion matrix requires a monic polynomial");
  int d = q.degree();
  if (d < 1) throw domain_error("companion matrix requires degree >= 1");
  const Field& f = q.field();
  Matrix m(f, d, d);
  for (int i = 1; i < d; ++i) m.at(i, i - 1) = Scalar::one(f);
  for (int i = 0; i < d; ++i) m.at(i, d - 1) = -q.coeff(i);
  return m;
}

SkewBezoutian build(const Poly& p, const Poly& q, int epsilon) {
  if (q.degree() < 1)
    throw domain_error("skew Bezoutian requires degree >= 1");
  SeriesPrefix c = series_coefficients(p, q, epsilon, q.degree() - 1);
  const Field& f = q.field();
  int d = q.degree();
  Scalar eps = Scalar::of_int(f, epsilon);

  Matrix gram(f, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j)
        gram.at(i, j) = Scalar::of_int(f, 1 + epsilon);
      else if (i > j)
        gram.at(i, j) = eps * c.at(i - j);
      else
        gram.at(i, j) = c.at(j - i);
    }

  return SkewBezoutian{p, q, epsilon, BilinearSpace(epsilon, std::move(gram)),
                       std::move(c), companion(q), Matrix::unit_column(f, d, 0)};
}

void require_nondegenerate(const SkewBezoutian& bez) {
  if (bez.space.nondegenerate()) return;
  Poly g = gcd(bez.p, bez.q);
  throw domain_error("skew Bezoutian is degenerate: p and q share the factor " +
                     g.str());
}

Matrix epsilon_reflection(const BilinearSpace& space, const Matrix& v0) {
  if (v0.rows() != space.dim || v0.cols() != 1)
    throw domain_error("base vector has wrong dimension");
  Scalar norm = space.psi(v0, v0);
  if (norm != Scalar::of_int(space.field(), 1 + space.epsilon))
    throw domain_error("epsilon-reflection requires psi(v0, v0) = 1 + epsilon, got " +
                       norm.str());
  // sigma(v) = v - psi(v0, v) v0  =>  I - v0 (v0^T G)
  return Matrix::identity(space.field(), space.dim) -
         v0 * (v0.transposed() * space.gram);
}

Matrix delta(const SkewBezoutian& bez) {
  return bez.gamma * epsilon_reflection(bez.space, bez.v0);
}

bool is_isometry(const BilinearSpace& space, const Matrix& m) {
  if (m.rows() != space.dim || m.cols() != space.dim) return false;
  return m.transposed() * space.gram * m == space.gram;
}

Poly recover_p(const BilinearSpace& space, const Matrix& gamma, const Matrix& v0) {
  const Field& f = space.field();
  int d = space.dim;
  Scalar eps = Scalar::of_int(f, space.epsilon);

  if (space.psi(v0, v0) != Scalar::of_int(f, 1 + space.epsilon))
    throw domain_error("recover_p requires psi(v0, v0) = 1 + epsilon");
  if (!is_isometry(space, gamma))
    throw domain_error("recover_p requires gamma to be an isometry");
  Poly q = char_poly(gamma);
  if (reciprocity_type(q) != Reciprocity::reciprocal)
    throw domain_error("recover_p requires gamma to have reciprocal characteristic polynomial");

  // The translates v0, gamma v0, ..., gamma^{d-1} v0 must span.
  std::vector<Matrix> orbit;
  Matrix v = v0;
  for (int n = 0; n < d; ++n) {
    orbit.push_back(v);
    v = gamma * v;
  }
  if (Matrix::from_columns(orbit).rank() != d)
    throw domain_error("cyclic vector required: the gamma-orbit of v0 does not span");

  // c_n = psi(v0, gamma^n v0); r_n = q_n + sum_{k=1}^n c_k q_{n-k};
  // p = -eps * sum r_n T^n.  The slot order matters in the skew case: on
  // the model space psi(T^n, 1) = eps * c_n, so pairing against v0 in the
  // first slot is what reproduces the defining series.
  std::vector<Scalar> c{Scalar::one(f)};  // c[n] = c_n, c_0 = 1
  v = gamma * v0;
  for (int n = 1; n <= d; ++n) {
    c.push_back(space.psi(v0, v));
    v = gamma * v;
  }
  std::vector<Scalar> p_coeffs;
  p_coeffs.reserve(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    Scalar rn = q.coeff(n);
    for (int k = 1; k <= n; ++k)
      rn += c[static_cast<std::size_t>(k)] * q.coeff(n - k);
    p_coeffs.push_back(-(eps * rn));
  }
  return Poly(f, std::move(p_coeffs));
}

GroupGenerators group_generators(const SkewBezoutian& bez) {
  Matrix sigma = epsilon_reflection(bez.space, bez.v0);
  return GroupGenerators{bez.gamma, bez.gamma * sigma, std::move(sigma)};
}

Scalar series_pairing(const Poly& p, const Poly& q, int epsilon, const Poly& u,
                      const Poly& v) {
  const Field& f = q.field();
  if (u.is_zero() || v.is_zero()) return Scalar::zero(f);
  int n_terms = std::max(u.degree(), v.degree());
  SeriesPrefix c = series_coefficients(p, q, epsilon, n_terms);
  Scalar eps = Scalar::of_int(f, epsilon);
  auto c_at = [&](int k) {  // the linear form on T^k, k of any sign
    if (k == 0) return Scalar::of_int(f, 1 + epsilon);
    if (k > 0) return eps * c.at(k);
    return c.at(-k);
  };
  Scalar acc = Scalar::zero(f);
  for (int i = 0; i <= u.degree(); ++i)
    for (int j = 0; j <= v.degree(); ++j) {
      if (u.coeff(i).is_zero() || v.coeff(j).is_zero()) continue;
      acc += u.coeff(i) * v.coeff(j) * c_at(i - j);
    }
  return acc;
}

}  // namespace skewbez
