#pragma once

#include "skewbez/matrix.hpp"
#include "skewbez/poly.hpp"

namespace skewbez {

/// An epsilon-symmetric bilinear space: G^T = epsilon * G.
struct BilinearSpace {
  int dim;
  int epsilon;  // +1 symmetric, -1 skew-symmetric
  Matrix gram;

  BilinearSpace(int epsilon_, Matrix gram_);

  const Field& field() const { return gram.field(); }
  Scalar psi(const Matrix& u, const Matrix& v) const { return bilinear(gram, u, v); }
  bool nondegenerate() const { return !gram.det().is_zero(); }
};

/// The skew Bezoutian B(p, q): the Toeplitz Gram matrix of the pairing read
/// off the series expansion of -eps*p/q, together with the multiplication-
/// by-T isometry gamma and the distinguished vector v0 (the class of 1).
struct SkewBezoutian {
  Poly p, q;
  int epsilon;
  BilinearSpace space;
  SeriesPrefix c;
  Matrix gamma;
  Matrix v0;
};

/// Companion matrix of a monic polynomial: multiplication by T on the basis
/// 1, T, ..., T^{d-1} of k[T]/(q).
Matrix companion(const Poly& q);

/// Requires p, q monic of equal degree d >= 1, q reciprocal and p
/// (-eps)-reciprocal.  det(gram) equals resultant(p, q); the space is
/// degenerate exactly when p and q share a factor.
SkewBezoutian build(const Poly& p, const Poly& q, int epsilon);

/// Throws naming the common factor of p and q when the space is degenerate.
void require_nondegenerate(const SkewBezoutian& bez);

/// The isometry v -> v - psi(v0, v) v0; requires psi(v0, v0) = 1 + eps.
/// Its determinant is -eps; it is an involution when eps = +1 and a
/// transvection of infinite order when eps = -1.
Matrix epsilon_reflection(const BilinearSpace& space, const Matrix& v0);

/// delta = gamma * sigma with sigma based at v0; char_poly(delta) = p.
Matrix delta(const SkewBezoutian& bez);

/// Reconstructs the monic (-eps)-reciprocal p with B(p, q) isometric to the
/// given space via the basis {gamma^n v0}, where q = char_poly(gamma).
Poly recover_p(const BilinearSpace& space, const Matrix& gamma, const Matrix& v0);

bool is_isometry(const BilinearSpace& space, const Matrix& m);

struct GroupGenerators {
  Matrix gamma;
  Matrix delta;
  Matrix sigma;
};
GroupGenerators group_generators(const SkewBezoutian& bez);

/// The pairing evaluated on explicit polynomial representatives u, v via the
/// defining series: the constant term of u(T) v(1/T) paired against the
/// extended coefficient sequence.  Representatives may exceed degree d; the
/// value only depends on their classes mod q.
Scalar series_pairing(const Poly& p, const Poly& q, int epsilon, const Poly& u,
                      const Poly& v);

}  // namespace skewbez
