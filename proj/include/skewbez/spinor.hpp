#pragma once

#include <vector>

#include "skewbez/bezoutian.hpp"

namespace skewbez {

/// The full primary component of an isometry at the eigenvalue -1 (the
/// kernel of (gamma + id)^dim), with the restriction of the form and the
/// cofactor of the characteristic polynomial: q = (T+1)^{v_-} q_-,
/// q_-(-1) != 0.  Using the generalized eigenspace keeps the split valid
/// for non-semisimple isometries, whose plain (-1)-eigenspace can be
/// degenerate; it coincides with the eigenspace in the semisimple case.
struct EigenspaceSplit {
  Matrix basis;            // dim x v_minus
  int v_minus;             // algebraic multiplicity of -1
  Matrix restricted_gram;  // nondegenerate for genuine isometries
  Poly q_minus;
};

EigenspaceSplit minus_eigenspace(const BilinearSpace& space, const Matrix& gamma);

/// Spinor norm by the closed formula (-2)^{-dim V} q(-1); only valid when
/// q(-1) != 0, errors otherwise.
SquareClass zassenhaus(const BilinearSpace& space, const Matrix& gamma);

/// Spinor norm via the (-1)-eigenspace split:
/// det(V-) * (-2)^{-(dim V - v-)} * q_-(-1), with V- the primary component
/// at -1 (the unipotent part there contributes trivially).  Agrees with
/// zassenhaus whenever that formula applies.
SquareClass spinor_norm(const BilinearSpace& space, const Matrix& gamma);

/// The reflection v -> v - 2 psi(w, v)/psi(w, w) w at an anisotropic w.
Matrix reflection(const BilinearSpace& space, const Matrix& w);

/// Constructive decomposition of an isometry into at most 2*dim reflections
/// at anisotropic vectors; returns the vectors in composition order.
std::vector<Matrix> reflection_decomposition(const BilinearSpace& space,
                                             const Matrix& gamma);

/// Independent spinor-norm oracle: the product of the classes psi(w, w)
/// over a reflection decomposition.
SquareClass spinor_norm_by_reflections(const BilinearSpace& space,
                                       const Matrix& gamma);

/// Class of det of the Gram matrix.
SquareClass det_class(const BilinearSpace& space);
/// Class of (-1)^{d(d-1)/2} det.
SquareClass disc(const BilinearSpace& space);

/// Checks det(V) = det(V-) det(V+) q0(-1) q0(1) modulo squares, where V+-
/// are the (+-1)-eigenspaces of gamma and q = (T-1)^{v+} (T+1)^{v-} q0.
bool disc_relation_check(const BilinearSpace& space, const Matrix& gamma);

/// Checks disc(q) = (-1)^m q(-1) q(1) modulo squares for monic separable
/// reciprocal q of even degree 2m.
bool edwards_disc_check(const Poly& q);

/// Checks disc(V) = disc(q) modulo squares for an isometry with separable
/// reciprocal characteristic polynomial of even degree.
bool baeza_edwards_check(const BilinearSpace& space, const Matrix& gamma);

}  // namespace skewbez
