#pragma once

#include <optional>
#include <vector>

#include "skewbez/bezoutian.hpp"

namespace skewbez {

/// A space-with-isometry produced by the synthesis operations, together
/// with the V0 | V+ | V- decomposition it was assembled from (possibly
/// trivial: the symplectic path uses a single Bezoutian block).
struct SynthesisResult {
  BilinearSpace space;
  Matrix gamma;
  Poly companion_p;  // the p of the Bezoutian block; constant 1 when absent

  struct Blocks {
    int d0;            // dimension of the Bezoutian block
    Poly p0, q0;       // its polynomial pair (1, 1 when absent)
    int v_plus, v_minus;
    std::vector<Scalar> plus_form, minus_form;  // diagonal forms on V+, V-
  } blocks;
};

/// Skew-symmetric space of determinant exactly 1 carrying an isometry with
/// characteristic polynomial q; realized as B(q + T^{d/2}, q).  Requires q
/// monic reciprocal of even degree >= 2.
SynthesisResult symplectic_with_charpoly(const Poly& q);

/// Symmetric nondegenerate space with char_poly(gamma) = q, built as
/// B((T-1)^e (T+1)^{d0-e}, q0) orthogonal to diagonal blocks on which gamma
/// acts as +1 and -1.  e must be odd and 0 <= e <= d0 (ignored when d0 = 0);
/// the diagonal forms default to identity.
SynthesisResult orthogonal_with_charpoly(
    const Poly& q, int e = 1,
    std::optional<std::vector<Scalar>> plus_form = std::nullopt,
    std::optional<std::vector<Scalar>> minus_form = std::nullopt);

/// Like orthogonal_with_charpoly but with prescribed spinor norm s, achieved
/// by choosing det(V-) in the class of s*q0(-1).  When q(-1) != 0 the spinor
/// norm is forced to the class of q0(-1) and any other request errors.
SynthesisResult orthogonal_with_spinor(const Poly& q, const SquareClass& s);

/// p +- x^m for monic reciprocal p of even degree 2m.  The result is
/// reciprocal and coprime to p.
Poly mpv_modification(const Poly& p, int sign);

}  // namespace skewbez
