#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewbez/bezoutian.hpp"

namespace skewbez {

struct JordanBlock {
  Scalar lambda;
  int size;
  int multiplicity;
};

/// Requested Jordan type of an isometry: a multiset of blocks (lambda, m)
/// with multiplicities, plus the symmetry type of the form.
struct JordanSpec {
  int epsilon;
  std::vector<JordanBlock> blocks;  // merged and sorted

  JordanSpec(int epsilon, std::vector<JordanBlock> blocks);
  const Field& field() const { return blocks.front().lambda.field(); }
  int dimension() const;
};

/// Whether the spec is realized by some isometry of a nondegenerate
/// epsilon-symmetric space: blocks at lambda != +-1 must pair with the
/// inverse eigenvalue, and at lambda = +-1 the multiplicity must be even
/// for even sizes (epsilon = +1) resp. odd sizes (epsilon = -1).
bool feasible(const JordanSpec& spec);

/// Empty when feasible, otherwise the violated condition.
std::optional<std::string> infeasibility(const JordanSpec& spec);

struct Realization {
  BilinearSpace space;
  Matrix isometry;
};

/// Constructs a nondegenerate space and isometry with the requested Jordan
/// type, as an orthogonal sum of Bezoutian blocks for eigenvalue pairs,
/// single blocks at +-1 where parity allows, and doubled blocks otherwise.
/// Errors on infeasible specs, citing the violated condition.
Realization realize(const JordanSpec& spec);

/// Jordan multiplicities by the rank formula
/// mu(lambda, m) = rank(B^{m-1}) - 2 rank(B^m) + rank(B^{m+1}), B = M - lambda.
/// Requires the characteristic polynomial to split over the field, checked
/// by trial root extraction; errors otherwise.
std::vector<JordanBlock> jordan_multiplicities(const Matrix& m);

struct NecessityReport {
  bool multiplicity_symmetry;  // mu(lambda, m) = mu(1/lambda, m) off +-1
  bool blocks_orthogonal;      // distinct W_lambda pair to zero
  bool parity;                 // even multiplicities where the form demands
  bool pass() const { return multiplicity_symmetry && blocks_orthogonal && parity; }
};

/// Checks the necessary conditions on a genuine isometry with split
/// characteristic polynomial; all three must hold.
NecessityReport verify_necessity(const BilinearSpace& space, const Matrix& m);

/// Distinct roots of f lying in its field (rational root test over Q, full
/// residue scan over F_p).  Errors when f does not split.
std::vector<Scalar> split_roots(const Poly& f);

}  // namespace skewbez
