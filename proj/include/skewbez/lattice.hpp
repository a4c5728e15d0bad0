#pragma once

#include <string>
#include <vector>

#include "skewbez/bezoutian.hpp"

namespace skewbez {

/// A symmetric Gram matrix over Z (stored with rational scalars, validated
/// integral on construction).
struct IntegerGram {
  Matrix gram;
  explicit IntegerGram(Matrix g);
  int rank() const { return gram.rows(); }
};

struct Signature {
  int n_plus, n_minus, n_zero;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia counts by exact congruence diagonalization over Q.
Signature signature(const IntegerGram& g);

/// Classification of a nondegenerate integer lattice: E8 (rank 8, even,
/// positive definite, det 1), A(n) (Gram literally equals the Cartan matrix
/// C_n), I(p,q) (odd indefinite unimodular of signature (p,q)),
/// even unimodular of a given signature, or the bare invariants.
struct LatticeClass {
  enum class Tag { E8, A, I, EvenUnimodular, Unclassified };

  Tag tag = Tag::Unclassified;
  int rank = 0;
  mpz_class det;
  // all diagonal entries even; then x^T G x is even for every integer x,
  // so this reading of parity does not depend on the basis
  bool even = false;
  Signature sig{0, 0, 0};
  int a_n = 0;  // the n of A(n)

  /// Equality of the classification itself (tag plus its defining
  /// parameters); unclassified lattices compare by their invariants.
  bool same_classification(const LatticeClass& o) const;

  /// Target acceptance for searches.  An I(p,q) target follows the table
  /// labeling "the unimodular lattice of signature (p,q)" and accepts an
  /// indefinite unimodular lattice of that signature of either parity;
  /// all other targets require the exact classification.
  bool accepts(const LatticeClass& computed) const;

  /// "E8", "I9,1", "A8", "An" (n taken from the degree argument).
  static LatticeClass parse_target(const std::string& text, int degree);

  std::string str() const;
};

LatticeClass classify(const IntegerGram& g);

/// The Cartan matrix C_n (2 on the diagonal, -1 off it).
Matrix cartan_matrix(int n);

/// All monic skew-reciprocal products of cyclotomic polynomials of the given
/// degree (odd multiplicity of Phi_1), in lexicographic factor order.
std::vector<CyclotomicProduct> skew_cyclotomic_products(int degree);

/// The products p with gcd(p, q) = 1 and classify(B(p, q)) equal to the
/// target, in deterministic lexicographic order.  Candidates are evaluated
/// in parallel when OpenMP is available; the result is identical to the
/// serial reference.
std::vector<CyclotomicProduct> search_cyclotomic(const Poly& q, int degree,
                                                 const LatticeClass& target);

/// Serial reference implementation of the same search.
std::vector<CyclotomicProduct> search_cyclotomic_serial(const Poly& q, int degree,
                                                        const LatticeClass& target);

}  // namespace skewbez
