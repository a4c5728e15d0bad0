#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewbez {

/// Raised when an operation is called outside its mathematical domain
/// (violated precondition, malformed input, unsupported field).
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a condition the theory guarantees fails to hold.
/// Indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The coefficient field: Q, or F_p for an odd prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime_field(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint64_t modulus() const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 encodes Q
};

/// An exact scalar: an arbitrary-precision rational over Q, the canonical
/// residue in [0, p) over F_p.  Arithmetic never rounds.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), v_(0) {}
  Scalar(const Field& f, mpq_class v) : field_(f), v_(std::move(v)) { reduce(); }

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  static Scalar of_int(const Field& f, long n) { return Scalar(f, n); }
  static Scalar of_fraction(const Field& f, long num, long den);

  /// Accepts "a", "a/b" and, over F_p, "r mod p".  A Unicode minus sign
  /// is treated as '-'.
  static Scalar parse(const std::string& text, const Field& f);

  const Field& field() const { return field_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "-3/7" over Q, "5 mod 13" over F_13.
  std::string str() const;

 private:
  void reduce();

  Field field_;
  mpq_class v_;
};

/// A class in k*/(k*)^2.  Canonical representative: over Q the signed
/// squarefree integer, over F_p either 1 or the least positive quadratic
/// nonresidue.
class SquareClass {
 public:
  static SquareClass one(const Field& f);
  static SquareClass of(const Scalar& x);

  SquareClass operator*(const SquareClass& o) const;

  const Field& field() const { return field_; }
  const mpz_class& representative() const { return rep_; }
  bool is_trivial() const { return rep_ == 1; }
  Scalar as_scalar() const;

  bool operator==(const SquareClass& o) const;
  bool operator!=(const SquareClass& o) const { return !(*this == o); }

  std::string str() const;

 private:
  SquareClass(Field f, mpz_class rep) : field_(f), rep_(std::move(rep)) {}

  Field field_;
  mpz_class rep_;
};

namespace detail {

void require_same_field(const Field& a, const Field& b, const char* what);

/// Factorization of a positive integer: trial division up to
/// kTrialDivisionBound, then Pollard-Brent rho within a fixed iteration
/// budget.  Raises domain_error when a composite cofactor survives the
/// budget, rather than ever returning a non-canonical answer.
inline constexpr unsigned long kTrialDivisionBound = 1000000;
std::vector<std::pair<mpz_class, int>> factor_integer(const mpz_class& n);

/// Signed squarefree part of a nonzero integer.
mpz_class squarefree_part(const mpz_class& n);

/// Least positive quadratic nonresidue mod an odd prime.
mpz_class least_nonresidue(const mpz_class& p);

}  // namespace detail

}  // namespace skewbez
