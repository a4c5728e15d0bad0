#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewbez/field.hpp"
#include "skewbez/matrix.hpp"

namespace skewbez {

/// Dense univariate polynomial with exact coefficients, stored ascending.
/// The zero polynomial has an empty coefficient list and degree -1.
class Poly {
 public:
  explicit Poly(const Field& f) : field_(f) {}
  Poly(const Field& f, std::vector<Scalar> ascending);

  static Poly constant(const Field& f, const Scalar& c);
  static Poly from_ints(const Field& f, const std::vector<long>& ascending);
  /// T^k
  static Poly x_power(const Field& f, int k);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  const Scalar& leading() const;
  /// Coefficient of T^k; zero outside the stored range.
  Scalar coeff(int k) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar eval(const Scalar& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& s) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Quotient and remainder; the divisor's leading coefficient is inverted.
  std::pair<Poly, Poly> divrem(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divrem(d).first; }
  Poly operator%(const Poly& d) const { return divrem(d).second; }
  Poly pow(unsigned n) const;
  Poly derivative() const;
  Poly monic() const;

  /// Prints with explicit powers and descending exponents, "x^8+2x^7-...".
  std::string str() const;

 private:
  void normalize();

  Field field_;
  std::vector<Scalar> coeffs_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic unless zero

/// Coefficient reversal T^deg(p) * p(1/T).  Errors on the zero polynomial.
Poly reverse(const Poly& p);

enum class Reciprocity { reciprocal, skew_reciprocal, neither };
Reciprocity reciprocity_type(const Poly& p);

/// Largest j with (T - sign)^j dividing p, sign = +1 or -1.
int valuation_pm(const Poly& p, int sign);

struct PmFactorization {
  int v_plus;
  int v_minus;
  Poly q0;  // q0(+-1) != 0
};
/// q = (T-1)^{v+} (T+1)^{v-} q0 for monic q.
PmFactorization factor_pm_one(const Poly& q);

/// Res(p, q) = lc(p)^{deg q} * prod of q over the roots of p.  With p monic
/// this is exactly prod_{p(a)=0} q(a); the other classical order differs by
/// (-1)^{deg p * deg q}.
Scalar resultant(const Poly& p, const Poly& q);

/// (-1)^{d(d-1)/2} Res(q, q') for monic q of degree d >= 1; zero iff q is
/// inseparable.
Scalar discriminant(const Poly& q);

/// Multiset of cyclotomic factors (index, exponent).
struct CyclotomicProduct {
  std::vector<std::pair<unsigned, unsigned>> factors;

  /// "Phi1^3*Phi2*Phi15"
  static CyclotomicProduct parse(const std::string& text);
  unsigned degree() const;
  std::string str() const;
  void normalize();  // sort by index, merge duplicates
  bool operator==(const CyclotomicProduct& o) const { return factors == o.factors; }
  bool operator<(const CyclotomicProduct& o) const { return factors < o.factors; }
};

unsigned euler_phi(unsigned n);
Poly cyclotomic(const Field& f, unsigned n);
Poly expand(const Field& f, const CyclotomicProduct& cp);

/// c_1..c_N of the power-series expansion 1 + c_1 T + ... of -eps*p/q at 0
/// (c_0 = 1 is implicit).
struct SeriesPrefix {
  std::vector<Scalar> c;
  /// c_n for n >= 0.
  const Scalar& at(int n) const;
  Scalar c0;  // always 1; kept so at(0) can return a reference
};
/// n_terms defaults to deg q - 1, all the Gram matrix needs.
SeriesPrefix series_coefficients(const Poly& p, const Poly& q, int epsilon,
                                 int n_terms = -1);

/// Exact monic characteristic polynomial det(T*I - M), computed
/// division-free so small prime fields are safe.
Poly char_poly(const Matrix& m);

/// Accepts an ascending coefficient list "-1,-2,-2,-1,0,1,2,2,1" or
/// cyclotomic notation "Phi1*Phi2^3*Phi15".
Poly parse_poly(const std::string& text, const Field& f);

}  // namespace skewbez
