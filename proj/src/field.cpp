#include "skewbez/field.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace skewbez {

namespace detail {

void require_same_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b))
    throw domain_error(std::string(what) + ": mismatched fields " + a.name() +
                       " and " + b.name());
}

namespace {

// Brent's cycle variant of Pollard rho.  Returns a nontrivial factor of the
// odd composite n, or 0 if the iteration budget runs out.
mpz_class pollard_brent(const mpz_class& n, unsigned long c0) {
  const long kBudget = 2000000;
  mpz_class y = 2, c = c0, g = 1, q = 1, x, ys;
  long r = 1, spent = 0;
  const long block = 128;
  while (g == 1 && spent < kBudget) {
    x = y;
    for (long i = 0; i < r; ++i) y = (y * y + c) % n;
    for (long k = 0; k < r && g == 1 && spent < kBudget; k += block) {
      ys = y;
      long steps = std::min(block, r - k);
      for (long i = 0; i < steps; ++i) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      spent += steps;
      g = gcd(q, n);
    }
    r *= 2;
  }
  if (g == n) {
    // a whole block collapsed; replay one step at a time
    do {
      ys = (ys * ys + c) % n;
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return (g == 1 || g == n) ? mpz_class(0) : g;
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factor_integer(const mpz_class& n) {
  if (n <= 0) throw domain_error("factorization of a nonpositive integer");
  std::vector<std::pair<mpz_class, int>> factors;
  mpz_class m = n;

  auto strip = [&](unsigned long d) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  };

  strip(2);
  auto limit = [&] {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return r.fits_ulong_p() ? std::min(r.get_ui(), kTrialDivisionBound)
                            : kTrialDivisionBound;
  };
  if (m > 1 && !mpz_probab_prime_p(m.get_mpz_t(), 40)) {
    unsigned long lim = limit();
    for (unsigned long d = 3; d <= lim && m > 1; d += 2)
      if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
        strip(d);
        lim = limit();
      }
  }

  // Split what survives with rho; every part is either certified (probable)
  // prime or split further, so results are never non-canonical.
  std::vector<std::pair<mpz_class, int>> stack;
  if (m > 1) stack.emplace_back(m, 1);
  while (!stack.empty()) {
    auto [value, mult] = stack.back();
    stack.pop_back();
    if (mpz_probab_prime_p(value.get_mpz_t(), 40)) {
      factors.emplace_back(value, mult);
      continue;
    }
    if (mpz_perfect_power_p(value.get_mpz_t())) {
      for (unsigned long k = 2; k <= mpz_sizeinbase(value.get_mpz_t(), 2); ++k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), k)) {
          stack.emplace_back(root, mult * static_cast<int>(k));
          break;
        }
      }
      continue;
    }
    mpz_class g = 0;
    for (unsigned long c = 1; c <= 11 && g == 0; c += 2)
      g = pollard_brent(value, c);
    if (g == 0)
      throw domain_error("factorization: composite cofactor " + value.get_str() +
                         " resisted trial division to " +
                         std::to_string(kTrialDivisionBound) +
                         " and the rho budget");
    stack.emplace_back(g, mult);
    stack.emplace_back(value / g, mult);
  }

  // merge repeated primes from different split paths
  std::sort(factors.begin(), factors.end());
  std::vector<std::pair<mpz_class, int>> merged;
  for (auto& [p, e] : factors) {
    if (!merged.empty() && merged.back().first == p)
      merged.back().second += e;
    else
      merged.emplace_back(p, e);
  }
  return merged;
}

mpz_class squarefree_part(const mpz_class& n) {
  if (n == 0) throw domain_error("squarefree part of zero undefined");
  mpz_class rep = (n < 0) ? -1 : 1;
  for (const auto& [p, e] : factor_integer(abs(n)))
    if (e % 2) rep *= p;
  return rep;
}

mpz_class least_nonresidue(const mpz_class& p) {
  mpz_class e = (p - 1) / 2;
  for (mpz_class a = 2; a < p; ++a) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (r != 1) return a;
  }
  throw internal_error("no quadratic nonresidue found mod " + p.get_str());
}

namespace {

bool is_square_mod(const mpz_class& x, const mpz_class& p) {
  mpz_class e = (p - 1) / 2, r;
  mpz_powm(r.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r == 1;
}

std::string normalize_minus(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    // U+2212 minus sign, UTF-8 e2 88 92
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xe2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      out += '-';
      i += 3;
    } else {
      out += s[i++];
    }
  }
  return out;
}

}  // namespace
}  // namespace detail

Field Field::prime_field(std::uint64_t p) {
  mpz_class m(static_cast<unsigned long>(p));
  if (p < 3 || p % 2 == 0 || !mpz_probab_prime_p(m.get_mpz_t(), 40))
    throw domain_error("field characteristic must be an odd prime, got " +
                       std::to_string(p));
  return Field(p);
}

std::uint64_t Field::modulus() const {
  if (is_rational()) throw domain_error("Q has no modulus");
  return p_;
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

void Scalar::reduce() {
  if (field_.is_prime_field()) {
    mpz_class p(static_cast<unsigned long>(field_.modulus()));
    mpz_class num = v_.get_num(), den = v_.get_den(), r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    if (den != 1) {
      mpz_class dinv;
      mpz_fdiv_r(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw domain_error("denominator not invertible mod " + p.get_str());
      r = (r * dinv) % p;
    }
    v_ = mpq_class(r);
  } else {
    v_.canonicalize();
  }
}

Scalar Scalar::of_fraction(const Field& f, long num, long den) {
  if (den == 0) throw domain_error("division by zero");
  mpq_class v(num, den);
  v.canonicalize();
  return Scalar(f, v);
}

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::operator+(const Scalar& o) const {
  detail::require_same_field(field_, o.field_, "scalar addition");
  return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  detail::require_same_field(field_, o.field_, "scalar subtraction");
  return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  detail::require_same_field(field_, o.field_, "scalar multiplication");
  return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  detail::require_same_field(field_, o.field_, "scalar division");
  if (o.is_zero()) throw domain_error("division by zero");
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw domain_error("inverse of zero");
  if (field_.is_rational()) return Scalar(field_, 1 / v_);
  mpz_class p(static_cast<unsigned long>(field_.modulus()));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(field_, mpq_class(inv));
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = Scalar::one(field_);
  Scalar base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  detail::require_same_field(field_, o.field_, "scalar comparison");
  return v_ == o.v_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return v_.get_str();
  return v_.get_num().get_str() + " mod " + std::to_string(field_.modulus());
}

Scalar Scalar::parse(const std::string& raw, const Field& f) {
  std::string text = detail::normalize_minus(raw);
  // strip whitespace
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw domain_error("empty scalar");

  auto mod_pos = s.find("mod");
  if (mod_pos != std::string::npos) {
    if (!f.is_prime_field())
      throw domain_error("residue notation '" + raw + "' requires a prime field");
    std::string res = s.substr(0, mod_pos), mod = s.substr(mod_pos + 3);
    try {
      mpz_class p(mod), r(res);
      if (p != mpz_class(static_cast<unsigned long>(f.modulus())))
        throw domain_error("scalar '" + raw + "' has modulus " + p.get_str() +
                           ", field is " + f.name());
      return Scalar(f, mpq_class(r));
    } catch (const std::invalid_argument&) {
      throw domain_error("cannot parse scalar '" + raw + "'");
    }
  }
  try {
    mpq_class v(s);
    v.canonicalize();
    return Scalar(f, v);
  } catch (const std::invalid_argument&) {
    throw domain_error("cannot parse scalar '" + raw + "'");
  }
}

SquareClass SquareClass::one(const Field& f) { return SquareClass(f, 1); }

SquareClass SquareClass::of(const Scalar& x) {
  if (x.is_zero()) throw domain_error("square class of zero undefined");
  const Field& f = x.field();
  if (f.is_rational()) {
    mpz_class n = x.value().get_num() * x.value().get_den();
    return SquareClass(f, detail::squarefree_part(n));
  }
  mpz_class p(static_cast<unsigned long>(f.modulus()));
  if (detail::is_square_mod(x.value().get_num(), p)) return SquareClass(f, 1);
  return SquareClass(f, detail::least_nonresidue(p));
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
  detail::require_same_field(field_, o.field_, "square-class multiplication");
  if (field_.is_rational()) {
    // Both representatives are squarefree, so dividing by gcd^2 recanonicalizes.
    mpz_class g = gcd(rep_, o.rep_);
    return SquareClass(field_, rep_ / g * (o.rep_ / g));
  }
  if (is_trivial()) return o;
  if (o.is_trivial()) return *this;
  return SquareClass(field_, 1);
}

Scalar SquareClass::as_scalar() const {
  return Scalar(field_, mpq_class(rep_));
}

bool SquareClass::operator==(const SquareClass& o) const {
  detail::require_same_field(field_, o.field_, "square-class comparison");
  return rep_ == o.rep_;
}

std::string SquareClass::str() const {
  if (field_.is_rational()) return rep_.get_str();
  std::string mod = std::to_string(field_.modulus());
  return is_trivial() ? "square mod " + mod : "nonsquare mod " + mod;
}

}  // namespace skewbez
