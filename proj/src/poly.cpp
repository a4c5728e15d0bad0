#include "skewbez/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace skewbez {

Poly::Poly(const Field& f, std::vector<Scalar> ascending)
    : field_(f), coeffs_(std::move(ascending)) {
  for (const Scalar& c : coeffs_)
    detail::require_same_field(field_, c.field(), "polynomial coefficient");
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Field& f, const Scalar& c) {
  return Poly(f, std::vector<Scalar>{c});
}

Poly Poly::from_ints(const Field& f, const std::vector<long>& ascending) {
  std::vector<Scalar> cs;
  cs.reserve(ascending.size());
  for (long a : ascending) cs.push_back(Scalar::of_int(f, a));
  return Poly(f, std::move(cs));
}

Poly Poly::x_power(const Field& f, int k) {
  if (k < 0) throw domain_error("negative power of T");
  std::vector<Scalar> cs(static_cast<std::size_t>(k) + 1, Scalar::zero(f));
  cs.back() = Scalar::one(f);
  return Poly(f, std::move(cs));
}

const Scalar& Poly::leading() const {
  if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Scalar Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return Scalar::zero(field_);
  return coeffs_[static_cast<std::size_t>(k)];
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  detail::require_same_field(field_, o.field_, "polynomial addition");
  std::vector<Scalar> cs(std::max(coeffs_.size(), o.coeffs_.size()),
                         Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] += o.coeffs_[i];
  return Poly(field_, std::move(cs));
}

Poly Poly::operator-() const {
  std::vector<Scalar> cs;
  cs.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) cs.push_back(-c);
  return Poly(field_, std::move(cs));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  detail::require_same_field(field_, o.field_, "polynomial multiplication");
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Scalar> cs(coeffs_.size() + o.coeffs_.size() - 1,
                         Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      cs[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Poly(field_, std::move(cs));
}

Poly Poly::operator*(const Scalar& s) const {
  std::vector<Scalar> cs;
  cs.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) cs.push_back(c * s);
  return Poly(field_, std::move(cs));
}

bool Poly::operator==(const Poly& o) const {
  if (!(field_ == o.field_) || coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  detail::require_same_field(field_, d.field_, "polynomial division");
  if (d.is_zero()) throw domain_error("division by zero polynomial");
  if (degree() < d.degree()) return {Poly(field_), *this};
  std::vector<Scalar> rem = coeffs_;
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - d.degree()) + 1,
                           Scalar::zero(field_));
  Scalar lead_inv = d.leading().inverse();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    Scalar f = rem[static_cast<std::size_t>(k + d.degree())] * lead_inv;
    if (f.is_zero()) continue;
    quot[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= d.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= f * d.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Poly Poly::pow(unsigned n) const {
  Poly acc = Poly::constant(field_, Scalar::one(field_));
  Poly base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly(field_);
  std::vector<Scalar> cs;
  cs.reserve(coeffs_.size() - 1);
  for (int k = 1; k <= degree(); ++k)
    cs.push_back(coeffs_[static_cast<std::size_t>(k)] * Scalar::of_int(field_, k));
  return Poly(field_, std::move(cs));
}

Poly Poly::monic() const {
  if (is_zero()) throw domain_error("cannot normalize zero polynomial");
  return *this * leading().inverse();
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  bool rational = field_.is_rational();
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Scalar c = coeff(k);
    if (c.is_zero()) continue;
    bool negative = rational && sgn(c.value()) < 0;
    std::string mag =
        rational ? mpq_class(abs(c.value())).get_str() : c.value().get_num().get_str();
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? '-' : '+');
    }
    if (mag != "1" || k == 0) out << mag;
    if (k >= 1) {
      out << 'x';
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly f = a, g = b;
  while (!g.is_zero()) {
    Poly r = f % g;
    f = g;
    g = r;
  }
  return f.is_zero() ? f : f.monic();
}

Poly reverse(const Poly& p) {
  if (p.is_zero()) throw domain_error("reversal of zero polynomial");
  std::vector<Scalar> cs(p.coeffs().rbegin(), p.coeffs().rend());
  return Poly(p.field(), std::move(cs));
}

Reciprocity reciprocity_type(const Poly& p) {
  Poly rev = reverse(p);
  if (rev == p) return Reciprocity::reciprocal;
  if (rev == -p) return Reciprocity::skew_reciprocal;
  return Reciprocity::neither;
}

int valuation_pm(const Poly& p, int sign) {
  if (sign != 1 && sign != -1) throw domain_error("valuation sign must be +1 or -1");
  if (p.is_zero()) throw domain_error("valuation of zero polynomial");
  const Field& f = p.field();
  Scalar root = Scalar::of_int(f, sign);
  Poly factor = Poly::from_ints(f, {-sign, 1});  // T - sign
  Poly cur = p;
  int v = 0;
  while (cur.degree() >= 1 && cur.eval(root).is_zero()) {
    auto [quot, rem] = cur.divrem(factor);
    if (!rem.is_zero()) throw internal_error("valuation division left a remainder");
    cur = quot;
    ++v;
  }
  return v;
}

PmFactorization factor_pm_one(const Poly& q) {
  if (q.is_zero() || !q.is_monic())
    throw domain_error("factor_pm_one requires a monic polynomial");
  const Field& f = q.field();
  int vp = valuation_pm(q, +1);
  int vm = valuation_pm(q, -1);
  Poly q0 = q;
  q0 = q0 / Poly::from_ints(f, {-1, 1}).pow(static_cast<unsigned>(vp));
  q0 = q0 / Poly::from_ints(f, {1, 1}).pow(static_cast<unsigned>(vm));
  return {vp, vm, q0};
}

Scalar resultant(const Poly& p, const Poly& q) {
  detail::require_same_field(p.field(), q.field(), "resultant");
  if (p.is_zero() || q.is_zero())
    throw domain_error("resultant of the zero polynomial");
  const Field& field = p.field();
  Poly f = p, g = q;
  Scalar acc = Scalar::one(field);
  while (true) {
    if (f.degree() == 0) return acc * f.leading().pow(g.degree());
    if (g.degree() == 0) return acc * g.leading().pow(f.degree());
    Poly r = f % g;
    if (r.is_zero()) return Scalar::zero(field);
    if ((f.degree() % 2) && (g.degree() % 2)) acc = -acc;
    acc *= g.leading().pow(f.degree() - r.degree());
    f = g;
    g = r;
  }
}

Scalar discriminant(const Poly& q) {
  if (q.is_zero() || !q.is_monic())
    throw domain_error("discriminant requires a monic polynomial");
  if (q.degree() < 1) throw domain_error("discriminant requires degree >= 1");
  Poly dq = q.derivative();
  if (dq.is_zero()) return Scalar::zero(q.field());
  Scalar r = resultant(q, dq);
  long d = q.degree();
  if ((d * (d - 1) / 2) % 2) r = -r;
  return r;
}

unsigned euler_phi(unsigned n) {
  if (n == 0) throw domain_error("euler_phi(0) undefined");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

const Poly& cyclotomic_over_q(unsigned n, std::map<unsigned, Poly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Field q = Field::rationals();
  Poly num = Poly::x_power(q, static_cast<int>(n)) -
             Poly::constant(q, Scalar::one(q));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    auto [quot, rem] = num.divrem(cyclotomic_over_q(d, cache));
    if (!rem.is_zero()) throw internal_error("cyclotomic division left a remainder");
    num = quot;
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

Poly cyclotomic(const Field& f, unsigned n) {
  if (n == 0) throw domain_error("cyclotomic index must be >= 1");
  static std::map<unsigned, Poly> cache;
  static std::mutex mu;
  Poly over_q = [&] {
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_over_q(n, cache);
  }();
  if (f.is_rational()) return over_q;
  std::vector<Scalar> cs;
  cs.reserve(over_q.coeffs().size());
  for (const Scalar& c : over_q.coeffs()) cs.emplace_back(f, c.value());
  return Poly(f, std::move(cs));
}

unsigned CyclotomicProduct::degree() const {
  unsigned d = 0;
  for (auto [n, e] : factors) d += e * euler_phi(n);
  return d;
}

void CyclotomicProduct::normalize() {
  std::sort(factors.begin(), factors.end());
  std::vector<std::pair<unsigned, unsigned>> merged;
  for (auto [n, e] : factors) {
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == n)
      merged.back().second += e;
    else
      merged.emplace_back(n, e);
  }
  factors = std::move(merged);
}

std::string CyclotomicProduct::str() const {
  if (factors.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (auto [n, e] : factors) {
    if (!first) out << '*';
    first = false;
    out << "Phi" << n;
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

CyclotomicProduct CyclotomicProduct::parse(const std::string& text) {
  CyclotomicProduct cp;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t star = s.find('*', pos);
    std::string tok = s.substr(pos, star == std::string::npos ? star : star - pos);
    pos = star == std::string::npos ? s.size() : star + 1;
    if (tok.rfind("Phi", 0) != 0)
      throw domain_error("cannot parse cyclotomic factor '" + tok + "'");
    std::string body = tok.substr(3);
    unsigned long n = 0, e = 1;
    std::size_t caret = body.find('^');
    try {
      n = std::stoul(body.substr(0, caret));
      if (caret != std::string::npos) e = std::stoul(body.substr(caret + 1));
    } catch (const std::exception&) {
      throw domain_error("cannot parse cyclotomic factor '" + tok + "'");
    }
    if (n == 0) throw domain_error("cyclotomic index must be >= 1");
    if (e == 0) throw domain_error("cyclotomic exponent must be >= 1");
    cp.factors.emplace_back(static_cast<unsigned>(n), static_cast<unsigned>(e));
  }
  if (cp.factors.empty()) throw domain_error("empty cyclotomic product");
  cp.normalize();
  return cp;
}

Poly expand(const Field& f, const CyclotomicProduct& cp) {
  Poly acc = Poly::constant(f, Scalar::one(f));
  for (auto [n, e] : cp.factors) acc = acc * cyclotomic(f, n).pow(e);
  return acc;
}

const Scalar& SeriesPrefix::at(int n) const {
  if (n == 0) return c0;
  if (n < 1 || n > static_cast<int>(c.size()))
    throw internal_error("series prefix does not hold c_" + std::to_string(n));
  return c[static_cast<std::size_t>(n - 1)];
}

SeriesPrefix series_coefficients(const Poly& p, const Poly& q, int epsilon,
                                 int n_terms) {
  detail::require_same_field(p.field(), q.field(), "series expansion");
  if (epsilon != 1 && epsilon != -1)
    throw domain_error("epsilon must be +1 or -1");
  if (p.is_zero() || q.is_zero())
    throw domain_error("series expansion of the zero polynomial");
  if (!p.is_monic() || !q.is_monic())
    throw domain_error("series expansion requires monic p and q");
  if (p.degree() != q.degree())
    throw domain_error("series expansion requires deg p = deg q, got " +
                       std::to_string(p.degree()) + " and " +
                       std::to_string(q.degree()));
  if (reciprocity_type(q) != Reciprocity::reciprocal)
    throw domain_error("series expansion: q must be reciprocal");
  Reciprocity want = epsilon == 1 ? Reciprocity::skew_reciprocal
                                  : Reciprocity::reciprocal;
  if (reciprocity_type(p) != want)
    throw domain_error(epsilon == 1
                           ? "series expansion: p must be skew-reciprocal for epsilon=+1"
                           : "series expansion: p must be reciprocal for epsilon=-1");
  if (n_terms == -1) n_terms = q.degree() - 1;
  if (n_terms < 0) throw domain_error("series length must be >= 0");

  const Field& f = p.field();
  int d = q.degree();
  Scalar eps = Scalar::of_int(f, epsilon);
  SeriesPrefix out;
  out.c0 = Scalar::one(f);
  out.c.reserve(static_cast<std::size_t>(n_terms));
  // q * (1 + sum c_n T^n) = -eps * p, solved coefficient by coefficient;
  // q(0) = 1 because q is monic reciprocal.
  for (int n = 1; n <= n_terms; ++n) {
    Scalar cn = -(eps * p.coeff(n));
    for (int k = 1; k <= std::min(n, d); ++k) cn -= q.coeff(k) * out.at(n - k);
    out.c.push_back(cn);
  }
  return out;
}

Poly char_poly(const Matrix& m) {
  if (!m.is_square())
    throw domain_error("characteristic polynomial needs a square matrix");
  const Field& f = m.field();
  int n = m.rows();
  if (n == 0) return Poly::constant(f, Scalar::one(f));

  // Samuelson-Berkowitz: division-free, so small prime characteristics are
  // safe.  V holds descending coefficients for the leading principal block.
  std::vector<Scalar> v = {Scalar::one(f), -m.at(0, 0)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Scalar> t(static_cast<std::size_t>(k) + 1, Scalar::zero(f));
    t[0] = Scalar::one(f);
    t[1] = -m.at(k - 1, k - 1);
    std::vector<Scalar> w(static_cast<std::size_t>(k) - 1, Scalar::zero(f));
    for (int i = 0; i < k - 1; ++i) w[static_cast<std::size_t>(i)] = m.at(i, k - 1);
    for (int j = 2; j <= k; ++j) {
      Scalar dot = Scalar::zero(f);
      for (int i = 0; i < k - 1; ++i)
        dot += m.at(k - 1, i) * w[static_cast<std::size_t>(i)];
      t[static_cast<std::size_t>(j)] = -dot;
      if (j < k) {
        std::vector<Scalar> w2(w.size(), Scalar::zero(f));
        for (int r = 0; r < k - 1; ++r)
          for (int c = 0; c < k - 1; ++c) {
            if (m.at(r, c).is_zero() || w[static_cast<std::size_t>(c)].is_zero())
              continue;
            w2[static_cast<std::size_t>(r)] +=
                m.at(r, c) * w[static_cast<std::size_t>(c)];
          }
        w = std::move(w2);
      }
    }
    std::vector<Scalar> nv(static_cast<std::size_t>(k) + 1, Scalar::zero(f));
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= std::min(i, k); ++j) {
        int vi = i - j;
        if (vi >= static_cast<int>(v.size())) continue;
        if (t[static_cast<std::size_t>(j)].is_zero()) continue;
        nv[static_cast<std::size_t>(i)] +=
            t[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(vi)];
      }
    v = std::move(nv);
  }
  std::vector<Scalar> asc(v.rbegin(), v.rend());
  return Poly(f, std::move(asc));
}

Poly parse_poly(const std::string& text, const Field& f) {
  if (text.find("Phi") != std::string::npos)
    return expand(f, CyclotomicProduct::parse(text));
  std::vector<Scalar> cs;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) cs.push_back(Scalar::parse(cur, f));
  if (cs.empty()) throw domain_error("empty polynomial text");
  return Poly(f, std::move(cs));
}

}  // namespace skewbez
