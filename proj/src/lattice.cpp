#include "skewbez/lattice.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewbez {

IntegerGram::IntegerGram(Matrix g) : gram(std::move(g)) {
  if (!gram.field().is_rational())
    throw domain_error("integer lattices live over Z; got " + gram.field().name());
  if (!gram.is_symmetric())
    throw domain_error("lattice Gram matrix must be symmetric");
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = 0; j < gram.cols(); ++j)
      if (gram.at(i, j).value().get_den() != 1)
        throw domain_error("lattice Gram matrix must have integer entries");
}

Signature signature(const IntegerGram& g) {
  Matrix a = g.gram;
  int n = a.rows();
  Signature sig{0, 0, 0};
  for (int i = 0; i < n; ++i) {
    if (a.at(i, i).is_zero()) {
      int swap_j = -1, mix_j = -1;
      for (int j = i + 1; j < n; ++j) {
        if (swap_j < 0 && !a.at(j, j).is_zero()) swap_j = j;
        if (mix_j < 0 && !a.at(i, j).is_zero()) mix_j = j;
      }
      if (swap_j >= 0) {
        for (int k = 0; k < n; ++k) std::swap(a.at(i, k), a.at(swap_j, k));
        for (int k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, swap_j));
      } else if (mix_j >= 0) {
        // zero diagonal block: add row/column j to i, giving pivot 2 a_ij
        for (int k = 0; k < n; ++k) a.at(i, k) += a.at(mix_j, k);
        for (int k = 0; k < n; ++k) a.at(k, i) += a.at(k, mix_j);
      } else {
        ++sig.n_zero;  // row i is zero on the remaining block
        continue;
      }
    }
    Scalar pivot = a.at(i, i);
    if (sgn(pivot.value()) > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    Scalar inv = pivot.inverse();
    for (int j = i + 1; j < n; ++j) {
      if (a.at(j, i).is_zero()) continue;
      Scalar factor = a.at(j, i) * inv;
      for (int k = 0; k < n; ++k) a.at(j, k) -= factor * a.at(i, k);
      for (int k = 0; k < n; ++k) a.at(k, j) -= factor * a.at(k, i);
    }
  }
  return sig;
}

Matrix cartan_matrix(int n) {
  Field f = Field::rationals();
  Matrix c(f, n, n);
  for (int i = 0; i < n; ++i) {
    c.at(i, i) = Scalar::of_int(f, 2);
    if (i + 1 < n) {
      c.at(i, i + 1) = Scalar::of_int(f, -1);
      c.at(i + 1, i) = Scalar::of_int(f, -1);
    }
  }
  return c;
}

LatticeClass classify(const IntegerGram& g) {
  Scalar det = g.gram.det();
  if (det.is_zero()) throw domain_error("classify requires a nondegenerate Gram matrix");

  LatticeClass cls;
  cls.rank = g.rank();
  cls.det = mpz_class(det.value());
  cls.sig = signature(g);
  cls.even = true;
  for (int i = 0; i < g.rank(); ++i)
    if (mpz_class(g.gram.at(i, i).value()) % 2 != 0) cls.even = false;

  bool unimodular = cls.det == 1 || cls.det == -1;
  bool definite = cls.sig.n_minus == 0 || cls.sig.n_plus == 0;
  if (cls.rank == 8 && cls.even && cls.sig == Signature{8, 0, 0} && cls.det == 1) {
    cls.tag = LatticeClass::Tag::E8;
  } else if (g.gram == cartan_matrix(cls.rank)) {
    cls.tag = LatticeClass::Tag::A;
    cls.a_n = cls.rank;
  } else if (unimodular && !cls.even && !definite) {
    cls.tag = LatticeClass::Tag::I;
  } else if (unimodular && cls.even) {
    cls.tag = LatticeClass::Tag::EvenUnimodular;
  }
  return cls;
}

bool LatticeClass::same_classification(const LatticeClass& o) const {
  if (tag != o.tag) return false;
  switch (tag) {
    case Tag::E8:
      return true;
    case Tag::A:
      return a_n == o.a_n;
    case Tag::I:
      return sig.n_plus == o.sig.n_plus && sig.n_minus == o.sig.n_minus;
    case Tag::EvenUnimodular:
      return sig == o.sig;
    case Tag::Unclassified:
      return rank == o.rank && det == o.det && even == o.even && sig == o.sig;
  }
  return false;
}

bool LatticeClass::accepts(const LatticeClass& computed) const {
  if (tag == Tag::I) {
    bool unimodular = computed.det == 1 || computed.det == -1;
    bool indefinite = computed.sig.n_plus > 0 && computed.sig.n_minus > 0;
    return unimodular && indefinite && computed.sig.n_plus == sig.n_plus &&
           computed.sig.n_minus == sig.n_minus;
  }
  return same_classification(computed);
}

LatticeClass LatticeClass::parse_target(const std::string& text, int degree) {
  LatticeClass t;
  if (text == "E8") {
    t.tag = Tag::E8;
    return t;
  }
  if (text == "An") {
    t.tag = Tag::A;
    t.a_n = degree;
    return t;
  }
  if (!text.empty() && text[0] == 'A') {
    t.tag = Tag::A;
    t.a_n = std::stoi(text.substr(1));
    return t;
  }
  if (!text.empty() && text[0] == 'I') {
    auto comma = text.find(',');
    if (comma == std::string::npos)
      throw domain_error("cannot parse lattice target '" + text + "'");
    t.tag = Tag::I;
    t.sig.n_plus = std::stoi(text.substr(1, comma - 1));
    t.sig.n_minus = std::stoi(text.substr(comma + 1));
    return t;
  }
  throw domain_error("cannot parse lattice target '" + text + "'");
}

std::string LatticeClass::str() const {
  std::ostringstream out;
  switch (tag) {
    case Tag::E8:
      return "E8";
    case Tag::A:
      out << "A" << a_n;
      return out.str();
    case Tag::I:
      out << "I" << sig.n_plus << "," << sig.n_minus;
      return out.str();
    case Tag::EvenUnimodular:
      out << "even unimodular, signature (" << sig.n_plus << "," << sig.n_minus << ")";
      return out.str();
    case Tag::Unclassified:
      break;
  }
  out << "unclassified: rank " << rank << ", det " << det.get_str() << ", "
      << (even ? "even" : "odd") << ", signature (" << sig.n_plus << ","
      << sig.n_minus << ")";
  return out.str();
}

namespace {

void enumerate_rec(const std::vector<std::pair<unsigned, unsigned>>& indices,
                   std::size_t pos, int remaining,
                   std::vector<std::pair<unsigned, unsigned>>& current,
                   std::vector<CyclotomicProduct>& out) {
  if (remaining == 0) {
    CyclotomicProduct cp;
    cp.factors = current;
    out.push_back(std::move(cp));
    return;
  }
  if (pos == indices.size()) return;
  auto [n, phi] = indices[pos];
  enumerate_rec(indices, pos + 1, remaining, current, out);
  for (unsigned e = 1; static_cast<int>(e * phi) <= remaining; ++e) {
    current.emplace_back(n, e);
    enumerate_rec(indices, pos + 1, remaining - static_cast<int>(e * phi), current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<CyclotomicProduct> skew_cyclotomic_products(int degree) {
  if (degree < 1) return {};
  // Indices with phi(n) <= degree; phi(n) > sqrt(n/2) bounds the scan.
  std::vector<std::pair<unsigned, unsigned>> indices;
  for (unsigned n = 2; n <= 2u * static_cast<unsigned>(degree) * degree + 2; ++n) {
    unsigned phi = euler_phi(n);
    if (static_cast<int>(phi) <= degree) indices.emplace_back(n, phi);
  }

  std::vector<CyclotomicProduct> out;
  std::vector<std::pair<unsigned, unsigned>> current;
  // Phi_1 must appear with odd multiplicity for the product to be
  // skew-reciprocal.
  for (unsigned e1 = 1; static_cast<int>(e1) <= degree; e1 += 2) {
    current.assign(1, {1u, e1});
    enumerate_rec(indices, 0, degree - static_cast<int>(e1), current, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool candidate_matches(const CyclotomicProduct& cp, const Poly& q,
                       const LatticeClass& target) {
  Poly p = expand(q.field(), cp);
  if (gcd(p, q).degree() != 0) return false;
  SkewBezoutian bez = build(p, q, +1);
  return target.accepts(classify(IntegerGram(bez.space.gram)));
}

void check_search_inputs(const Poly& q) {
  if (!q.field().is_rational())
    throw domain_error("cyclotomic search runs over Z");
  if (q.is_zero() || !q.is_monic() ||
      reciprocity_type(q) != Reciprocity::reciprocal)
    throw domain_error("cyclotomic search requires a monic reciprocal q");
  for (const Scalar& c : q.coeffs())
    if (c.value().get_den() != 1)
      throw domain_error("cyclotomic search requires integer coefficients");
}

}  // namespace

std::vector<CyclotomicProduct> search_cyclotomic_serial(const Poly& q, int degree,
                                                        const LatticeClass& target) {
  check_search_inputs(q);
  if (degree != q.degree()) return {};  // no candidate can pair with q
  std::vector<CyclotomicProduct> found;
  for (const CyclotomicProduct& cp : skew_cyclotomic_products(degree))
    if (candidate_matches(cp, q, target)) found.push_back(cp);
  return found;
}

std::vector<CyclotomicProduct> search_cyclotomic(const Poly& q, int degree,
                                                 const LatticeClass& target) {
  check_search_inputs(q);
  if (degree != q.degree()) return {};
  std::vector<CyclotomicProduct> candidates = skew_cyclotomic_products(degree);
  std::vector<char> keep(candidates.size(), 0);
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(candidates.size()); ++i) {
    try {
      keep[static_cast<std::size_t>(i)] =
          candidate_matches(candidates[static_cast<std::size_t>(i)], q, target);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<CyclotomicProduct> found;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) found.push_back(std::move(candidates[i]));
  return found;
}

}  // namespace skewbez
