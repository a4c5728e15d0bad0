#include "skewbez/jordan.hpp"

#include <algorithm>

#include "skewbez/synthesis.hpp"

namespace skewbez {

namespace {

bool scalar_less(const Scalar& a, const Scalar& b) {
  return a.value() < b.value();
}

bool is_pm_one(const Scalar& x) {
  return x.is_one() || x == Scalar::of_int(x.field(), -1);
}

// Positive divisors, from the shared bounded factorization.
std::vector<mpz_class> divisors_of(const mpz_class& n) {
  mpz_class m = abs(n);
  if (m == 0) throw internal_error("divisors of zero");
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : detail::factor_integer(m)) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

std::vector<Scalar> rational_root_candidates(const Poly& f) {
  const Field& field = f.field();
  mpz_class denom_lcm = 1;
  for (const Scalar& c : f.coeffs())
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
            c.value().get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const Scalar& c : f.coeffs())
    ints.push_back(mpz_class(c.value() * denom_lcm));
  std::size_t lo = 0;
  while (lo < ints.size() && ints[lo] == 0) ++lo;  // factor T^lo, root 0

  std::vector<Scalar> cands;
  if (lo > 0) cands.push_back(Scalar::zero(field));
  if (lo >= ints.size() - 1) return cands;
  for (const mpz_class& u : divisors_of(ints[lo]))
    for (const mpz_class& v : divisors_of(ints.back())) {
      if (gcd(u, v) != 1) continue;
      cands.emplace_back(field, mpq_class(u, v));
      cands.emplace_back(field, mpq_class(-u, v));
    }
  return cands;
}

}  // namespace

std::vector<Scalar> split_roots(const Poly& f) {
  if (f.is_zero()) throw domain_error("roots of the zero polynomial");
  const Field& field = f.field();

  std::vector<Scalar> cands;
  if (field.is_rational()) {
    cands = rational_root_candidates(f);
  } else {
    // full residue scan; fine for the moduli this library targets
    if (field.modulus() > (1u << 20))
      throw domain_error("root search over " + field.name() +
                         " scans all residues; modulus too large");
    for (std::uint64_t r = 0; r < field.modulus(); ++r)
      cands.push_back(Scalar::of_int(field, static_cast<long>(r)));
  }

  std::vector<Scalar> roots;
  Poly rest = f;
  for (const Scalar& x : cands) {
    if (rest.degree() == 0) break;
    if (!rest.eval(x).is_zero()) continue;
    roots.push_back(x);
    Poly lin(field, {-x, Scalar::one(field)});
    while (rest.degree() >= 1 && rest.eval(x).is_zero()) rest = rest / lin;
  }
  if (rest.degree() != 0)
    throw domain_error("eigenvalues outside field: " + rest.str() +
                       " has no root in " + field.name());
  std::sort(roots.begin(), roots.end(), scalar_less);
  return roots;
}

JordanSpec::JordanSpec(int epsilon_, std::vector<JordanBlock> blocks_)
    : epsilon(epsilon_), blocks(std::move(blocks_)) {
  if (epsilon != 1 && epsilon != -1)
    throw domain_error("epsilon must be +1 or -1");
  if (blocks.empty()) throw domain_error("empty Jordan specification");
  for (const JordanBlock& b : blocks) {
    if (b.lambda.is_zero())
      throw domain_error("Jordan blocks of an isometry need lambda != 0");
    if (b.size < 1) throw domain_error("Jordan block size must be >= 1");
    if (b.multiplicity < 1) throw domain_error("block multiplicity must be >= 1");
    detail::require_same_field(field(), b.lambda.field(), "Jordan spec");
  }
  std::sort(blocks.begin(), blocks.end(), [](const JordanBlock& a, const JordanBlock& b) {
    if (a.lambda != b.lambda) return scalar_less(a.lambda, b.lambda);
    return a.size < b.size;
  });
  std::vector<JordanBlock> merged;
  for (const JordanBlock& b : blocks) {
    if (!merged.empty() && merged.back().lambda == b.lambda &&
        merged.back().size == b.size)
      merged.back().multiplicity += b.multiplicity;
    else
      merged.push_back(b);
  }
  blocks = std::move(merged);
}

int JordanSpec::dimension() const {
  int d = 0;
  for (const JordanBlock& b : blocks) d += b.size * b.multiplicity;
  return d;
}

namespace {

const JordanBlock* find_block(const JordanSpec& spec, const Scalar& lambda, int size) {
  for (const JordanBlock& b : spec.blocks)
    if (b.lambda == lambda && b.size == size) return &b;
  return nullptr;
}

// nullptr when feasible, otherwise a message naming the violated condition.
const char* infeasibility_reason(const JordanSpec& spec) {
  for (const JordanBlock& b : spec.blocks) {
    if (!is_pm_one(b.lambda)) {
      const JordanBlock* partner = find_block(spec, b.lambda.inverse(), b.size);
      if (!partner || partner->multiplicity != b.multiplicity)
        return "blocks at lambda != +-1 must appear with equal multiplicity "
               "for lambda and 1/lambda";
    } else {
      bool bad_parity = spec.epsilon == 1 ? b.size % 2 == 0 : b.size % 2 == 1;
      if (bad_parity && b.multiplicity % 2)
        return spec.epsilon == 1
                   ? "even-size blocks at lambda = +-1 need even multiplicity "
                     "in the symmetric case"
                   : "odd-size blocks at lambda = +-1 need even multiplicity "
                     "in the skew-symmetric case";
    }
  }
  return nullptr;
}

// [[0, U], [-U, 0]]; symmetric when U is skew and skew when U is symmetric.
Matrix doubled_form(const Matrix& u) {
  int n = u.rows();
  Matrix a(u.field(), 2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.at(i, n + j) = u.at(i, j);
      a.at(n + i, j) = -u.at(i, j);
    }
  return a;
}

// Single m x m Jordan blocks at lambda = +-1 come from B((T-1)^m, (T+1)^m):
// gamma has characteristic polynomial (T+1)^m, and when (T-1)^m is wanted the
// roles reverse and delta = gamma * sigma is the isometry.
struct PmBlock {
  Matrix gram;
  Matrix isometry;
};

PmBlock single_pm_block(const Field& f, int lambda_sign, int m, int epsilon) {
  Poly t_minus = Poly::from_ints(f, {-1, 1}).pow(static_cast<unsigned>(m));
  Poly t_plus = Poly::from_ints(f, {1, 1}).pow(static_cast<unsigned>(m));
  if (epsilon == 1) {
    // m odd: (T-1)^m is skew-reciprocal, (T+1)^m reciprocal.
    SkewBezoutian bez = build(t_minus, t_plus, +1);
    Matrix iso = lambda_sign == -1 ? bez.gamma : delta(bez);
    if ((iso - Matrix::identity(f, m) * Scalar::of_int(f, lambda_sign)).rank() != m - 1)
      throw internal_error("single block construction is derogatory");
    return {std::move(bez.space.gram), std::move(iso)};
  }
  // epsilon = -1, m even: the symplectic path realizes (T -+ 1)^m directly.
  SynthesisResult res =
      symplectic_with_charpoly(lambda_sign == 1 ? t_minus : t_plus);
  return {std::move(res.space.gram), std::move(res.gamma)};
}

PmBlock doubled_pm_block(const Field& f, int lambda_sign, int m, int epsilon) {
  Poly t_minus = Poly::from_ints(f, {-1, 1}).pow(static_cast<unsigned>(m));
  Poly t_plus = Poly::from_ints(f, {1, 1}).pow(static_cast<unsigned>(m));
  Matrix u(f, 0, 0);
  Matrix iso(f, 0, 0);
  if (epsilon == 1) {
    // m even: both powers are reciprocal; a skew Bezoutian U gives the
    // isometry, and [[0,U],[-U,0]] is the symmetric doubled form.
    SkewBezoutian bez = lambda_sign == 1 ? build(t_plus, t_minus, -1)
                                         : build(t_minus, t_plus, -1);
    u = std::move(bez.space.gram);
    iso = std::move(bez.gamma);
  } else {
    // m odd: the symmetric Bezoutian B((T-1)^m, (T+1)^m) carries gamma with
    // char poly (T+1)^m and delta with (T-1)^m; doubling makes the form skew.
    SkewBezoutian bez = build(t_minus, t_plus, +1);
    iso = lambda_sign == -1 ? bez.gamma : delta(bez);
    if ((iso - Matrix::identity(f, m) * Scalar::of_int(f, lambda_sign)).rank() != m - 1)
      throw internal_error("doubled block construction is derogatory");
    u = std::move(bez.space.gram);
  }
  return {doubled_form(u), Matrix::block_diag({iso, iso})};
}

}  // namespace

bool feasible(const JordanSpec& spec) { return infeasibility_reason(spec) == nullptr; }

std::optional<std::string> infeasibility(const JordanSpec& spec) {
  const char* reason = infeasibility_reason(spec);
  if (!reason) return std::nullopt;
  return std::string(reason);
}

Realization realize(const JordanSpec& spec) {
  if (const char* reason = infeasibility_reason(spec))
    throw domain_error(std::string("infeasible Jordan spec: ") + reason);
  const Field& f = spec.field();

  std::vector<Matrix> gram_blocks, iso_blocks;
  auto emit = [&](Matrix g, Matrix m, int copies) {
    for (int i = 1; i < copies; ++i) {
      gram_blocks.push_back(g);
      iso_blocks.push_back(m);
    }
    gram_blocks.push_back(std::move(g));
    iso_blocks.push_back(std::move(m));
  };

  for (const JordanBlock& b : spec.blocks) {
    if (!is_pm_one(b.lambda)) {
      Scalar inv = b.lambda.inverse();
      if (scalar_less(inv, b.lambda)) continue;  // handled with its partner
      Poly pair_factor = Poly(f, {Scalar::one(f), -(b.lambda + inv), Scalar::one(f)});
      Poly q = pair_factor.pow(static_cast<unsigned>(b.size));
      if (spec.epsilon == 1) {
        SynthesisResult res = orthogonal_with_charpoly(q);
        emit(std::move(res.space.gram), std::move(res.gamma), b.multiplicity);
      } else {
        SynthesisResult res = symplectic_with_charpoly(q);
        emit(std::move(res.space.gram), std::move(res.gamma), b.multiplicity);
      }
    } else {
      int sign = b.lambda.is_one() ? 1 : -1;
      bool single_ok = spec.epsilon == 1 ? b.size % 2 == 1 : b.size % 2 == 0;
      if (single_ok) {
        PmBlock blk = single_pm_block(f, sign, b.size, spec.epsilon);
        emit(std::move(blk.gram), std::move(blk.isometry), b.multiplicity);
      } else {
        PmBlock blk = doubled_pm_block(f, sign, b.size, spec.epsilon);
        emit(std::move(blk.gram), std::move(blk.isometry), b.multiplicity / 2);
      }
    }
  }

  BilinearSpace space(spec.epsilon, Matrix::block_diag(gram_blocks));
  Matrix iso = Matrix::block_diag(iso_blocks);
  if (!is_isometry(space, iso))
    throw internal_error("realized matrix does not preserve the form");
  return Realization{std::move(space), std::move(iso)};
}

std::vector<JordanBlock> jordan_multiplicities(const Matrix& m) {
  if (!m.is_square()) throw domain_error("Jordan multiplicities need a square matrix");
  const Field& f = m.field();
  int d = m.rows();
  std::vector<JordanBlock> out;
  for (const Scalar& lambda : split_roots(char_poly(m))) {
    Matrix b = m - Matrix::identity(f, d) * lambda;
    // ranks of successive powers until they stabilize
    std::vector<int> ranks{d};
    Matrix power = Matrix::identity(f, d);
    do {
      power = power * b;
      ranks.push_back(power.rank());
    } while (ranks[ranks.size() - 2] != ranks.back());
    ranks.push_back(ranks.back());
    for (std::size_t size = 1; size + 1 < ranks.size(); ++size) {
      int mu = ranks[size - 1] - 2 * ranks[size] + ranks[size + 1];
      if (mu > 0)
        out.push_back(JordanBlock{lambda, static_cast<int>(size), mu});
    }
  }
  return out;
}

NecessityReport verify_necessity(const BilinearSpace& space, const Matrix& m) {
  if (!is_isometry(space, m))
    throw domain_error("necessity check: the given matrix is not an isometry");
  const Field& f = space.field();
  int d = space.dim;

  std::vector<JordanBlock> mults = jordan_multiplicities(m);
  NecessityReport report{true, true, true};

  auto mu_of = [&](const Scalar& lambda, int size) {
    for (const JordanBlock& b : mults)
      if (b.lambda == lambda && b.size == size) return b.multiplicity;
    return 0;
  };
  for (const JordanBlock& b : mults) {
    if (is_pm_one(b.lambda)) {
      bool needs_even = space.epsilon == 1 ? b.size % 2 == 0 : b.size % 2 == 1;
      if (needs_even && b.multiplicity % 2) report.parity = false;
    } else if (mu_of(b.lambda.inverse(), b.size) != b.multiplicity) {
      report.multiplicity_symmetry = false;
    }
  }

  // Generalized eigenspaces, grouped as W_lambda = V_lambda + V_{1/lambda}.
  std::vector<Scalar> grouped;  // representatives, lambda <= 1/lambda
  std::vector<Matrix> bases;
  for (const Scalar& lambda : split_roots(char_poly(m))) {
    Scalar rep = lambda;
    if (!is_pm_one(lambda) && scalar_less(lambda.inverse(), lambda))
      rep = lambda.inverse();
    bool seen = false;
    for (const Scalar& g : grouped) seen = seen || g == rep;
    if (seen) continue;
    grouped.push_back(rep);
    Matrix shifted = m - Matrix::identity(f, d) * rep;
    Matrix basis = shifted.pow(static_cast<unsigned>(d)).kernel_basis();
    if (!is_pm_one(rep)) {
      Matrix shifted2 = m - Matrix::identity(f, d) * rep.inverse();
      Matrix basis2 = shifted2.pow(static_cast<unsigned>(d)).kernel_basis();
      std::vector<Matrix> cols;
      for (int j = 0; j < basis.cols(); ++j) cols.push_back(basis.col(j));
      for (int j = 0; j < basis2.cols(); ++j) cols.push_back(basis2.col(j));
      basis = Matrix::from_columns(cols);
    }
    bases.push_back(std::move(basis));
  }
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j)
      if (!(bases[i].transposed() * space.gram * bases[j]).is_zero())
        report.blocks_orthogonal = false;

  return report;
}

}  // namespace skewbez
