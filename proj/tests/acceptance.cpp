// Acceptance suite: runs every criterion at its stated bound and prints one
// pass/fail line per criterion.  Exit code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "skewbez/jordan.hpp"
#include "skewbez/lattice.hpp"
#include "skewbez/spinor.hpp"
#include "skewbez/synthesis.hpp"
#include "test_support.hpp"

using namespace skewbez;

namespace {

struct Check {
  int failures = 0;
  int checks = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (failures <= 5) detail << "      " << what << "\n";
    }
  }
};

std::vector<Field> acceptance_fields() {
  return {Field::rationals(), Field::prime_field(3), Field::prime_field(5),
          Field::prime_field(13), Field::prime_field(101)};
}

Poly lehmer(const Field& f) { return parse_poly("1,1,0,-1,-1,-1,-1,-1,0,1,1", f); }

void criterion_e8(Check& c) {
  Field f = Field::rationals();
  SkewBezoutian bez = build(expand(f, CyclotomicProduct::parse("Phi1*Phi2*Phi3*Phi5")),
                            cyclotomic(f, 30), +1);
  const long want[8][8] = {
      {2, 1, 1, 1, 1, 1, 0, 0}, {1, 2, 1, 1, 1, 1, 1, 0}, {1, 1, 2, 1, 1, 1, 1, 1},
      {1, 1, 1, 2, 1, 1, 1, 1}, {1, 1, 1, 1, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 2, 1, 1},
      {0, 1, 1, 1, 1, 1, 2, 1}, {0, 0, 1, 1, 1, 1, 1, 2}};
  c.expect(bez.space.dim == 8, "dimension 8");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      c.expect(bez.space.gram.at(i, j) == Scalar::of_int(f, want[i][j]),
               "Gram entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  c.expect(classify(IntegerGram(bez.space.gram)).tag == LatticeClass::Tag::E8,
           "classification is E8");
}

void criterion_an(Check& c) {
  Field f = Field::rationals();
  for (int n = 1; n <= 12; ++n) {
    Poly p = Poly::x_power(f, n) - Poly::constant(f, Scalar::one(f));
    std::vector<Scalar> ones(static_cast<std::size_t>(n) + 1, Scalar::one(f));
    SkewBezoutian bez = build(p, Poly(f, ones), +1);
    c.expect(bez.space.gram == cartan_matrix(n),
             "B(x^" + std::to_string(n) + "-1, 1+...+x^" + std::to_string(n) +
                 ") equals C_" + std::to_string(n));
    c.expect(bez.space.gram.det() == Scalar::of_int(f, n + 1),
             "det C_" + std::to_string(n) + " = " + std::to_string(n + 1));
  }
}

void criterion_lehmer_table(Check& c) {
  Field f = Field::rationals();
  const std::set<std::string> table = {
      "Phi1^3*Phi2*Phi3*Phi5", "Phi1*Phi2^3*Phi3*Phi5", "Phi1*Phi2*Phi3*Phi5*Phi6",
      "Phi1*Phi2*Phi3*Phi7",   "Phi1*Phi2*Phi3*Phi9",   "Phi1*Phi2*Phi3*Phi18",
      "Phi1*Phi2*Phi5*Phi8",   "Phi1*Phi2*Phi5*Phi10"};
  std::vector<CyclotomicProduct> hits =
      search_cyclotomic(lehmer(f), 10, LatticeClass::parse_target("I9,1", 10));
  std::set<std::string> got;
  for (const CyclotomicProduct& cp : hits) got.insert(cp.str());
  c.expect(got.size() == 8, "exactly eight products (got " +
                                std::to_string(got.size()) + ")");
  for (const std::string& row : table)
    c.expect(got.count(row) == 1, "tabulated row " + row + " found");
  for (const std::string& extra : got)
    if (!table.count(extra)) c.expect(false, "untabulated product " + extra);
}

void criterion_det_res(Check& c) {
  for (const Field& f : acceptance_fields()) {
    Rng rng(f.is_rational() ? 9001 : f.modulus());
    int cases = f.is_rational() ? 100 : 25;
    for (int i = 0; i < cases; ++i) {
      int d = 1 + static_cast<int>(rng() % 16);
      int eps = rng() % 2 ? 1 : -1;
      Poly q = random_monic_reciprocal(rng, f, d);
      Poly p = random_compatible_p(rng, f, d, eps);
      c.expect(build(p, q, eps).space.gram.det() == resultant(p, q),
               "det B = Res over " + f.name() + ", degree " + std::to_string(d) +
                   ", eps " + std::to_string(eps));
    }
  }
}

void criterion_characterization(Check& c) {
  int done = 0;
  Rng rng(777);
  std::vector<Field> fields = acceptance_fields();
  while (done < 100) {
    const Field& f = fields[done % fields.size()];
    int d = 1 + static_cast<int>(rng() % 10);
    int eps = rng() % 2 ? 1 : -1;
    Poly q = random_monic_reciprocal(rng, f, d);
    Poly p = random_compatible_p(rng, f, d, eps);
    SkewBezoutian bez = build(p, q, eps);
    c.expect(recover_p(bez.space, bez.gamma, bez.v0) == p, "recover_p round trip");
    Matrix dl = delta(bez);
    c.expect(char_poly(dl) == p, "char poly of delta is p");

    // inverse series through degree 2d
    int n_max = 2 * d;
    SeriesPrefix cs = series_coefficients(p, q, eps, n_max);
    std::vector<Scalar> e{Scalar::one(f)};
    Matrix v = dl * bez.v0;
    Scalar epsilon = Scalar::of_int(f, eps);
    for (int n = 1; n <= n_max; ++n) {
      e.push_back(epsilon * bez.space.psi(bez.v0, v));
      v = dl * v;
    }
    bool inverse_ok = true;
    for (int n = 1; n <= n_max; ++n) {
      Scalar conv = Scalar::zero(f);
      for (int k = 0; k <= n; ++k)
        conv += cs.at(k) * e[static_cast<std::size_t>(n - k)];
      inverse_ok = inverse_ok && conv.is_zero();
    }
    c.expect(inverse_ok, "series inverse identity to degree 2d");
    ++done;
  }
}

void criterion_synthesis(Check& c) {
  int done = 0;
  Rng rng(888);
  std::vector<Field> fields = acceptance_fields();
  while (done < 100) {
    const Field& f = fields[done % fields.size()];
    int d = 2 + static_cast<int>(rng() % 15);
    Poly q = random_monic_reciprocal(rng, f, d);

    if (d % 2 == 0) {
      SynthesisResult sp = symplectic_with_charpoly(q);
      c.expect(sp.space.gram.det() == Scalar::one(f), "symplectic det 1");
      c.expect(char_poly(sp.gamma) == q, "symplectic char poly");
    }

    SynthesisResult orth = orthogonal_with_charpoly(q);
    c.expect(char_poly(orth.gamma) == q, "orthogonal char poly");
    c.expect(orth.space.gram.is_symmetric(), "orthogonal symmetry");
    c.expect(!orth.space.gram.det().is_zero(), "orthogonal nondegenerate");
    Scalar at_p = q.eval(Scalar::one(f)), at_m = q.eval(Scalar::of_int(f, -1));
    if (!at_p.is_zero() && !at_m.is_zero())
      c.expect(SquareClass::of(orth.space.gram.det()) == SquareClass::of(at_p * at_m),
               "det class is q(-1)q(1)");
    ++done;
  }
}

void criterion_spinor_oracles(Check& c) {
  int done = 0;
  Rng rng(999);
  std::vector<Field> fields = acceptance_fields();
  while (done < 100) {
    const Field& f = fields[done % fields.size()];
    int dim = 2 + static_cast<int>(rng() % 7);
    BilinearSpace space = random_diagonal_space(rng, f, dim);
    SquareClass expected = SquareClass::one(f);
    Matrix gamma = Matrix::identity(f, dim);
    int reflections = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < reflections; ++i) {
      Matrix v = random_anisotropic_vector(rng, space);
      gamma = gamma * reflection(space, v);
      expected = expected * SquareClass::of(space.psi(v, v));
    }
    c.expect(spinor_norm(space, gamma) == expected, "eigenspace formula");
    c.expect(spinor_norm_by_reflections(space, gamma) == expected,
             "reflection decomposition");
    if (!char_poly(gamma).eval(Scalar::of_int(f, -1)).is_zero())
      c.expect(zassenhaus(space, gamma) == expected, "zassenhaus formula");

    Matrix minus_id = Matrix::identity(f, dim) * Scalar::of_int(f, -1);
    c.expect(spinor_norm(space, minus_id) == det_class(space),
             "spinor norm of -id");
    ++done;
  }
}

void criterion_prescribed_spinor(Check& c) {
  // over F_p both classes are reachable whenever v_-(q) > 0
  for (std::uint64_t pm : {3ull, 5ull, 13ull, 101ull}) {
    Field f = Field::prime_field(pm);
    Rng rng(pm);
    Poly q = Poly::from_ints(f, {1, 1}) * random_monic_reciprocal(rng, f, 4);
    for (int cls = 0; cls < 2; ++cls) {
      SquareClass target =
          cls == 0 ? SquareClass::one(f)
                   : SquareClass::of(Scalar(
                         f, mpq_class(detail::least_nonresidue(
                                mpz_class(static_cast<unsigned long>(pm))))));
      SynthesisResult res = orthogonal_with_spinor(q, target);
      c.expect(spinor_norm(res.space, res.gamma) == target,
               "requested class over " + f.name());
      c.expect(spinor_norm_by_reflections(res.space, res.gamma) == target,
               "oracle agreement over " + f.name());
    }
  }

  // over Q every class in {1,-1,2,-2,3,-3}
  Field q_field = Field::rationals();
  Poly q = Poly::from_ints(q_field, {1, 1}) * cyclotomic(q_field, 5);
  for (long s : {1, -1, 2, -2, 3, -3}) {
    SquareClass target = SquareClass::of(Scalar::of_int(q_field, s));
    SynthesisResult res = orthogonal_with_spinor(q, target);
    c.expect(spinor_norm(res.space, res.gamma) == target,
             "requested class " + std::to_string(s) + " over Q");
  }

  // forced case: v_- = 0 admits exactly the class of q0(-1)
  Poly q30 = cyclotomic(q_field, 30);
  bool threw = false;
  try {
    orthogonal_with_spinor(q30, SquareClass::of(Scalar::of_int(q_field, 2)));
  } catch (const domain_error&) {
    threw = true;
  }
  c.expect(threw, "infeasible spinor target rejected");
  SynthesisResult forced = orthogonal_with_spinor(q30, SquareClass::one(q_field));
  c.expect(spinor_norm(forced.space, forced.gamma) == SquareClass::one(q_field),
           "forced class achieved");
}

void criterion_discriminants(Check& c) {
  Field f = Field::rationals();
  Rng rng(1212);
  int done = 0;
  while (done < 50) {
    int d = 2 * (1 + static_cast<int>(rng() % 6));
    Poly q = random_monic_reciprocal(rng, f, d);
    if (discriminant(q).is_zero()) continue;
    ++done;
    c.expect(edwards_disc_check(q), "disc q = (-1)^m q(-1)q(1), degree " +
                                        std::to_string(d));
    SynthesisResult res = orthogonal_with_charpoly(q);
    c.expect(baeza_edwards_check(res.space, res.gamma),
             "disc(V) = disc(q) on the synthesized space");
  }
}

void criterion_jordan(Check& c) {
  Field f = Field::rationals();
  Rng rng(1313);

  // explicit parity pair from the statement
  std::vector<JordanBlock> one_even{{Scalar::one(f), 2, 1}};
  bool rejected = false;
  try {
    realize(JordanSpec(+1, one_even));
  } catch (const domain_error&) {
    rejected = true;
  }
  c.expect(rejected, "single even unipotent block rejected");

  std::vector<JordanBlock> doubled{{Scalar::one(f), 2, 2}};
  Realization real = realize(JordanSpec(+1, doubled));
  c.expect(real.isometry.transposed() * real.space.gram * real.isometry ==
               real.space.gram,
           "doubled block preserves the form");

  const long lams[][2] = {{2, 1}, {3, 1}, {1, 2}, {1, 3}};
  int done = 0, infeasible_done = 0;
  while (done < 50) {
    int epsilon = rng() % 2 ? 1 : -1;
    std::vector<JordanBlock> blocks;
    int dim = 0;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i) {
      int kind = static_cast<int>(rng() % 3);
      if (kind == 0) {
        auto& l = lams[rng() % 4];
        int m = 1 + static_cast<int>(rng() % 3);
        Scalar lambda = Scalar::of_fraction(f, l[0], l[1]);
        blocks.push_back(JordanBlock{lambda, m, 1});
        blocks.push_back(JordanBlock{lambda.inverse(), m, 1});
        dim += 2 * m;
      } else {
        Scalar lambda = Scalar::of_int(f, kind == 1 ? 1 : -1);
        int m = 1 + static_cast<int>(rng() % 3);
        bool pair = epsilon == 1 ? m % 2 == 0 : m % 2 == 1;
        blocks.push_back(JordanBlock{lambda, m, pair ? 2 : 1});
        dim += m * (pair ? 2 : 1);
      }
    }
    if (dim == 0 || dim > 12) continue;
    JordanSpec spec(epsilon, blocks);
    ++done;
    Realization r = realize(spec);
    c.expect(is_isometry(r.space, r.isometry), "realized matrix is an isometry");
    c.expect(!r.space.gram.det().is_zero(), "realized space nondegenerate");

    std::vector<JordanBlock> mults = jordan_multiplicities(r.isometry);
    bool same = mults.size() == spec.blocks.size();
    for (const JordanBlock& b : spec.blocks) {
      bool hit = false;
      for (const JordanBlock& m : mults)
        hit = hit || (m.lambda == b.lambda && m.size == b.size &&
                      m.multiplicity == b.multiplicity);
      same = same && hit;
    }
    c.expect(same, "jordan_multiplicities round trip");

    // an infeasible mutation must be rejected
    if (infeasible_done < 50) {
      std::vector<JordanBlock> broken = spec.blocks;
      JordanBlock extra{Scalar::of_int(f, 5), 1 + static_cast<int>(rng() % 2), 1};
      broken.push_back(extra);  // unmatched eigenvalue 5 breaks the pairing
      JordanSpec bad(epsilon, broken);
      if (!feasible(bad)) {
        ++infeasible_done;
        bool threw = false;
        try {
          realize(bad);
        } catch (const domain_error&) {
          threw = true;
        }
        c.expect(threw, "infeasible spec rejected by realize");
      }
    }
  }
  c.expect(infeasible_done >= 50, "exercised 50 infeasible specs (got " +
                                      std::to_string(infeasible_done) + ")");
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "E8 reproduction", 1.0, criterion_e8},
      {2, "A_n Cartan matrices, n = 1..12", 1.0, criterion_an},
      {3, "Lehmer degree-10 search against the tabulated eight", 60.0,
       criterion_lehmer_table},
      {4, "det B(p,q) = Res(p,q), 200 random pairs", 60.0, criterion_det_res},
      {5, "recovery round trips and inverse series, 100 random pairs", 60.0,
       criterion_characterization},
      {6, "prescribed characteristic polynomials, 100 random q", 60.0,
       criterion_synthesis},
      {7, "spinor norm oracle agreement, 100 random isometries", 60.0,
       criterion_spinor_oracles},
      {8, "prescribed spinor norms", 30.0, criterion_prescribed_spinor},
      {9, "discriminant congruences, 50 random separable q", 60.0,
       criterion_discriminants},
      {10, "Jordan form feasibility and realization", 60.0, criterion_jordan},
  };

  int failed = 0;
  for (const Criterion& crit : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("unexpected exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > crit.limit_seconds)
      check.expect(false, "time limit " + std::to_string(crit.limit_seconds) +
                              " s exceeded");
    bool ok = check.failures == 0;
    failed += ok ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << "  " << crit.number << ". " << crit.name
         << "  [" << check.checks << " checks, " << seconds << " s]";
    std::cout << line.str() << "\n";
    if (!ok) std::cout << check.detail.str();
  }
  std::cout << (failed == 0 ? "all criteria passed"
                            : std::to_string(failed) + " criterion(s) failed")
            << "\n";
  return failed;
}
