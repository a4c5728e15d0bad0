#include "skewbez/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "skewbez/io.hpp"
#include "skewbez/jordan.hpp"
#include "skewbez/lattice.hpp"
#include "skewbez/spinor.hpp"
#include "skewbez/synthesis.hpp"

namespace skewbez {

namespace {

struct SharedFlags {
  std::string field = "Q";
  std::string format = "text";
  std::string out_path;
};

void add_shared(CLI::App* cmd, SharedFlags& shared) {
  cmd->add_option("--field", shared.field, "Coefficient field: Q or Fp:<p>")
      ->default_val("Q");
  cmd->add_option("--format", shared.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  cmd->add_option("--out", shared.out_path, "Write the output to a file");
}

Field parse_field(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.rfind("Fp:", 0) == 0) {
    try {
      return Field::prime_field(std::stoull(text.substr(3)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw domain_error("cannot parse field '" + text + "'; expected Q or Fp:<p>");
}

void emit(const SharedFlags& shared, const std::string& payload, std::ostream& out) {
  if (shared.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(shared.out_path);
  if (!file) throw domain_error("cannot write " + shared.out_path);
  file << payload;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string gram_isometry_text(const Matrix& gram, const Matrix& isometry) {
  return "gram:\n" + matrix_to_text(gram) + "isometry:\n" + matrix_to_text(isometry);
}

Matrix require_gram(const SpaceFile& file, const std::string& path) {
  if (!file.gram) throw domain_error(path + " does not contain a \"gram\" matrix");
  return *file.gram;
}

Matrix require_isometry(const SpaceFile& file, const std::string& path) {
  if (file.isometry) return *file.isometry;
  if (file.gram) return *file.gram;  // bare matrix files
  throw domain_error(path + " does not contain an \"isometry\" matrix");
}

int detect_epsilon(const SpaceFile& file, const Matrix& gram) {
  if (file.epsilon) {
    if (*file.epsilon != 1 && *file.epsilon != -1)
      throw domain_error("epsilon in the input file must be +1 or -1");
    return *file.epsilon;
  }
  bool sym = gram.is_symmetric(), skew = gram.is_skew_symmetric();
  if (sym && !skew) return 1;
  if (skew && !sym) return -1;
  throw domain_error("cannot infer epsilon from the Gram matrix; add an \"epsilon\" field");
}

std::vector<Scalar> parse_vector(const std::string& text, const Field& f) {
  std::vector<Scalar> entries;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) entries.push_back(Scalar::parse(tok, f));
  return entries;
}

JordanSpec parse_blocks(const std::string& text, int epsilon, const Field& f) {
  std::vector<JordanBlock> blocks;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::istringstream part(tok);
    std::string lam, size, mult;
    if (!std::getline(part, lam, ':') || !std::getline(part, size, ':'))
      throw domain_error("cannot parse block '" + tok + "'; expected lambda:size:mult");
    if (!std::getline(part, mult, ':')) mult = "1";
    try {
      blocks.push_back(
          JordanBlock{Scalar::parse(lam, f), std::stoi(size), std::stoi(mult)});
    } catch (const std::invalid_argument&) {
      throw domain_error("cannot parse block '" + tok + "'");
    }
  }
  return JordanSpec(epsilon, std::move(blocks));
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{
      "Exact skew-Bezoutian toolkit: bilinear spaces, isometries, spinor "
      "norms, Jordan forms, integer lattices.\nPolynomials are ascending "
      "coefficient lists, constant term first -- the Lehmer polynomial "
      "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1 is\n\"1,1,0,-1,-1,-1,-1,-1,0,1,1\" "
      "-- or cyclotomic products like \"Phi1*Phi2^3*Phi15\"."};
  app.require_subcommand(1);

  // bezoutian
  SharedFlags bez_shared;
  std::string bez_p, bez_q;
  int bez_eps = 0;
  CLI::App* bez = app.add_subcommand(
      "bezoutian", "Build B(p, q) and its canonical isometry");
  bez->add_option("--p", bez_p, "p, ascending coefficients or Phi notation")
      ->required();
  bez->add_option("--q", bez_q, "q, ascending coefficients or Phi notation")
      ->required();
  bez->add_option("--epsilon", bez_eps, "+1 symmetric, -1 skew-symmetric")
      ->check(CLI::IsMember({1, -1}))
      ->required();
  add_shared(bez, bez_shared);

  // synthesize
  SharedFlags syn_shared;
  std::string syn_q, syn_spinor;
  int syn_eps = 0, syn_e = 1;
  CLI::App* syn = app.add_subcommand(
      "synthesize", "Space and isometry with prescribed characteristic polynomial");
  syn->add_option("--q", syn_q, "Target characteristic polynomial (reciprocal)")
      ->required();
  syn->add_option("--epsilon", syn_eps, "+1 orthogonal, -1 symplectic")
      ->check(CLI::IsMember({1, -1}))
      ->required();
  syn->add_option("--spinor-target", syn_spinor,
                  "Requested spinor norm class (orthogonal case)");
  syn->add_option("--e", syn_e, "Odd exponent of (T-1) in the Bezoutian block")
      ->default_val(1);
  add_shared(syn, syn_shared);

  // spinor
  SharedFlags spin_shared;
  std::string spin_gram, spin_isometry, spin_method = "formula";
  CLI::App* spin =
      app.add_subcommand("spinor", "Spinor norm of an isometry of a quadratic space");
  spin->add_option("--gram", spin_gram, "JSON file with the Gram matrix")->required();
  spin->add_option("--isometry", spin_isometry, "JSON file with the isometry")
      ->required();
  spin->add_option("--method", spin_method, "formula, reflections or zassenhaus")
      ->check(CLI::IsMember({"formula", "reflections", "zassenhaus"}))
      ->default_val("formula");
  add_shared(spin, spin_shared);

  // classify
  SharedFlags cls_shared;
  std::string cls_gram;
  CLI::App* cls = app.add_subcommand("classify", "Classify an integer lattice");
  cls->add_option("--gram", cls_gram, "JSON file with the Gram matrix")->required();
  add_shared(cls, cls_shared);

  // search-cyclotomic
  SharedFlags search_shared;
  std::string search_q, search_target;
  int search_degree = 0;
  bool search_serial = false;
  CLI::App* search = app.add_subcommand(
      "search-cyclotomic",
      "Cyclotomic products p with B(p, q) in a prescribed lattice class");
  search->add_option("--q", search_q, "Reciprocal integer polynomial")->required();
  search->add_option("--degree", search_degree, "Degree of the products")->required();
  search->add_option("--target", search_target, "Lattice class: I9,1, E8, An")
      ->required();
  search->add_flag("--serial", search_serial, "Use the serial reference search");
  add_shared(search, search_shared);

  // jordan
  SharedFlags jd_shared;
  std::string jd_blocks;
  int jd_eps = 0;
  CLI::App* jd = app.add_subcommand(
      "jordan", "Realize a Jordan form by an isometry, or report infeasibility");
  jd->add_option("--epsilon", jd_eps, "+1 orthogonal, -1 symplectic")
      ->check(CLI::IsMember({1, -1}))
      ->required();
  jd->add_option("--blocks", jd_blocks,
                 "Blocks as lambda:size:mult, comma separated, e.g. 1:3:1,-1:2:2")
      ->required();
  add_shared(jd, jd_shared);

  // recover
  SharedFlags rec_shared;
  std::string rec_gram, rec_isometry, rec_v0;
  CLI::App* rec = app.add_subcommand(
      "recover", "Recover p from a space with isometry and cyclic vector");
  rec->add_option("--gram", rec_gram, "JSON file with the Gram matrix")->required();
  rec->add_option("--isometry", rec_isometry, "JSON file with the isometry")
      ->required();
  rec->add_option("--v0", rec_v0, "Base vector, comma separated (default e_1)");
  add_shared(rec, rec_shared);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (*bez) {
    Field f = parse_field(bez_shared.field);
    SkewBezoutian b = build(parse_poly(bez_p, f), parse_poly(bez_q, f), bez_eps);
    if (bez_shared.format == "text")
      emit(bez_shared, matrix_to_text(b.space.gram), out);
    else
      emit(bez_shared, dump(space_to_json(b.space, &b.gamma)), out);
    return 0;
  }

  if (*syn) {
    Field f = parse_field(syn_shared.field);
    Poly q = parse_poly(syn_q, f);
    SynthesisResult res = [&] {
      if (syn_eps == -1) {
        if (!syn_spinor.empty())
          throw domain_error("spinor norms are undefined for symplectic spaces");
        return symplectic_with_charpoly(q);
      }
      if (!syn_spinor.empty())
        return orthogonal_with_spinor(q, SquareClass::of(Scalar::parse(syn_spinor, f)));
      return orthogonal_with_charpoly(q, syn_e);
    }();
    if (syn_shared.format == "text")
      emit(syn_shared, gram_isometry_text(res.space.gram, res.gamma), out);
    else
      emit(syn_shared, dump(space_to_json(res.space, &res.gamma)), out);
    return 0;
  }

  if (*spin) {
    Field f = parse_field(spin_shared.field);
    SpaceFile gram_file = read_space_file(spin_gram, f);
    SpaceFile iso_file = read_space_file(spin_isometry, f);
    BilinearSpace space(+1, require_gram(gram_file, spin_gram));
    Matrix iso = require_isometry(iso_file, spin_isometry);
    SquareClass norm = [&] {
      if (spin_method == "reflections") return spinor_norm_by_reflections(space, iso);
      if (spin_method == "zassenhaus") return zassenhaus(space, iso);
      return spinor_norm(space, iso);
    }();
    if (spin_shared.format == "text")
      emit(spin_shared, norm.str() + "\n", out);
    else
      emit(spin_shared, dump(nlohmann::ordered_json{{"spinor_norm", norm.str()}}), out);
    return 0;
  }

  if (*cls) {
    Field f = parse_field(cls_shared.field);
    if (!f.is_rational()) throw domain_error("classify runs over Z");
    SpaceFile file = read_space_file(cls_gram, f);
    LatticeClass c = classify(IntegerGram(require_gram(file, cls_gram)));
    if (cls_shared.format == "text")
      emit(cls_shared, c.str() + "\n", out);
    else
      emit(cls_shared, dump(nlohmann::ordered_json{{"class", c.str()}}), out);
    return 0;
  }

  if (*search) {
    Field f = parse_field(search_shared.field);
    if (!f.is_rational()) throw domain_error("the cyclotomic search runs over Z");
    Poly q = parse_poly(search_q, f);
    LatticeClass target = LatticeClass::parse_target(search_target, search_degree);
    std::vector<CyclotomicProduct> found =
        search_serial ? search_cyclotomic_serial(q, search_degree, target)
                      : search_cyclotomic(q, search_degree, target);
    if (search_shared.format == "text") {
      std::string payload;
      for (const CyclotomicProduct& cp : found) payload += cp.str() + "\n";
      emit(search_shared, payload, out);
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const CyclotomicProduct& cp : found) arr.push_back(cp.str());
      emit(search_shared, dump(arr), out);
    }
    return 0;
  }

  if (*jd) {
    Field f = parse_field(jd_shared.field);
    JordanSpec spec = parse_blocks(jd_blocks, jd_eps, f);
    if (auto reason = infeasibility(spec)) {
      if (jd_shared.format == "text")
        emit(jd_shared, "infeasible: " + *reason + "\n", out);
      else
        emit(jd_shared,
             dump(nlohmann::ordered_json{{"feasible", false}, {"reason", *reason}}),
             out);
      return 0;
    }
    Realization real = realize(spec);
    if (jd_shared.format == "text") {
      emit(jd_shared,
           "feasible\n" + gram_isometry_text(real.space.gram, real.isometry), out);
    } else {
      nlohmann::ordered_json j = space_to_json(real.space, &real.isometry);
      nlohmann::ordered_json wrapped{{"feasible", true}};
      wrapped.update(j);
      emit(jd_shared, dump(wrapped), out);
    }
    return 0;
  }

  if (*rec) {
    Field f = parse_field(rec_shared.field);
    SpaceFile gram_file = read_space_file(rec_gram, f);
    SpaceFile iso_file = read_space_file(rec_isometry, f);
    Matrix gram = require_gram(gram_file, rec_gram);
    BilinearSpace space(detect_epsilon(gram_file, gram), gram);
    Matrix iso = require_isometry(iso_file, rec_isometry);
    Matrix v0 = rec_v0.empty() ? Matrix::unit_column(f, space.dim, 0)
                               : Matrix::column(f, parse_vector(rec_v0, f));
    Poly p = recover_p(space, iso, v0);
    if (rec_shared.format == "text")
      emit(rec_shared, p.str() + "\n", out);
    else
      emit(rec_shared, dump(nlohmann::ordered_json{{"p", p.str()}}), out);
    return 0;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace skewbez
