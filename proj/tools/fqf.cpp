// fqf: exact computations with definite ternary quadratic forms over F_q[t].
//
// Every subcommand prints either TSV (default) or JSON (--format json), uses
// exact "num/den" rationals in machine output, and is deterministic for a
// given input and seed.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "fqf/acceptance.hpp"
#include "fqf/factor.hpp"
#include "fqf/formulas.hpp"
#include "fqf/genus.hpp"
#include "fqf/lattice.hpp"
#include "fqf/picard.hpp"
#include "fqf/places.hpp"
#include "fqf/serialize.hpp"
#include "fqf/upoly.hpp"
#include "fqf/zeta.hpp"

namespace {

// exit codes: 0 ok, 2 usage, 3 malformed polynomial, 4 precondition violated,
// 5 verification failure, 6 internal error
constexpr int kExitUsage = 2;
constexpr int kExitBadPoly = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitVerifyFail = 5;
constexpr int kExitInternal = 6;

struct BadPoly : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fqf::Poly parse_poly(const std::string& s, int q) {
  try {
    return fqf::Poly::parse(s, q);
  } catch (const std::exception& e) {
    throw BadPoly("malformed polynomial '" + s + "': " + e.what());
  }
}

struct Common {
  int q = 3;
  std::string format = "tsv";
  unsigned long seed = 0;
  int threads = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--q", c.q, "field size (odd prime)")->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  cmd->add_option("--seed", c.seed, "seed for randomized checks");
  cmd->add_option("--threads", c.threads, "worker threads (output is identical)");
}

bool json_mode(const Common& c) { return c.format == "json"; }

void emit(const fqf::Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_lpoly(const Common& c, const std::string& b_str) {
  fqf::Poly b = parse_poly(b_str, c.q);
  fqf::UPoly lp = fqf::l_polynomial(b);
  if (json_mode(c)) {
    emit(fqf::Json{{"schema", fqf::kSchemaVersion},
                   {"q", c.q},
                   {"b", b.to_string()},
                   {"coefficients", fqf::upoly_to_json(lp)}});
  } else {
    std::cout << "k\tcoefficient\n";
    for (int k = 0; k <= std::max(lp.degree(), 0); ++k)
      std::cout << k << '\t' << fqf::rational_str(lp.coeff(k)) << "\n";
  }
  return 0;
}

int cmd_classno(const Common& c, const std::string& m_str, bool oracle) {
  fqf::Poly m = parse_poly(m_str, c.q);
  fqf::Integer h = fqf::class_number(m);
  bool ok = true;
  long h_oracle = 0;
  if (oracle) {
    h_oracle = static_cast<long>(fqf::picard_oracle(m));
    ok = h == h_oracle;
  }
  if (json_mode(c)) {
    fqf::Json j{{"schema", fqf::kSchemaVersion},
                {"q", c.q},
                {"m", m.to_string()},
                {"h", h.get_str()}};
    if (oracle) {
      j["oracle"] = h_oracle;
      j["match"] = ok;
    }
    emit(j);
  } else {
    std::cout << "h\t" << h.get_str() << "\n";
    if (oracle)
      std::cout << "oracle\t" << h_oracle << "\n"
                << "check\t" << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : kExitVerifyFail;
}

int cmd_mass(const Common& c, const std::string& d_str, bool enumerate) {
  fqf::Poly D = parse_poly(d_str, c.q);
  fqf::ReducedLattice seed = fqf::seed_lattice(c.q, D);
  fqf::GenusSymbol sym = fqf::genus_symbol(seed.gram);
  fqf::Rational formula = fqf::mass_formula(sym);
  bool ok = true;
  fqf::Rational enumerated;
  size_t classes = 0;
  if (enumerate) {
    fqf::ClassList cl = fqf::neighbor_closure(seed, {}, formula);
    enumerated = cl.mass();
    classes = cl.reps.size();
    ok = enumerated == formula;
  }
  if (json_mode(c)) {
    fqf::Json j{{"schema", fqf::kSchemaVersion},
                {"q", c.q},
                {"D", D.to_string()},
                {"formula", fqf::rational_str(formula)}};
    if (enumerate) {
      j["enumerated"] = fqf::rational_str(enumerated);
      j["classes"] = classes;
      j["match"] = ok;
    }
    emit(j);
  } else {
    std::cout << "formula\t" << fqf::rational_str(formula) << "\n";
    if (enumerate)
      std::cout << "enumerated\t" << fqf::rational_str(enumerated) << "\n"
                << "classes\t" << classes << "\n"
                << "check\t" << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : kExitVerifyFail;
}

int cmd_genus(const Common& c, const std::string& d_str, const std::string& method) {
  fqf::Poly D = parse_poly(d_str, c.q);
  fqf::ClassList cl;
  if (method == "exhaustive") {
    cl = fqf::exhaustive_classes(c.q, D);
  } else {
    fqf::ReducedLattice seed = fqf::seed_lattice(c.q, D);
    fqf::GenusSymbol sym = fqf::genus_symbol(seed.gram);
    cl = fqf::neighbor_closure(seed, {}, fqf::mass_formula(sym));
  }
  if (json_mode(c)) {
    emit(fqf::class_list_to_json(cl));
  } else {
    std::cout << "class\tg11\tg12\tg13\tg22\tg23\tg33\tso_order\n";
    for (size_t i = 0; i < cl.reps.size(); ++i) {
      const fqf::Mat3& G = cl.reps[i].gram;
      std::cout << i << '\t' << G.at(0, 0).to_string() << '\t' << G.at(0, 1).to_string()
                << '\t' << G.at(0, 2).to_string() << '\t' << G.at(1, 1).to_string()
                << '\t' << G.at(1, 2).to_string() << '\t' << G.at(2, 2).to_string()
                << '\t' << cl.so_orders[i] << "\n";
    }
    std::cout << "mass\t" << fqf::rational_str(cl.mass()) << "\n";
  }
  return 0;
}

int cmd_represent(const Common& c, const std::string& d_str, const std::string& a_str) {
  fqf::Poly D = parse_poly(d_str, c.q);
  fqf::Poly a = parse_poly(a_str, c.q);
  if (!fqf::admissible_representation_target(a, D))
    throw std::domain_error("a must be monic, squarefree, coprime to D and "
                            "representable at infinity");
  fqf::ReducedLattice seed = fqf::seed_lattice(c.q, D);
  fqf::GenusSymbol sym = fqf::genus_symbol(seed.gram);
  fqf::ClassList cl = fqf::neighbor_closure(seed, {}, fqf::mass_formula(sym));
  fqf::Rational lhs = fqf::siegel_lhs(cl, a);
  fqf::Poly m = -(a * D);
  fqf::Integer h = fqf::class_number(m);
  fqf::Integer two_r = 1;
  for (int i = 0; i < sym.r; ++i) two_r *= 2;
  fqf::Rational rhs(h, two_r);
  rhs.canonicalize();
  bool ok = lhs == rhs;
  if (json_mode(c)) {
    fqf::Json per = fqf::Json::array();
    for (size_t i = 0; i < cl.reps.size(); ++i)
      per.push_back(fqf::Json{{"class", i},
                              {"count", fqf::representation_count(cl.reps[i], a)},
                              {"so_order", cl.so_orders[i]}});
    emit(fqf::Json{{"schema", fqf::kSchemaVersion},
                   {"q", c.q},
                   {"D", D.to_string()},
                   {"a", a.to_string()},
                   {"per_class", per},
                   {"weighted_sum", fqf::rational_str(lhs)},
                   {"picard_side", fqf::rational_str(rhs)},
                   {"match", ok}});
  } else {
    std::cout << "class\tcount\tso_order\n";
    for (size_t i = 0; i < cl.reps.size(); ++i)
      std::cout << i << '\t' << fqf::representation_count(cl.reps[i], a) << '\t'
                << cl.so_orders[i] << "\n";
    std::cout << "weighted_sum\t" << fqf::rational_str(lhs) << "\n"
              << "picard_side\t" << fqf::rational_str(rhs) << "\n"
              << "check\t" << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : kExitVerifyFail;
}

int cmd_average(const Common& c, const std::string& d_str, int lmax) {
  fqf::Poly D = parse_poly(d_str, c.q);
  fqf::Rational limit = fqf::l_average_normalized(c.q, D);
  fqf::Rational qinv(1, c.q);
  fqf::Json rows = fqf::Json::array();
  if (!json_mode(c)) std::cout << "l\taverage\tlimit\tdeviation(float)\n";
  for (int l = 1; l <= lmax; ++l) {
    fqf::Rational sum(0);
    long count = 0;
    fqf::for_each_of_degree(c.q, l, [&](const fqf::Poly& m) {
      if (fqf::gcd(m, D).deg() != 0) return;
      sum += fqf::l_polynomial(D * m).eval(qinv);
      ++count;
    });
    fqf::Rational avg = sum / count;
    double dev = std::abs(fqf::Rational(avg / limit - 1).get_d());
    if (json_mode(c)) {
      rows.push_back(fqf::Json{{"l", l},
                               {"average", fqf::rational_str(avg)},
                               {"limit", fqf::rational_str(limit)},
                               {"deviation_float", dev}});
    } else {
      std::cout << l << '\t' << fqf::rational_str(avg) << '\t'
                << fqf::rational_str(limit) << '\t' << dev << "\n";
    }
  }
  if (json_mode(c))
    emit(fqf::Json{{"schema", fqf::kSchemaVersion},
                   {"q", c.q},
                   {"D", D.to_string()},
                   {"rows", rows}});
  return 0;
}

int cmd_epstein(const Common& c, const std::string& d_str, int kmax,
                const std::string& twist, const std::string& dv_str) {
  fqf::Poly D = parse_poly(d_str, c.q);
  fqf::ReducedLattice L = fqf::seed_lattice(c.q, D);
  fqf::Twist tw = fqf::Twist::none;
  fqf::Poly dv;
  if (twist == "psi") {
    tw = fqf::Twist::psi;
  } else if (twist == "phi_psi") {
    tw = fqf::Twist::phi_psi;
  } else if (twist == "chi_d") {
    tw = fqf::Twist::chi_d;
    if (dv_str.empty()) throw std::domain_error("--twist chi_d requires --d");
    dv = parse_poly(dv_str, c.q);
  }
  auto coeffs = fqf::twisted_zeta_coefficients(L, kmax, tw, dv);
  if (json_mode(c)) {
    emit(fqf::Json{{"schema", fqf::kSchemaVersion},
                   {"q", c.q},
                   {"D", D.to_string()},
                   {"twist", twist},
                   {"coefficients", coeffs}});
  } else {
    std::cout << "k\tcoefficient\n";
    for (int k = 0; k <= kmax; ++k) std::cout << k << '\t' << coeffs[k] << "\n";
  }
  return 0;
}

int cmd_verify(const Common& c, const std::string& suite) {
  auto results = fqf::run_acceptance(suite == "fast");
  bool all = true;
  if (json_mode(c)) {
    fqf::Json rows = fqf::Json::array();
    for (const auto& r : results) {
      all = all && r.pass;
      rows.push_back(fqf::Json{{"id", r.id},
                               {"name", r.name},
                               {"pass", r.pass},
                               {"detail", r.detail},
                               {"seconds", r.seconds}});
    }
    emit(fqf::Json{{"schema", fqf::kSchemaVersion}, {"checks", rows}, {"pass", all}});
  } else {
    for (const auto& r : results) {
      all = all && r.pass;
      std::cout << fqf::format_result_line(r) << "\n";
    }
    std::cout << (all ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  }
  return all ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic of definite ternary quadratic forms over F_q[t]"};
  app.require_subcommand(1);

  Common common;
  std::string b_str, m_str, d_str, a_str, dv_str;
  std::string method = "neighbor", twist = "none", suite = "all";
  bool oracle = false, enumerate = false;
  int lmax = 4, kmax = 8;

  auto* lpoly = app.add_subcommand("lpoly", "Dirichlet L-polynomial of chi_b");
  add_common(lpoly, common);
  lpoly->add_option("--b", b_str, "character modulus")->required();

  auto* classno = app.add_subcommand("classno", "Picard group order of A[sqrt(m)]");
  add_common(classno, common);
  classno->add_option("--m", m_str, "order discriminant")->required();
  classno->add_flag("--oracle", oracle, "cross-check with the ideal-enumeration oracle");

  auto* mass = app.add_subcommand("mass", "mass of the genus of determinant D");
  add_common(mass, common);
  mass->add_option("--D", d_str, "determinant (monic squarefree)")->required();
  mass->add_flag("--enumerate", enumerate, "also enumerate the classes and compare");

  auto* genus = app.add_subcommand("genus", "class representatives of the genus");
  add_common(genus, common);
  genus->add_option("--D", d_str, "determinant (monic squarefree)")->required();
  genus->add_option("--method", method, "class enumeration method")
      ->check(CLI::IsMember({"neighbor", "exhaustive"}));

  auto* represent = app.add_subcommand("represent", "weighted representation numbers");
  add_common(represent, common);
  represent->add_option("--D", d_str, "determinant (monic squarefree)")->required();
  represent->add_option("--a", a_str, "represented value")->required();

  auto* average = app.add_subcommand("average", "normalized L-value averages");
  add_common(average, common);
  average->add_option("--D", d_str, "twisting determinant")->required();
  average->add_option("--lmax", lmax, "largest degree of the averaging family");

  auto* epstein = app.add_subcommand("epstein", "theta-series coefficient tables");
  add_common(epstein, common);
  epstein->add_option("--D", d_str, "determinant (monic squarefree)")->required();
  epstein->add_option("--kmax", kmax, "largest coefficient index");
  epstein->add_option("--twist", twist, "coefficient twist")
      ->check(CLI::IsMember({"none", "psi", "phi_psi", "chi_d"}));
  epstein->add_option("--d", dv_str, "divisor of D (for --twist chi_d)");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, common);
  verify->add_option("--suite", suite, "which checks to run")
      ->check(CLI::IsMember({"all", "fast"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*lpoly) return cmd_lpoly(common, b_str);
    if (*classno) return cmd_classno(common, m_str, oracle);
    if (*mass) return cmd_mass(common, d_str, enumerate);
    if (*genus) return cmd_genus(common, d_str, method);
    if (*represent) return cmd_represent(common, d_str, a_str);
    if (*average) return cmd_average(common, d_str, lmax);
    if (*epstein) return cmd_epstein(common, d_str, kmax, twist, dv_str);
    if (*verify) return cmd_verify(common, suite);
  } catch (const BadPoly& e) {
    std::cerr << "error\t" << e.what() << "\n";
    return kExitBadPoly;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error\t" << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    std::cerr << "error\t" << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error\t" << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
