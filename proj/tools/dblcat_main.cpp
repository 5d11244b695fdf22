// dblcat: validation and computation front end for finite strict double
// categories. Exit codes: 0 all checks pass, 1 checks failed, 2 malformed
// input or bad parameters.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dblcat/generators.hpp"
#include "dblcat/json_io.hpp"

namespace {

using namespace dblcat;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitMalformed = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedPresentation("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedPresentation("cannot write " + path);
  out << text;
}

json load_document(const std::string& path) {
  return parse_text(read_file(path));
}

std::string join(const std::vector<Token>& ids) {
  std::string out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  return out;
}

void print_violations(const ValidationReport& report) {
  for (const Violation& v : report.violations)
    std::cout << v.axiom << "\t" << join(v.ids) << "\t" << v.expected << "\t"
              << v.found << "\n";
}

// Validation entry per document kind.
ValidationReport validate_any(const json& document) {
  auto [kind, body] = unwrap_document(document);
  if (kind == "double_category")
    return validate_double_category(double_category_from_json(body));
  if (kind == "two_category")
    return validate_two_category(two_category_from_json(body));
  if (kind == "decorated") return validate_decorated(decorated_from_json(body));
  if (kind == "functor") return validate_double_functor(functor_from_json(body));
  if (kind == "transformation")
    return validate_transformation(transformation_from_json(body));
  if (kind == "gamma_report") {
    if (!body.contains("gamma"))
      throw MalformedPresentation("gamma_report document lacks a gamma section");
    return validate_double_category(double_category_from_json(body.at("gamma")));
  }
  // findim documents hold a single equivariant morphism
  EquivariantMorphism t = equivariant_from_json(body);
  ValidationReport report;
  if (!is_equivariant(t))
    report.add("equivariance", {}, "phi(a x b) = f(a) phi(x) g(b)", "violated");
  return report;
}

int cmd_validate(const std::string& path) {
  ValidationReport report = validate_any(load_document(path));
  if (report.ok) return kExitOk;
  print_violations(report);
  return kExitViolations;
}

int cmd_gamma(const std::string& path, bool lengths, bool witnesses,
              const std::string& out) {
  FinDoubleCategory c = load_double_category_document(load_document(path));
  if (!validate_double_category(c).ok)
    throw MalformedPresentation("input double category fails validation");
  GammaAnalysis a = vertical_filtration(c);
  std::cout << "gg=" << (a.gamma.squares == c.squares ? "true" : "false")
            << " squares=" << c.squares.size()
            << " gamma=" << a.gamma.squares.size() << " stable_at=" << a.stable_at
            << "\n";
  if (!out.empty())
    write_output(out, canonical_dump(wrap_document(
                          "gamma_report", gamma_report_to_json(c, a, lengths,
                                                               witnesses))));
  return kExitOk;
}

int run_suites(const FinDoubleCategory& c, const std::vector<std::string>& suites) {
  bool all_ok = true;
  for (const std::string& name : suites) {
    ValidationReport report;
    std::string detail;
    if (name == "axioms") {
      report = validate_double_category(c);
      detail = "violations=" + std::to_string(report.violations.size());
    } else if (name == "prop44") {
      report = check_prop_4_4(c);
      GammaAnalysis a = vertical_filtration(c);
      int nonglobular = 0;
      for (const Token& q : a.gamma.squares)
        if (!is_globular(c, q)) ++nonglobular;
      detail = "nonglobular=" + std::to_string(nonglobular);
    } else if (name == "cor45") {
      report = check_cor_4_5(c);
      detail = "pairs-scanned";
    } else if (name == "lemma46") {
      report = check_lemma_4_6(c);
      GammaAnalysis a = vertical_filtration(c);
      detail = "replayed=" + std::to_string(a.levels.front().v.size());
    } else if (name == "lemma51") {
      report = check_filtration_preservation(identity_functor(c));
      detail = "identity-functor";
    } else if (name == "prop36") {
      report = check_epsilon_naturality(identity_functor(c));
      detail = "identity-functor";
    } else {
      throw MalformedPresentation("unknown suite: " + name);
    }
    std::cout << name << "\t" << (report.ok ? "pass" : "fail") << "\t" << detail
              << "\n";
    if (!report.ok) {
      print_violations(report);
      all_ok = false;
    }
  }
  return all_ok ? kExitOk : kExitViolations;
}

int cmd_check(const std::string& path, const std::string& suite) {
  FinDoubleCategory c = load_double_category_document(load_document(path));
  if (!validate_double_category(c).ok)
    throw MalformedPresentation("input double category fails validation");
  std::vector<std::string> suites;
  if (suite == "all")
    suites = {"axioms", "prop44", "cor45", "lemma46", "lemma51", "prop36"};
  else
    suites = {suite};
  return run_suites(c, suites);
}

int cmd_gen(const std::string& kind, const std::string& poset,
            const std::string& two_cat, const std::vector<std::string>& operands,
            const std::string& out) {
  FinDoubleCategory c;
  if (kind == "sq") {
    if (poset.empty()) throw MalformedPresentation("gen sq requires --poset");
    c = gen_commuting_squares(gen_poset_category(parse_poset_spec(poset)));
  } else if (kind == "trivial" || kind == "quintet") {
    if (two_cat.empty())
      throw MalformedPresentation("gen " + kind + " requires --two-cat");
    auto [k, body] = unwrap_document(load_document(two_cat));
    Fin2Category b;
    if (k == "two_category")
      b = two_category_from_json(body);
    else if (k == "decorated")
      b = two_category_from_json(body.at("underlying"));
    else
      throw MalformedPresentation("gen " + kind +
                                  " expects a two_category or decorated document");
    c = kind == "trivial" ? gen_trivial(b) : gen_quintet(b);
  } else if (kind == "product") {
    if (operands.size() != 2)
      throw MalformedPresentation("gen product takes two operand paths");
    c = gen_product(load_double_category_document(load_document(operands[0])),
                    load_double_category_document(load_document(operands[1])));
  } else {
    throw MalformedPresentation("unknown gen kind: " + kind);
  }
  write_output(out, canonical_dump(wrap_document("double_category",
                                                 double_category_to_json(c))));
  return kExitOk;
}

int cmd_hstar(const std::string& path, const std::string& out) {
  FinDoubleCategory c = load_double_category_document(load_document(path));
  if (!validate_double_category(c).ok)
    throw MalformedPresentation("input double category fails validation");
  DecoratedBicategory d = decorated_horizontalization(c);
  write_output(out, canonical_dump(wrap_document("decorated", decorated_to_json(d))));
  return kExitOk;
}

int cmd_functor_check(const std::string& path, bool lemma51, bool prop36,
                      bool universal) {
  json document = load_document(path);
  auto [kind, body] = unwrap_document(document);
  if (kind != "functor")
    throw MalformedPresentation("functor-check expects a functor document");
  DoubleFunctor f = functor_from_json(body);
  ValidationReport valid = validate_double_functor(f);
  std::cout << "functor\t" << (valid.ok ? "pass" : "fail") << "\tvalidated\n";
  if (!valid.ok) {
    print_violations(valid);
    return kExitViolations;
  }
  bool all_ok = true;
  if (!lemma51 && !prop36 && !universal) lemma51 = prop36 = universal = true;
  if (lemma51) {
    ValidationReport r = check_filtration_preservation(f);
    std::cout << "lemma51\t" << (r.ok ? "pass" : "fail") << "\tlevels\n";
    if (!r.ok) {
      print_violations(r);
      all_ok = false;
    }
  }
  if (prop36) {
    ValidationReport r = check_epsilon_naturality(f);
    std::cout << "prop36\t" << (r.ok ? "pass" : "fail") << "\tepsilon+triangles\n";
    if (!r.ok) {
      print_violations(r);
      all_ok = false;
    }
  }
  if (universal) {
    // Corestrict gamma(source) -> target through gamma(target).
    DoubleFunctor from_gamma =
        compose_functors(f, inclusion_functor(gamma(f.source), f.source));
    DoubleFunctor lift = universal_lift(from_gamma);
    DoubleFunctor roundtrip =
        compose_functors(inclusion_functor(lift.target, f.target), lift);
    const bool ok = roundtrip == from_gamma;
    std::cout << "universal\t" << (ok ? "pass" : "fail") << "\tcorestriction\n";
    if (!ok) all_ok = false;
  }
  return all_ok ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite strict double category toolkit"};
  app.require_subcommand(1);

  std::string path, out, suite = "all", gen_kind, poset, two_cat;
  std::vector<std::string> operands;
  bool lengths = false, witnesses = false;
  bool lemma51 = false, prop36 = false, universal = false;

  CLI::App* validate = app.add_subcommand("validate", "run the axiom validator");
  validate->add_option("path", path)->required();

  CLI::App* gamma_cmd = app.add_subcommand("gamma", "compute the globularily generated piece");
  gamma_cmd->add_option("path", path)->required();
  gamma_cmd->add_flag("--lengths", lengths);
  gamma_cmd->add_flag("--witnesses", witnesses);
  gamma_cmd->add_option("--out", out);

  CLI::App* check = app.add_subcommand("check", "run property suites");
  check->add_option("path", path)->required();
  check->add_option("--suite", suite)
      ->check(CLI::IsMember({"axioms", "prop44", "cor45", "lemma46", "lemma51",
                             "prop36", "all"}));

  CLI::App* gen = app.add_subcommand("gen", "emit a generated instance");
  gen->add_option("kind", gen_kind)->required();
  gen->add_option("operands", operands);
  gen->add_option("--poset", poset);
  gen->add_option("--two-cat", two_cat);
  gen->add_option("--out", out);

  CLI::App* hstar = app.add_subcommand("hstar", "emit the decorated horizontalization");
  hstar->add_option("path", path)->required();
  hstar->add_option("--out", out);

  CLI::App* fcheck = app.add_subcommand("functor-check", "run functor suites");
  fcheck->add_option("path", path)->required();
  fcheck->add_flag("--lemma51", lemma51);
  fcheck->add_flag("--prop36", prop36);
  fcheck->add_flag("--universal", universal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (gamma_cmd->parsed()) return cmd_gamma(path, lengths, witnesses, out);
    if (check->parsed()) return cmd_check(path, suite);
    if (gen->parsed()) return cmd_gen(gen_kind, poset, two_cat, operands, out);
    if (hstar->parsed()) return cmd_hstar(path, out);
    if (fcheck->parsed()) return cmd_functor_check(path, lemma51, prop36, universal);
  } catch (const MalformedPresentation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
