#include "doctest.h"
#include "dblcat/generators.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace dblcat;

namespace {

FinDoubleCategory sq2() {
  return gen_commuting_squares(gen_poset_category(poset_chain(2)));
}

const Token kIdX = "le|x0|x0";
const Token kIdY = "le|x1|x1";
const Token kArrow = "le|x0|x1";

Token sq(const Token& a, const Token& f, const Token& g, const Token& b) {
  return "sq|" + a + "|" + f + "|" + g + "|" + b;
}

}  // namespace

TEST_CASE("Sq(2) validates and has the six oracle squares") {
  FinDoubleCategory c = sq2();
  CHECK(validate_double_category(c).ok);

  // Independent quadruple enumeration against the walking arrow.
  FinCategory k = gen_poset_category(poset_chain(2));
  std::set<Token> expected;
  for (const Token& a : k.morphisms)
    for (const Token& f : k.morphisms) {
      if (k.src.at(f) != k.src.at(a)) continue;
      for (const Token& g : k.morphisms) {
        if (k.src.at(g) != k.tgt.at(a)) continue;
        for (const Token& b : k.morphisms) {
          if (k.src.at(b) != k.tgt.at(f) || k.tgt.at(b) != k.tgt.at(g)) continue;
          if (k.comp.at({g, a}) == k.comp.at({b, f})) expected.insert(sq(a, f, g, b));
        }
      }
    }
  CHECK(expected.size() == 6);
  CHECK(c.squares == expected);
}

TEST_CASE("swapped vid entry names the offending square") {
  FinDoubleCategory c = sq2();
  const Token bad = sq(kArrow, kArrow, kIdY, kIdY);
  REQUIRE(c.squares.count(bad));
  c.vid[kArrow] = bad;
  ValidationReport report = validate_double_category(c);
  CHECK_FALSE(report.ok);
  bool named = false;
  for (const Violation& v : report.violations)
    for (const Token& id : v.ids)
      if (id == bad || id == kArrow) named = true;
  CHECK(named);
}

TEST_CASE("trivial doubles over the builtin 2-categories validate") {
  for (const Fin2Category& b : testing::corpus_two_categories()) {
    FinDoubleCategory c = trivial_double(b);
    CHECK(validate_double_category(c).ok);
  }
}

TEST_CASE("globularity is read off the boundary") {
  FinDoubleCategory c = sq2();
  CHECK(is_globular(c, c.vid.at(kArrow)));
  CHECK(is_globular(c, c.vid.at(kIdX)));
  CHECK_FALSE(is_globular(c, c.hid_vmor.at(kArrow)));
  CHECK_FALSE(is_globular(c, sq(kArrow, kArrow, kIdY, kIdY)));
  CHECK_THROWS_AS(is_globular(c, "ghost"), UnknownIdentifier);
}

TEST_CASE("horizontal endomorphisms compare the two vertical boundaries") {
  FinDoubleCategory c = sq2();
  CHECK(is_horizontal_endomorphism(c, c.hid_vmor.at(kArrow)));
  // globular squares over an endo-horizontal morphism have both
  // boundaries equal to the same identity; over an arrow they differ
  for (const Token& q : c.squares)
    if (is_globular(c, q))
      CHECK(is_horizontal_endomorphism(c, q) ==
            (c.hsrc.at(c.dom.at(q)) == c.htgt.at(c.dom.at(q))));
  // (top=id_x, left=a, right=a, bottom=id_y)
  CHECK(is_horizontal_endomorphism(c, sq(kIdX, kArrow, kArrow, kIdY)));
  // (top=a, left=a, right=id_y, bottom=id_y)
  CHECK_FALSE(is_horizontal_endomorphism(c, sq(kArrow, kArrow, kIdY, kIdY)));
}

TEST_CASE("boundary returns the four stored components") {
  FinDoubleCategory c = sq2();
  SquareBoundary vb = boundary(c, c.vid.at(kArrow));
  CHECK(vb == SquareBoundary{kArrow, kArrow, kIdX, kIdY});
  SquareBoundary hb = boundary(c, c.hid_vmor.at(kArrow));
  CHECK(hb == SquareBoundary{kIdX, kIdY, kArrow, kArrow});
  SquareBoundary ob = boundary(c, sq(kIdX, kArrow, kArrow, kIdY));
  CHECK(ob == SquareBoundary{kIdX, kIdY, kArrow, kArrow});
}

TEST_CASE("boundaries of composites match the functoriality equations") {
  for (const auto& [name, c] : testing::corpus_double_categories(3, false)) {
    CAPTURE(name);
    for (const auto& [key, r] : c.vcomp) {
      CHECK(c.dom.at(r) == c.dom.at(key.second));
      CHECK(c.cod.at(r) == c.cod.at(key.first));
      CHECK(c.vsrc.at(r) == c.c0.comp.at({c.vsrc.at(key.first), c.vsrc.at(key.second)}));
      CHECK(c.vtgt.at(r) == c.c0.comp.at({c.vtgt.at(key.first), c.vtgt.at(key.second)}));
    }
    for (const auto& [key, r] : c.hcomp_sq) {
      CHECK(c.dom.at(r) == c.hcomp_h.at({c.dom.at(key.first), c.dom.at(key.second)}));
      CHECK(c.cod.at(r) == c.hcomp_h.at({c.cod.at(key.first), c.cod.at(key.second)}));
      CHECK(c.vsrc.at(r) == c.vsrc.at(key.second));
      CHECK(c.vtgt.at(r) == c.vtgt.at(key.first));
    }
  }
}

TEST_CASE("globular squares are closed under both compositions") {
  for (const auto& [name, c] : testing::corpus_double_categories(3, false)) {
    CAPTURE(name);
    for (const auto& [key, r] : c.vcomp)
      if (is_globular(c, key.first) && is_globular(c, key.second))
        CHECK(is_globular(c, r));
    for (const auto& [key, r] : c.hcomp_sq)
      if (is_globular(c, key.first) && is_globular(c, key.second))
        CHECK(is_globular(c, r));
  }
}

TEST_CASE("a twisted non-unit vcomp entry is caught by interchange") {
  // In the trivial double over the idempotent two-element monoid, turning
  // vcomp(e, e) into the identity leaves both unit laws and
  // associativity intact; only interchange against the untouched
  // horizontal table can notice.
  FinDoubleCategory c = trivial_double(testing::idempotent_monoid_2cat());
  c.vcomp[{"e", "e"}] = "one";
  ValidationReport report = validate_double_category(c);
  CHECK_FALSE(report.ok);
  bool interchange = false;
  for (const Violation& v : report.violations) {
    CHECK(v.axiom != "C1-unit-law");
    CHECK(v.axiom != "C1-associativity");
    if (v.axiom == "interchange") interchange = true;
  }
  CHECK(interchange);
}

TEST_CASE("mutation soundness on a sample of corpus instances") {
  auto corpus = testing::corpus_double_categories(3, false);
  size_t mutants = 0;
  for (const auto& [name, c] : corpus) {
    for (const auto& mu : testing::enumerate_named_mutants(c, 10)) {
      CAPTURE(name);
      CAPTURE(mu.description);
      ValidationReport report = validate_double_category(mu.instance);
      CHECK_FALSE(report.ok);
      CHECK_FALSE(report.violations.empty());
      CHECK_FALSE(report.violations.front().axiom.empty());
      ++mutants;
    }
  }
  CHECK(mutants > 50);
}
