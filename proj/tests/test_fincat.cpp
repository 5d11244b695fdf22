#include "doctest.h"
#include "dblcat/fincat.hpp"
#include "support/oracles.hpp"

using namespace dblcat;

namespace {

FinCategory walking_arrow() {
  FinCategory k;
  k.objects = {"x", "y"};
  k.morphisms = {"a", "id_x", "id_y"};
  k.src = {{"a", "x"}, {"id_x", "x"}, {"id_y", "y"}};
  k.tgt = {{"a", "y"}, {"id_x", "x"}, {"id_y", "y"}};
  k.id = {{"x", "id_x"}, {"y", "id_y"}};
  k.comp = {{{"id_x", "id_x"}, "id_x"},
            {{"id_y", "id_y"}, "id_y"},
            {{"a", "id_x"}, "a"},
            {{"id_y", "a"}, "a"}};
  return k;
}

// One-object category on the set {one, s, t}; t*t = 1 and s*1 = s break
// associativity at (s, t, t) while both unit laws hold.
FinCategory skew_monoid() {
  FinCategory k;
  k.objects = {"m"};
  k.morphisms = {"one", "s", "t"};
  for (const Token& f : k.morphisms) {
    k.src[f] = "m";
    k.tgt[f] = "m";
  }
  k.id = {{"m", "one"}};
  auto mul = [&](const Token& g, const Token& f) -> Token {
    if (g == "one") return f;
    if (f == "one") return g;
    if (g == "s" && f == "s") return "s";
    if (g == "s" && f == "t") return "t";
    if (g == "t" && f == "s") return "s";
    return "one";  // t*t
  };
  for (const Token& g : k.morphisms)
    for (const Token& f : k.morphisms) k.comp[{g, f}] = mul(g, f);
  return k;
}

}  // namespace

TEST_CASE("walking arrow validates") {
  ValidationReport report = validate_category(walking_arrow());
  CHECK(report.ok);
  CHECK(report.violations.empty());
}

TEST_CASE("redirected unit entry is a unit-law violation") {
  FinCategory k = walking_arrow();
  k.comp[{"a", "id_x"}] = "id_x";
  ValidationReport report = validate_category(k);
  CHECK_FALSE(report.ok);
  bool found = false;
  for (const Violation& v : report.violations)
    if (v.axiom == "unit-law" && v.ids == std::vector<Token>{"a", "id_x"})
      found = true;
  CHECK(found);
}

TEST_CASE("non-associative table reports exactly the violating triples") {
  FinCategory k = skew_monoid();
  auto expected = testing::assoc_violations(k);
  REQUIRE_FALSE(expected.empty());

  ValidationReport report = validate_category(k);
  std::vector<std::array<Token, 3>> reported;
  for (const Violation& v : report.violations) {
    if (v.axiom != "associativity") continue;
    REQUIRE(v.ids.size() == 3);
    reported.push_back({v.ids[0], v.ids[1], v.ids[2]});
  }
  std::sort(expected.begin(), expected.end());
  std::sort(reported.begin(), reported.end());
  CHECK(reported == expected);
}

TEST_CASE("structural defects are malformed, not violations") {
  FinCategory k = walking_arrow();
  SUBCASE("undeclared comp value") {
    k.comp[{"a", "id_x"}] = "ghost";
    CHECK_THROWS_AS(validate_category(k), MalformedPresentation);
  }
  SUBCASE("missing composable entry") {
    k.comp.erase({"id_y", "a"});
    CHECK_THROWS_AS(validate_category(k), MalformedPresentation);
  }
  SUBCASE("entry on non-composable pair") {
    k.comp[{"id_x", "a"}] = "a";
    CHECK_THROWS_AS(validate_category(k), MalformedPresentation);
  }
  SUBCASE("token with forbidden character") {
    k.objects.insert("bad:token");
    k.id["bad:token"] = "id_x";
    CHECK_THROWS_AS(validate_category(k), MalformedPresentation);
  }
}

TEST_CASE("id redirected to a non-identity stays a reported violation") {
  FinCategory k = skew_monoid();
  k.id["m"] = "s";
  ValidationReport report = validate_category(k);
  CHECK_FALSE(report.ok);
  bool unit = false;
  for (const Violation& v : report.violations)
    if (v.axiom == "unit-law") unit = true;
  CHECK(unit);
}
