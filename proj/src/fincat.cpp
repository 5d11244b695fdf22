#include "dblcat/fincat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dblcat {

bool valid_token(const Token& t) {
  if (t.empty()) return false;
  for (unsigned char c : t) {
    if (std::isspace(c) || c == ':' || c == ',') return false;
  }
  return true;
}

void ValidationReport::add(std::string axiom, std::vector<Token> ids,
                           std::string expected, std::string found) {
  ok = false;
  violations.push_back({std::move(axiom), std::move(ids), std::move(expected),
                        std::move(found)});
}

void ValidationReport::absorb(const ValidationReport& other,
                              const std::string& prefix) {
  for (const Violation& v : other.violations) {
    Violation copy = v;
    copy.axiom = prefix + copy.axiom;
    violations.push_back(std::move(copy));
    ok = false;
  }
}

void ValidationReport::sort_violations() {
  std::sort(violations.begin(), violations.end());
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw MalformedPresentation(what);
}

void check_tokens(const std::set<Token>& xs, const char* sort) {
  for (const Token& x : xs) {
    if (!valid_token(x)) malformed(std::string(sort) + " token invalid: '" + x + "'");
  }
}

// map must be total on `keys` and land in `values`.
void check_unary(const std::map<Token, Token>& m, const std::set<Token>& keys,
                 const std::set<Token>& values, const std::string& name) {
  for (const Token& k : keys) {
    auto it = m.find(k);
    if (it == m.end()) malformed(name + " missing entry for " + k);
    if (!values.count(it->second))
      malformed(name + "(" + k + ") = " + it->second + " undeclared");
  }
  for (const auto& [k, v] : m) {
    if (!keys.count(k)) malformed(name + " keyed on undeclared " + k);
  }
}

}  // namespace

void require_well_formed(const FinCategory& k) {
  check_tokens(k.objects, "object");
  check_tokens(k.morphisms, "morphism");
  check_unary(k.src, k.morphisms, k.objects, "src");
  check_unary(k.tgt, k.morphisms, k.objects, "tgt");
  check_unary(k.id, k.objects, k.morphisms, "id");
  for (const auto& [gf, h] : k.comp) {
    const auto& [g, f] = gf;
    if (!k.morphisms.count(g) || !k.morphisms.count(f) || !k.morphisms.count(h))
      malformed("comp(" + g + "," + f + ") references undeclared morphism");
    if (k.src.at(g) != k.tgt.at(f))
      malformed("comp entry on non-composable pair (" + g + "," + f + ")");
  }
  for (const Token& g : k.morphisms) {
    for (const Token& f : k.morphisms) {
      if (k.src.at(g) != k.tgt.at(f)) continue;
      if (!k.comp.count({g, f}))
        malformed("comp missing entry for composable pair (" + g + "," + f + ")");
    }
  }
}

ValidationReport validate_category(const FinCategory& k) {
  require_well_formed(k);
  ValidationReport report;

  for (const Token& x : k.objects) {
    const Token& ix = k.id.at(x);
    if (k.src.at(ix) != x || k.tgt.at(ix) != x)
      report.add("id-boundary", {x, ix}, x + "->" + x,
                 k.src.at(ix) + "->" + k.tgt.at(ix));
  }

  for (const auto& [gf, h] : k.comp) {
    const auto& [g, f] = gf;
    if (k.src.at(h) != k.src.at(f) || k.tgt.at(h) != k.tgt.at(g))
      report.add("comp-boundary", {g, f, h},
                 k.src.at(f) + "->" + k.tgt.at(g),
                 k.src.at(h) + "->" + k.tgt.at(h));
  }

  // Lookups through id values are guarded: a mutated identity map may
  // point at a morphism with the wrong boundary, which surfaces here as a
  // unit-law violation rather than a missing-table error.
  for (const Token& f : k.morphisms) {
    auto left = k.comp.find({k.id.at(k.tgt.at(f)), f});
    if (left == k.comp.end() || left->second != f)
      report.add("unit-law", {k.id.at(k.tgt.at(f)), f}, f,
                 left == k.comp.end() ? "<not-composable>" : left->second);
    auto right = k.comp.find({f, k.id.at(k.src.at(f))});
    if (right == k.comp.end() || right->second != f)
      report.add("unit-law", {f, k.id.at(k.src.at(f))}, f,
                 right == k.comp.end() ? "<not-composable>" : right->second);
  }

  for (const Token& h : k.morphisms) {
    for (const Token& g : k.morphisms) {
      if (k.src.at(h) != k.tgt.at(g)) continue;
      for (const Token& f : k.morphisms) {
        if (k.src.at(g) != k.tgt.at(f)) continue;
        // Outer pairs can be non-composable only under a comp-boundary
        // violation, which is reported separately; skip those triples.
        auto gf = k.comp.find({g, f});
        auto hg = k.comp.find({h, g});
        if (gf == k.comp.end() || hg == k.comp.end()) continue;
        auto a = k.comp.find({h, gf->second});
        auto b = k.comp.find({hg->second, f});
        if (a == k.comp.end() || b == k.comp.end()) continue;
        if (a->second != b->second)
          report.add("associativity", {h, g, f}, b->second, a->second);
      }
    }
  }

  report.sort_violations();
  return report;
}

}  // namespace dblcat
