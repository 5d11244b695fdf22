// Finite categories presented by identifier tables, and their validator.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dblcat/errors.hpp"

namespace dblcat {

using Token = std::string;
using TokenPair = std::pair<Token, Token>;

// Tokens are non-empty, contain no whitespace and neither ':' nor ','.
// The exclusions keep tab-separated reports and comma-joined id lists
// unambiguous.
bool valid_token(const Token& t);

// A finite category: objects, morphisms, boundary maps, identities and a
// composition table. comp is keyed (g, f) with src(g) = tgt(f) and holds
// g after f; it is total on composable pairs and empty elsewhere.
struct FinCategory {
  std::set<Token> objects;
  std::set<Token> morphisms;
  std::map<Token, Token> src, tgt;  // morphism -> object
  std::map<Token, Token> id;        // object -> morphism
  std::map<TokenPair, Token> comp;  // (g, f) -> g . f

  bool operator==(const FinCategory&) const = default;
};

struct Violation {
  std::string axiom;
  std::vector<Token> ids;
  std::string expected;
  std::string found;

  bool operator==(const Violation&) const = default;
  auto operator<=>(const Violation&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string axiom, std::vector<Token> ids, std::string expected,
           std::string found);
  // Merge another report, prefixing its axiom names.
  void absorb(const ValidationReport& other, const std::string& prefix);
  void sort_violations();
};

// Checks every FinCategory invariant: identity boundaries, composition
// boundaries, unit laws and associativity. Throws MalformedPresentation
// when a table references an undeclared identifier, is missing an entry
// on a composable pair, or has an entry on a non-composable pair.
ValidationReport validate_category(const FinCategory& k);

// Throws MalformedPresentation on structural defects only (no axioms).
void require_well_formed(const FinCategory& k);

}  // namespace dblcat
