// Test-only oracles, independent of the library's filtration code path.
#pragma once

#include "dblcat/double_category.hpp"

namespace dblcat::testing {

// One-pass simultaneous closure: start from globular squares plus
// horizontal identities and saturate under both composition tables at
// once. Deliberately ignores the level structure.
inline std::set<Token> naive_gamma_squares(const FinDoubleCategory& c) {
  std::set<Token> s;
  for (const Token& q : c.squares)
    if (is_globular(c, q)) s.insert(q);
  for (const auto& [f, q] : c.hid_vmor) s.insert(q);

  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [key, r] : c.vcomp)
      if (s.count(key.first) && s.count(key.second) && s.insert(r).second)
        grew = true;
    for (const auto& [key, r] : c.hcomp_sq)
      if (s.count(key.first) && s.count(key.second) && s.insert(r).second)
        grew = true;
  }
  return s;
}

// Independent associativity scan for FinCategory: returns the violating
// triples (h, g, f) by direct table walking.
inline std::vector<std::array<Token, 3>> assoc_violations(const FinCategory& k) {
  std::vector<std::array<Token, 3>> out;
  for (const Token& h : k.morphisms)
    for (const Token& g : k.morphisms) {
      if (k.src.at(h) != k.tgt.at(g)) continue;
      for (const Token& f : k.morphisms) {
        if (k.src.at(g) != k.tgt.at(f)) continue;
        auto gf = k.comp.find({g, f});
        auto hg = k.comp.find({h, g});
        if (gf == k.comp.end() || hg == k.comp.end()) continue;
        auto a = k.comp.find({h, gf->second});
        auto b = k.comp.find({hg->second, f});
        if (a == k.comp.end() || b == k.comp.end()) continue;
        if (a->second != b->second) out.push_back({h, g, f});
      }
    }
  return out;
}

}  // namespace dblcat::testing
