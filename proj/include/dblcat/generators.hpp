// Deterministic builders for families of valid finite double categories.
// Generated identifiers encode their construction (boundary tokens joined
// by '|') so emitted documents stay human-auditable.
#pragma once

#include "dblcat/two_category.hpp"

namespace dblcat {

struct PosetSpec {
  int size = 0;
  std::set<std::pair<int, int>> relation;  // must be a partial order on 0..size-1

  bool operator==(const PosetSpec&) const = default;
};

bool is_partial_order(const PosetSpec& p);

PosetSpec poset_chain(int n);      // 0 <= 1 <= ... <= n-1
PosetSpec poset_antichain(int n);  // only reflexive pairs
PosetSpec poset_diamond();         // 0 <= 1,2 <= 3

// Accepts "chainN", "antichainN", "diamond", or "N;i<j;i<k" (explicit
// non-reflexive pairs; the reflexive-transitive closure is taken).
PosetSpec parse_poset_spec(const std::string& text);

// Thin category of the poset: objects x0..x{n-1}, one morphism le|xi|xj
// per related pair.
FinCategory gen_poset_category(const PosetSpec& p);

// Same construction as trivial_double, re-exported as a generator.
FinDoubleCategory gen_trivial(const Fin2Category& b);

// Commuting-squares double category Sq(K): objects of K, vertical and
// horizontal morphisms both Mor K, squares the quadruples (a, f, g, b)
// with comp(g, a) = comp(b, f), compositions by pasting.
FinDoubleCategory gen_commuting_squares(const FinCategory& k);

// Quintet double category of a strict 2-category: squares are tuples
// (a, f, g, b, alpha) with alpha : hcomp1(g, a) => hcomp1(b, f).
FinDoubleCategory gen_quintet(const Fin2Category& k);

// Componentwise product; tokens are pairs joined by '&'.
FinDoubleCategory gen_product(const FinDoubleCategory& c, const FinDoubleCategory& d);

}  // namespace dblcat
