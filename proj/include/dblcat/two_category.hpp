// Finite strict 2-categories, decorated bicategories, horizontalization
// and the trivial double category construction.
#pragma once

#include "dblcat/double_category.hpp"

namespace dblcat {

// vcomp2 is keyed (beta, alpha) with src1(beta) = tgt1(alpha); hcomp1 is
// keyed (b, a) with src0(b) = tgt0(a); hcomp2 is keyed (beta, alpha) with
// the 0-cell boundaries matching: src0(src1 beta) = tgt0(src1 alpha).
struct Fin2Category {
  std::set<Token> cells0, cells1, cells2;
  std::map<Token, Token> src0, tgt0;  // cells1 -> cells0
  std::map<Token, Token> src1, tgt1;  // cells2 -> cells1
  std::map<Token, Token> id1;         // cells0 -> cells1
  std::map<Token, Token> id2;         // cells1 -> cells2
  std::map<TokenPair, Token> vcomp2, hcomp1, hcomp2;

  bool operator==(const Fin2Category&) const = default;
};

struct DecoratedBicategory {
  FinCategory decoration;
  Fin2Category underlying;

  bool operator==(const DecoratedBicategory&) const = default;
};

void require_well_formed(const Fin2Category& b);
ValidationReport validate_two_category(const Fin2Category& b);
ValidationReport validate_decorated(const DecoratedBicategory& b);
void require_valid(const Fin2Category& b, const char* op);

// The 2-category of objects, horizontal morphisms and globular squares of
// a valid double category; compositions restrict.
Fin2Category horizontalization(const FinDoubleCategory& c);

// The pair (object category, horizontalization).
DecoratedBicategory decorated_horizontalization(const FinDoubleCategory& c);

// The double category with discrete object category whose morphism
// category is (cells1, cells2, vcomp2). Tokens of b are preserved;
// identity vertical morphisms are freshly named.
FinDoubleCategory trivial_double(const Fin2Category& b);

// Token-level equality of decorated bicategories.
bool equal_decorated(const DecoratedBicategory& b1, const DecoratedBicategory& b2);

// True iff the decorated horizontalization of c equals b on the nose.
bool is_internalization(const FinDoubleCategory& c, const DecoratedBicategory& b);

}  // namespace dblcat
