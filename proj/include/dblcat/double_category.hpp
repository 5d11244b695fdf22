// Finite strict double categories and the full axiom validator.
#pragma once

#include "dblcat/fincat.hpp"

namespace dblcat {

// Presentation of a finite strict double category. c0 carries objects and
// vertical morphisms. Squares form the morphisms of the category C1 whose
// objects are the horizontal morphisms: dom/cod are the horizontal
// domain/codomain, vsrc/vtgt the images under the source and target
// functors s,t : C1 -> C0.
//
// Orientation of a square q:
//
//        dom q
//    x ---------> y
//    |            |
//    | vsrc q     | vtgt q
//    v            v
//    z ---------> w
//        cod q
//
// vcomp is keyed (psi, phi) with dom(psi) = cod(phi) (psi below phi);
// hcomp_sq is keyed (psi, phi) with vsrc(psi) = vtgt(phi) (psi to the
// right of phi); hcomp_h is keyed (b, a) with hsrc(b) = htgt(a).
struct FinDoubleCategory {
  FinCategory c0;
  std::set<Token> hmors;
  std::map<Token, Token> hsrc, htgt;  // hmor -> object
  std::set<Token> squares;
  std::map<Token, Token> dom, cod;    // square -> hmor
  std::map<Token, Token> vsrc, vtgt;  // square -> vertical morphism
  std::map<Token, Token> vid;         // hmor -> square
  std::map<TokenPair, Token> vcomp;
  std::map<Token, Token> hid_obj;   // object -> hmor
  std::map<Token, Token> hid_vmor;  // vertical morphism -> square
  std::map<TokenPair, Token> hcomp_h;
  std::map<TokenPair, Token> hcomp_sq;

  bool operator==(const FinDoubleCategory&) const = default;

  // The category of morphisms C1 (objects: hmors, morphisms: squares).
  FinCategory c1() const;
};

struct SquareBoundary {
  Token dom, cod, vsrc, vtgt;
  bool operator==(const SquareBoundary&) const = default;
};

void require_well_formed(const FinDoubleCategory& c);

// Checks every double category invariant: C0 and C1 are categories, s, t
// and i are functors, * is a bifunctor satisfying interchange, and all
// horizontal compositions are strictly unital and associative.
ValidationReport validate_double_category(const FinDoubleCategory& c);

// True iff both vertical boundaries of q are identities.
bool is_globular(const FinDoubleCategory& c, const Token& q);

// True iff vsrc(q) = vtgt(q).
bool is_horizontal_endomorphism(const FinDoubleCategory& c, const Token& q);

SquareBoundary boundary(const FinDoubleCategory& c, const Token& q);

// Shared precondition helper: throws InvalidInput unless c validates.
void require_valid(const FinDoubleCategory& c, const char* op);

}  // namespace dblcat
