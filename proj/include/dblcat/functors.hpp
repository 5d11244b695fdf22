// Strict double functors, natural transformations, gamma restrictions,
// the filtration-preservation and reflection checks, and the universal
// corestriction into the globularily generated piece.
#pragma once

#include "dblcat/gamma.hpp"

namespace dblcat {

struct DoubleFunctor {
  FinDoubleCategory source, target;
  std::map<Token, Token> f_obj, f_vmor, f_hmor, f_sq;

  bool operator==(const DoubleFunctor&) const = default;
};

struct CatFunctor {
  FinCategory source, target;
  std::map<Token, Token> f_obj, f_mor;

  bool operator==(const CatFunctor&) const = default;
};

// eta0 sends objects to vertical morphisms of the target, eta1 sends
// horizontal morphisms to squares of the target.
struct DoubleNaturalTransformation {
  DoubleFunctor src_f, tgt_f;
  std::map<Token, Token> eta0, eta1;

  bool operator==(const DoubleNaturalTransformation&) const = default;
};

ValidationReport validate_double_functor(const DoubleFunctor& f);
ValidationReport validate_cat_functor(const CatFunctor& f);
ValidationReport validate_transformation(const DoubleNaturalTransformation& t);

DoubleFunctor identity_functor(const FinDoubleCategory& c);
// Token inclusion of a sub-double category; used for the counit.
DoubleFunctor inclusion_functor(const FinDoubleCategory& sub,
                                const FinDoubleCategory& ambient);
// g after f; requires f.target == g.source on the nose.
DoubleFunctor compose_functors(const DoubleFunctor& g, const DoubleFunctor& f);

// Restriction of f to the globularily generated pieces of its source and
// target. Throws ImageEscape if a gamma square's image escapes the
// target's gamma (must never fire for valid inputs).
DoubleFunctor gamma_functor(const DoubleFunctor& f);

// Levelwise containment f_sq(V_n) within V_n of the target, and the same
// for H_n. Functors between non-globularily-generated instances are
// checked through their gamma restrictions.
ValidationReport check_filtration_preservation(const DoubleFunctor& f);

// The restriction of (f_hmor, f_sq) to the n-th vertical categories.
// Throws LevelOutOfRange when n exceeds the source's stabilization index.
CatFunctor restrict_vertical_functor(const DoubleFunctor& f, int n);

// Object map f_vmor, morphism map f_sq, between transversal categories.
CatFunctor transversal_functor(const DoubleFunctor& f);

// Commutation of the inclusion counit with f (epsilon_D . gamma f =
// f . epsilon_C) plus the counit-unit triangle identities on both ends.
ValidationReport check_epsilon_naturality(const DoubleFunctor& f);
ValidationReport check_epsilon_naturality(const DoubleFunctor& f,
                                          const DoubleFunctor& gamma_f);

// For f with globularily generated source, the unique corestriction
// through the target's gamma. Throws ImageEscape if an image square lies
// outside it.
DoubleFunctor universal_lift(const DoubleFunctor& f);

// All eta1 components land in the globularily generated piece of the
// target.
bool is_gg_transformation(const DoubleNaturalTransformation& t);

}  // namespace dblcat
