// Miniature of the algebra/bimodule computation over the two-element
// field: algebras and bimodules by structure constants, equivariant
// morphisms, relative tensor products by row reduction, and the
// 2-subcyclic predicate decided by exhaustive generator enumeration.
#pragma once

#include <cstdint>
#include <vector>

#include "dblcat/double_category.hpp"

namespace dblcat {

// Vectors over the two-element field are bitmasks; dimension <= 30.
using BitVec = std::uint32_t;

struct F2Matrix {
  int rows = 0, cols = 0;
  std::vector<BitVec> col;  // col[j] holds the image of basis vector j

  static F2Matrix identity(int n);
  static F2Matrix zero(int rows, int cols);
  BitVec apply(BitVec v) const;
  bool operator==(const F2Matrix&) const = default;
};

// g after f.
F2Matrix compose(const F2Matrix& g, const F2Matrix& f);

struct F2Algebra {
  int dim = 0;
  std::vector<std::vector<BitVec>> mul;  // mul[i][j] = e_i * e_j
  BitVec unit = 0;

  BitVec mul_vec(BitVec u, BitVec v) const;
  bool valid() const;  // associativity and two-sided unit on all basis tuples
  bool operator==(const F2Algebra&) const = default;
};

struct F2Bimodule {
  F2Algebra left, right;
  int dim = 0;
  std::vector<std::vector<BitVec>> lact;  // lact[i][k] = e_i . m_k
  std::vector<std::vector<BitVec>> ract;  // ract[j][k] = m_k . e_j

  BitVec act_left(BitVec a, BitVec m) const;
  BitVec act_right(BitVec m, BitVec b) const;
  bool valid() const;
  bool operator==(const F2Bimodule&) const = default;
};

struct EquivariantMorphism {
  F2Bimodule source, target;
  F2Matrix f;    // source.left -> target.left
  F2Matrix phi;  // source -> target
  F2Matrix g;    // source.right -> target.right

  bool operator==(const EquivariantMorphism&) const = default;
};

bool is_algebra_morphism(const F2Algebra& a, const F2Algebra& b, const F2Matrix& f);

// A as a left-right A-bimodule.
F2Bimodule algebra_as_bimodule(const F2Algebra& a);

EquivariantMorphism identity_morphism(const F2Bimodule& m);

// The triple (f, f, f) on the algebras viewed as bimodules over
// themselves.
EquivariantMorphism hid_morphism(const F2Algebra& a, const F2Algebra& b,
                                 const F2Matrix& f);

// Entrywise composition (t2 after t1).
EquivariantMorphism compose_morphisms(const EquivariantMorphism& t2,
                                      const EquivariantMorphism& t1);

// phi(a x b) = f(a) phi(x) g(b) on all basis triples.
bool is_equivariant(const EquivariantMorphism& t);

// Requires the horizontal endomorphism shape (both bimodules over a
// single algebra each, f = g); decides existence of cyclic submodules
// Im(phi) within L within K by enumerating all generators on each side.
// Cyclic means generated by a single central element, i.e. the image of
// a bimodule map out of the acting algebra.
bool is_2_subcyclic(const EquivariantMorphism& t);

// Quotient bookkeeping for a relative tensor product M (x)_B M':
// pure-tensor coordinates are row-major (i, j) -> i * dim(M') + j, and the
// quotient basis is the set of non-pivot coordinates of the row-reduced
// middle-action relation span.
struct TensorSpace {
  int dm = 0, dm2 = 0;
  std::vector<BitVec> rel;     // reduced relation basis
  std::vector<int> pivots;     // pivot coordinate per relation row
  std::vector<int> qbasis;     // non-pivot coordinates, ascending
  int qdim = 0;

  BitVec embed(BitVec u, BitVec v) const;  // pure tensor u (x) v
  BitVec reduce(BitVec x) const;           // canonical coset representative
  BitVec to_quotient(BitVec x) const;
  BitVec lift(BitVec q) const;
};

TensorSpace tensor_space(const F2Bimodule& m, const F2Bimodule& m2);

// The relative tensor product over the shared middle algebra.
F2Bimodule tensor_bimodules(const F2Bimodule& m, const F2Bimodule& m2);

// (f, phi (x)_g phi', h) on the relative tensor products.
EquivariantMorphism tensor_morphisms(const EquivariantMorphism& t,
                                     const EquivariantMorphism& t2);

// Forward direction of the classification on a tagged fragment: every
// square tagged with a non-globular 2-subcyclic morphism must lie in the
// fragment's gamma with vertical length 1. Throws InconsistentTagging
// when tags contradict the fragment's tables.
ValidationReport check_prop_6_4_forward(
    const FinDoubleCategory& fragment,
    const std::map<Token, EquivariantMorphism>& tag);

// Small F2 row-reduction helpers shared with the tests.
namespace f2 {
// Reduced row echelon basis; returns rows and fills pivot positions.
std::vector<BitVec> rref(std::vector<BitVec> rows, std::vector<int>* pivots);
BitVec reduce_by(BitVec v, const std::vector<BitVec>& rows,
                 const std::vector<int>& pivots);
int rank(const std::vector<BitVec>& rows);
bool spans_contain(const std::vector<BitVec>& big, const std::vector<BitVec>& small);
}  // namespace f2

}  // namespace dblcat
