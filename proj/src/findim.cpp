#include "dblcat/findim.hpp"

#include <algorithm>

#include "dblcat/gamma.hpp"

namespace dblcat {

namespace f2 {

std::vector<BitVec> rref(std::vector<BitVec> rows, std::vector<int>* pivots) {
  std::vector<BitVec> basis;
  std::vector<int> piv;
  for (BitVec v : rows) {
    v = reduce_by(v, basis, piv);
    if (v == 0) continue;
    const int p = __builtin_ctz(v);
    // clear the new pivot from existing rows to stay fully reduced
    for (BitVec& row : basis)
      if (row & (BitVec(1) << p)) row ^= v;
    basis.push_back(v);
    piv.push_back(p);
  }
  // order rows by pivot for determinism
  std::vector<std::pair<int, BitVec>> z;
  for (size_t i = 0; i < basis.size(); ++i) z.push_back({piv[i], basis[i]});
  std::sort(z.begin(), z.end());
  basis.clear();
  piv.clear();
  for (auto& [p, row] : z) {
    piv.push_back(p);
    basis.push_back(row);
  }
  if (pivots) *pivots = piv;
  return basis;
}

BitVec reduce_by(BitVec v, const std::vector<BitVec>& rows,
                 const std::vector<int>& pivots) {
  for (size_t i = 0; i < rows.size(); ++i)
    if (v & (BitVec(1) << pivots[i])) v ^= rows[i];
  return v;
}

int rank(const std::vector<BitVec>& rows) {
  std::vector<int> piv;
  return static_cast<int>(rref(rows, &piv).size());
}

bool spans_contain(const std::vector<BitVec>& big, const std::vector<BitVec>& small) {
  std::vector<int> piv;
  std::vector<BitVec> basis = rref(big, &piv);
  for (BitVec v : small)
    if (reduce_by(v, basis, piv) != 0) return false;
  return true;
}

}  // namespace f2

F2Matrix F2Matrix::identity(int n) {
  F2Matrix m;
  m.rows = m.cols = n;
  for (int j = 0; j < n; ++j) m.col.push_back(BitVec(1) << j);
  return m;
}

F2Matrix F2Matrix::zero(int rows, int cols) {
  F2Matrix m;
  m.rows = rows;
  m.cols = cols;
  m.col.assign(cols, 0);
  return m;
}

BitVec F2Matrix::apply(BitVec v) const {
  BitVec out = 0;
  for (int j = 0; j < cols; ++j)
    if (v & (BitVec(1) << j)) out ^= col[j];
  return out;
}

F2Matrix compose(const F2Matrix& g, const F2Matrix& f) {
  if (g.cols != f.rows)
    throw DimensionMismatch("compose: inner dimensions differ");
  F2Matrix m;
  m.rows = g.rows;
  m.cols = f.cols;
  for (int j = 0; j < f.cols; ++j) m.col.push_back(g.apply(f.col[j]));
  return m;
}

BitVec F2Algebra::mul_vec(BitVec u, BitVec v) const {
  BitVec out = 0;
  for (int i = 0; i < dim; ++i) {
    if (!(u & (BitVec(1) << i))) continue;
    for (int j = 0; j < dim; ++j)
      if (v & (BitVec(1) << j)) out ^= mul[i][j];
  }
  return out;
}

bool F2Algebra::valid() const {
  if (dim <= 0 || dim > 30) return false;
  if (static_cast<int>(mul.size()) != dim) return false;
  const BitVec full = (dim == 30) ? 0x3fffffffu : ((BitVec(1) << dim) - 1);
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != dim) return false;
    for (BitVec v : row)
      if (v & ~full) return false;
  }
  if (unit & ~full) return false;
  for (int i = 0; i < dim; ++i) {
    const BitVec e = BitVec(1) << i;
    if (mul_vec(unit, e) != e || mul_vec(e, unit) != e) return false;
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (mul_vec(mul[i][j], BitVec(1) << k) !=
            mul_vec(BitVec(1) << i, mul[j][k]))
          return false;
  return true;
}

BitVec F2Bimodule::act_left(BitVec a, BitVec m) const {
  BitVec out = 0;
  for (int i = 0; i < left.dim; ++i) {
    if (!(a & (BitVec(1) << i))) continue;
    for (int k = 0; k < dim; ++k)
      if (m & (BitVec(1) << k)) out ^= lact[i][k];
  }
  return out;
}

BitVec F2Bimodule::act_right(BitVec m, BitVec b) const {
  BitVec out = 0;
  for (int j = 0; j < right.dim; ++j) {
    if (!(b & (BitVec(1) << j))) continue;
    for (int k = 0; k < dim; ++k)
      if (m & (BitVec(1) << k)) out ^= ract[j][k];
  }
  return out;
}

bool F2Bimodule::valid() const {
  if (!left.valid() || !right.valid()) return false;
  // computed quotients may legitimately be zero-dimensional
  if (dim < 0 || dim > 30) return false;
  if (static_cast<int>(lact.size()) != left.dim ||
      static_cast<int>(ract.size()) != right.dim)
    return false;
  for (const auto& row : lact)
    if (static_cast<int>(row.size()) != dim) return false;
  for (const auto& row : ract)
    if (static_cast<int>(row.size()) != dim) return false;

  for (int k = 0; k < dim; ++k) {
    const BitVec m = BitVec(1) << k;
    if (act_left(left.unit, m) != m) return false;
    if (act_right(m, right.unit) != m) return false;
  }
  for (int i = 0; i < left.dim; ++i)
    for (int i2 = 0; i2 < left.dim; ++i2)
      for (int k = 0; k < dim; ++k)
        if (act_left(left.mul[i][i2], BitVec(1) << k) !=
            act_left(BitVec(1) << i, act_left(BitVec(1) << i2, BitVec(1) << k)))
          return false;
  for (int j = 0; j < right.dim; ++j)
    for (int j2 = 0; j2 < right.dim; ++j2)
      for (int k = 0; k < dim; ++k)
        if (act_right(BitVec(1) << k, right.mul[j2][j]) !=
            act_right(act_right(BitVec(1) << k, BitVec(1) << j2), BitVec(1) << j))
          return false;
  for (int i = 0; i < left.dim; ++i)
    for (int j = 0; j < right.dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (act_right(act_left(BitVec(1) << i, BitVec(1) << k), BitVec(1) << j) !=
            act_left(BitVec(1) << i, act_right(BitVec(1) << k, BitVec(1) << j)))
          return false;
  return true;
}

bool is_algebra_morphism(const F2Algebra& a, const F2Algebra& b, const F2Matrix& f) {
  if (f.cols != a.dim || f.rows != b.dim) return false;
  if (f.apply(a.unit) != b.unit) return false;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (f.apply(a.mul[i][j]) !=
          b.mul_vec(f.apply(BitVec(1) << i), f.apply(BitVec(1) << j)))
        return false;
  return true;
}

F2Bimodule algebra_as_bimodule(const F2Algebra& a) {
  F2Bimodule m;
  m.left = a;
  m.right = a;
  m.dim = a.dim;
  m.lact = a.mul;
  m.ract.assign(a.dim, std::vector<BitVec>(a.dim, 0));
  for (int j = 0; j < a.dim; ++j)
    for (int k = 0; k < a.dim; ++k) m.ract[j][k] = a.mul[k][j];
  return m;
}

EquivariantMorphism identity_morphism(const F2Bimodule& m) {
  EquivariantMorphism t;
  t.source = m;
  t.target = m;
  t.f = F2Matrix::identity(m.left.dim);
  t.phi = F2Matrix::identity(m.dim);
  t.g = F2Matrix::identity(m.right.dim);
  return t;
}

EquivariantMorphism hid_morphism(const F2Algebra& a, const F2Algebra& b,
                                 const F2Matrix& f) {
  EquivariantMorphism t;
  t.source = algebra_as_bimodule(a);
  t.target = algebra_as_bimodule(b);
  t.f = f;
  t.phi = f;
  t.g = f;
  return t;
}

EquivariantMorphism compose_morphisms(const EquivariantMorphism& t2,
                                      const EquivariantMorphism& t1) {
  if (!(t1.target == t2.source))
    throw DimensionMismatch("compose_morphisms: middle bimodules differ");
  EquivariantMorphism t;
  t.source = t1.source;
  t.target = t2.target;
  t.f = compose(t2.f, t1.f);
  t.phi = compose(t2.phi, t1.phi);
  t.g = compose(t2.g, t1.g);
  return t;
}

bool is_equivariant(const EquivariantMorphism& t) {
  if (t.f.cols != t.source.left.dim || t.f.rows != t.target.left.dim ||
      t.phi.cols != t.source.dim || t.phi.rows != t.target.dim ||
      t.g.cols != t.source.right.dim || t.g.rows != t.target.right.dim)
    throw DimensionMismatch("is_equivariant: matrix shapes inconsistent");
  for (int i = 0; i < t.source.left.dim; ++i)
    for (int k = 0; k < t.source.dim; ++k)
      for (int j = 0; j < t.source.right.dim; ++j) {
        const BitVec lhs = t.phi.apply(t.source.act_right(
            t.source.act_left(BitVec(1) << i, BitVec(1) << k), BitVec(1) << j));
        const BitVec rhs = t.target.act_right(
            t.target.act_left(t.f.apply(BitVec(1) << i),
                              t.phi.apply(BitVec(1) << k)),
            t.g.apply(BitVec(1) << j));
        if (lhs != rhs) return false;
      }
  return true;
}

namespace {

// A generator is central when it commutes with the (possibly twisted)
// actions: f(a) . n0 = n0 . f(a) for every basis element a. The cyclic
// submodule it generates is then A n0 A = A n0, the image of the bimodule
// map a |-> a . n0 out of the algebra. Cyclic submodules of this form are
// the ones the classification produces; without centrality the tensor of
// two cyclic submodules need not stay cyclic.
bool central(const F2Bimodule& n, const F2Matrix& f, int alg_dim, BitVec n0) {
  for (int u = 0; u < alg_dim; ++u) {
    const BitVec a = f.apply(BitVec(1) << u);
    if (n.act_left(a, n0) != n.act_right(n0, a)) return false;
  }
  return true;
}

std::vector<BitVec> cyclic_span(const F2Bimodule& n, const F2Matrix& f,
                                int alg_dim, BitVec n0) {
  std::vector<BitVec> vs;
  for (int u = 0; u < alg_dim; ++u)
    vs.push_back(n.act_left(f.apply(BitVec(1) << u), n0));
  return vs;
}

}  // namespace

bool is_2_subcyclic(const EquivariantMorphism& t) {
  if (!(t.source.left == t.source.right) || !(t.target.left == t.target.right) ||
      !(t.f == t.g))
    throw DimensionMismatch(
        "is_2_subcyclic: requires the horizontal endomorphism shape (single "
        "algebras, f = g)");
  if (!is_equivariant(t))
    throw InvalidInput("is_2_subcyclic: morphism is not equivariant");

  const F2Bimodule& n = t.target;
  std::vector<BitVec> image;
  for (int k = 0; k < t.source.dim; ++k) image.push_back(t.phi.col[k]);

  const F2Matrix native = F2Matrix::identity(n.left.dim);
  const BitVec limit = BitVec(1) << n.dim;
  for (BitVec n0 = 0; n0 < limit; ++n0) {
    if (!central(n, t.f, t.source.left.dim, n0)) continue;
    std::vector<BitVec> l = cyclic_span(n, t.f, t.source.left.dim, n0);
    if (!f2::spans_contain(l, image)) continue;
    for (BitVec m0 = 0; m0 < limit; ++m0) {
      if (!central(n, native, n.left.dim, m0)) continue;
      std::vector<BitVec> k = cyclic_span(n, native, n.left.dim, m0);
      if (f2::spans_contain(k, l)) return true;
    }
  }
  return false;
}

BitVec TensorSpace::embed(BitVec u, BitVec v) const {
  BitVec out = 0;
  for (int i = 0; i < dm; ++i) {
    if (!(u & (BitVec(1) << i))) continue;
    for (int j = 0; j < dm2; ++j)
      if (v & (BitVec(1) << j)) out ^= BitVec(1) << (i * dm2 + j);
  }
  return out;
}

BitVec TensorSpace::reduce(BitVec x) const { return f2::reduce_by(x, rel, pivots); }

BitVec TensorSpace::to_quotient(BitVec x) const {
  const BitVec r = reduce(x);
  BitVec out = 0;
  for (size_t k = 0; k < qbasis.size(); ++k)
    if (r & (BitVec(1) << qbasis[k])) out |= BitVec(1) << k;
  return out;
}

BitVec TensorSpace::lift(BitVec q) const {
  BitVec out = 0;
  for (size_t k = 0; k < qbasis.size(); ++k)
    if (q & (BitVec(1) << k)) out |= BitVec(1) << qbasis[k];
  return out;
}

TensorSpace tensor_space(const F2Bimodule& m, const F2Bimodule& m2) {
  if (!(m.right == m2.left))
    throw DimensionMismatch("tensor: middle algebras differ");
  if (m.dim * m2.dim > 30)
    throw DimensionMismatch("tensor: product dimension exceeds 30");

  TensorSpace ts;
  ts.dm = m.dim;
  ts.dm2 = m2.dim;
  std::vector<BitVec> rels;
  for (int b = 0; b < m.right.dim; ++b)
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m2.dim; ++j) {
        const BitVec lhs =
            ts.embed(m.act_right(BitVec(1) << i, BitVec(1) << b), BitVec(1) << j);
        const BitVec rhs =
            ts.embed(BitVec(1) << i, m2.act_left(BitVec(1) << b, BitVec(1) << j));
        if (lhs != rhs) rels.push_back(lhs ^ rhs);
      }
  ts.rel = f2::rref(rels, &ts.pivots);
  const int total = ts.dm * ts.dm2;
  for (int c = 0; c < total; ++c)
    if (std::find(ts.pivots.begin(), ts.pivots.end(), c) == ts.pivots.end())
      ts.qbasis.push_back(c);
  ts.qdim = static_cast<int>(ts.qbasis.size());
  return ts;
}

F2Bimodule tensor_bimodules(const F2Bimodule& m, const F2Bimodule& m2) {
  TensorSpace ts = tensor_space(m, m2);
  F2Bimodule q;
  q.left = m.left;
  q.right = m2.right;
  q.dim = ts.qdim;

  q.lact.assign(m.left.dim, std::vector<BitVec>(ts.qdim, 0));
  q.ract.assign(m2.right.dim, std::vector<BitVec>(ts.qdim, 0));
  for (int k = 0; k < ts.qdim; ++k) {
    const int coord = ts.qbasis[k];
    const int i = coord / ts.dm2;
    const int j = coord % ts.dm2;
    for (int a = 0; a < m.left.dim; ++a)
      q.lact[a][k] = ts.to_quotient(
          ts.embed(m.act_left(BitVec(1) << a, BitVec(1) << i), BitVec(1) << j));
    for (int c = 0; c < m2.right.dim; ++c)
      q.ract[c][k] = ts.to_quotient(
          ts.embed(BitVec(1) << i, m2.act_right(BitVec(1) << j, BitVec(1) << c)));
  }
  return q;
}

EquivariantMorphism tensor_morphisms(const EquivariantMorphism& t,
                                     const EquivariantMorphism& t2) {
  if (!(t.source.right == t2.source.left) || !(t.target.right == t2.target.left))
    throw MiddleMismatch("tensor_morphisms: middle algebras differ");
  if (!(t.g == t2.f))
    throw MiddleMismatch("tensor_morphisms: middle components differ");
  if (!is_equivariant(t) || !is_equivariant(t2))
    throw InvalidInput("tensor_morphisms: factors must be equivariant");

  TensorSpace src = tensor_space(t.source, t2.source);
  TensorSpace dst = tensor_space(t.target, t2.target);

  EquivariantMorphism out;
  out.source = tensor_bimodules(t.source, t2.source);
  out.target = tensor_bimodules(t.target, t2.target);
  out.f = t.f;
  out.g = t2.g;
  out.phi = F2Matrix::zero(dst.qdim, src.qdim);
  for (int k = 0; k < src.qdim; ++k) {
    const int coord = src.qbasis[k];
    const int i = coord / src.dm2;
    const int j = coord % src.dm2;
    out.phi.col[k] = dst.to_quotient(
        dst.embed(t.phi.apply(BitVec(1) << i), t2.phi.apply(BitVec(1) << j)));
  }
  return out;
}

ValidationReport check_prop_6_4_forward(
    const FinDoubleCategory& fragment,
    const std::map<Token, EquivariantMorphism>& tag) {
  require_valid(fragment, "check_prop_6_4_forward");

  auto tag_of = [&](const Token& q) -> const EquivariantMorphism& {
    auto it = tag.find(q);
    if (it == tag.end())
      throw InconsistentTagging("square " + q + " carries no tag");
    return it->second;
  };

  // Tags must model the fragment's tables.
  for (const Token& q : fragment.squares) {
    if (!is_equivariant(tag_of(q)))
      throw InconsistentTagging("tag of " + q + " is not equivariant");
  }
  for (const auto& [a, q] : fragment.vid) {
    const EquivariantMorphism& t = tag_of(q);
    if (!(t.source == t.target) ||
        !(t.phi == F2Matrix::identity(t.source.dim)) ||
        !(t.f == F2Matrix::identity(t.source.left.dim)) ||
        !(t.g == F2Matrix::identity(t.source.right.dim)))
      throw InconsistentTagging("tag of vid(" + a + ") is not an identity triple");
  }
  for (const auto& [v, q] : fragment.hid_vmor) {
    const EquivariantMorphism& t = tag_of(q);
    if (!(t.f == t.phi) || !(t.f == t.g) ||
        !(t.source == algebra_as_bimodule(t.source.left)) ||
        !(t.target == algebra_as_bimodule(t.target.left)))
      throw InconsistentTagging("tag of hid_vmor(" + v +
                                ") is not a horizontal identity triple");
  }
  for (const auto& [key, r] : fragment.vcomp) {
    EquivariantMorphism expect;
    try {
      expect = compose_morphisms(tag_of(key.first), tag_of(key.second));
    } catch (const DimensionMismatch& e) {
      throw InconsistentTagging(std::string("vcomp tag shapes: ") + e.what());
    }
    if (!(expect == tag_of(r)))
      throw InconsistentTagging("tag of vcomp(" + key.first + "," + key.second +
                                ") differs from the composed tags");
  }
  for (const auto& [key, r] : fragment.hcomp_sq) {
    EquivariantMorphism expect;
    try {
      expect = tensor_morphisms(tag_of(key.second), tag_of(key.first));
    } catch (const DblcatError& e) {
      throw InconsistentTagging(std::string("hcomp tag shapes: ") + e.what());
    }
    if (!(expect == tag_of(r)))
      throw InconsistentTagging("tag of hcomp_sq(" + key.first + "," + key.second +
                                ") differs from the tensored tags");
  }

  GammaAnalysis a = vertical_filtration(fragment);
  ValidationReport report;
  for (const Token& q : fragment.squares) {
    if (is_globular(fragment, q)) continue;
    const EquivariantMorphism& t = tag_of(q);
    const bool endo_shape = t.source.left == t.source.right &&
                            t.target.left == t.target.right && t.f == t.g;
    if (!endo_shape || !is_2_subcyclic(t)) continue;
    auto len = vertical_length(a, q);
    if (!len)
      report.add("prop64-forward", {q}, "member of gamma with length 1",
                 "outside gamma");
    else if (*len != 1)
      report.add("prop64-forward", {q}, "vertical length 1",
                 "length " + std::to_string(*len));
  }
  report.sort_violations();
  return report;
}

}  // namespace dblcat
