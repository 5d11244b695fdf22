#include "dblcat/two_category.hpp"

namespace dblcat {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw MalformedPresentation(what);
}

void check_map(const std::map<Token, Token>& m, const std::set<Token>& keys,
               const std::set<Token>& values, const std::string& name) {
  for (const Token& k : keys) {
    auto it = m.find(k);
    if (it == m.end()) malformed(name + " missing entry for " + k);
    if (!values.count(it->second))
      malformed(name + "(" + k + ") = " + it->second + " undeclared");
  }
  for (const auto& [k, v] : m)
    if (!keys.count(k)) malformed(name + " keyed on undeclared " + k);
}

}  // namespace

void require_well_formed(const Fin2Category& b) {
  for (const Token& t : b.cells0)
    if (!valid_token(t)) malformed("0-cell token invalid: '" + t + "'");
  for (const Token& t : b.cells1)
    if (!valid_token(t)) malformed("1-cell token invalid: '" + t + "'");
  for (const Token& t : b.cells2)
    if (!valid_token(t)) malformed("2-cell token invalid: '" + t + "'");
  check_map(b.src0, b.cells1, b.cells0, "src0");
  check_map(b.tgt0, b.cells1, b.cells0, "tgt0");
  check_map(b.src1, b.cells2, b.cells1, "src1");
  check_map(b.tgt1, b.cells2, b.cells1, "tgt1");
  check_map(b.id1, b.cells0, b.cells1, "id1");
  check_map(b.id2, b.cells1, b.cells2, "id2");

  for (const auto& [pq, r] : b.vcomp2) {
    const auto& [beta, alpha] = pq;
    if (!b.cells2.count(beta) || !b.cells2.count(alpha) || !b.cells2.count(r))
      malformed("vcomp2(" + beta + "," + alpha + ") references undeclared 2-cell");
    if (b.src1.at(beta) != b.tgt1.at(alpha))
      malformed("vcomp2 entry on non-composable pair (" + beta + "," + alpha + ")");
  }
  for (const Token& beta : b.cells2)
    for (const Token& alpha : b.cells2)
      if (b.src1.at(beta) == b.tgt1.at(alpha) && !b.vcomp2.count({beta, alpha}))
        malformed("vcomp2 missing entry for (" + beta + "," + alpha + ")");

  for (const auto& [pq, r] : b.hcomp1) {
    const auto& [g, f] = pq;
    if (!b.cells1.count(g) || !b.cells1.count(f) || !b.cells1.count(r))
      malformed("hcomp1(" + g + "," + f + ") references undeclared 1-cell");
    if (b.src0.at(g) != b.tgt0.at(f))
      malformed("hcomp1 entry on non-composable pair (" + g + "," + f + ")");
  }
  for (const Token& g : b.cells1)
    for (const Token& f : b.cells1)
      if (b.src0.at(g) == b.tgt0.at(f) && !b.hcomp1.count({g, f}))
        malformed("hcomp1 missing entry for (" + g + "," + f + ")");

  for (const auto& [pq, r] : b.hcomp2) {
    const auto& [beta, alpha] = pq;
    if (!b.cells2.count(beta) || !b.cells2.count(alpha) || !b.cells2.count(r))
      malformed("hcomp2(" + beta + "," + alpha + ") references undeclared 2-cell");
    if (b.src0.at(b.src1.at(beta)) != b.tgt0.at(b.src1.at(alpha)))
      malformed("hcomp2 entry on non-composable pair (" + beta + "," + alpha + ")");
  }
  for (const Token& beta : b.cells2)
    for (const Token& alpha : b.cells2)
      if (b.src0.at(b.src1.at(beta)) == b.tgt0.at(b.src1.at(alpha)) &&
          !b.hcomp2.count({beta, alpha}))
        malformed("hcomp2 missing entry for (" + beta + "," + alpha + ")");
}

ValidationReport validate_two_category(const Fin2Category& b) {
  require_well_formed(b);
  ValidationReport report;

  // 2-cells are parallel: both 1-cell boundaries share 0-cell endpoints.
  for (const Token& alpha : b.cells2) {
    const Token& s = b.src1.at(alpha);
    const Token& t = b.tgt1.at(alpha);
    if (b.src0.at(s) != b.src0.at(t) || b.tgt0.at(s) != b.tgt0.at(t))
      report.add("parallel-2cells", {alpha},
                 b.src0.at(s) + "->" + b.tgt0.at(s),
                 b.src0.at(t) + "->" + b.tgt0.at(t));
  }

  // (cells1, cells2, id2, vcomp2) is a category.
  {
    FinCategory vert;
    vert.objects = b.cells1;
    vert.morphisms = b.cells2;
    vert.src = b.src1;
    vert.tgt = b.tgt1;
    vert.id = b.id2;
    vert.comp = b.vcomp2;
    report.absorb(validate_category(vert), "vcat-");
  }

  for (const Token& x : b.cells0) {
    const Token& u = b.id1.at(x);
    if (b.src0.at(u) != x || b.tgt0.at(u) != x)
      report.add("id1-boundary", {x, u}, x + "->" + x,
                 b.src0.at(u) + "->" + b.tgt0.at(u));
  }

  for (const auto& [pq, r] : b.hcomp1) {
    const auto& [g, f] = pq;
    if (b.src0.at(r) != b.src0.at(f) || b.tgt0.at(r) != b.tgt0.at(g))
      report.add("h1-boundary", {g, f, r}, b.src0.at(f) + "->" + b.tgt0.at(g),
                 b.src0.at(r) + "->" + b.tgt0.at(r));
  }
  for (const Token& f : b.cells1) {
    auto right = b.hcomp1.find({f, b.id1.at(b.src0.at(f))});
    if (right == b.hcomp1.end() || right->second != f)
      report.add("h1-unit", {f, b.id1.at(b.src0.at(f))}, f,
                 right == b.hcomp1.end() ? "<not-composable>" : right->second);
    auto left = b.hcomp1.find({b.id1.at(b.tgt0.at(f)), f});
    if (left == b.hcomp1.end() || left->second != f)
      report.add("h1-unit", {b.id1.at(b.tgt0.at(f)), f}, f,
                 left == b.hcomp1.end() ? "<not-composable>" : left->second);
  }
  for (const Token& h : b.cells1)
    for (const Token& g : b.cells1) {
      if (b.src0.at(h) != b.tgt0.at(g)) continue;
      for (const Token& f : b.cells1) {
        if (b.src0.at(g) != b.tgt0.at(f)) continue;
        auto gf = b.hcomp1.find({g, f});
        auto hg = b.hcomp1.find({h, g});
        if (gf == b.hcomp1.end() || hg == b.hcomp1.end()) continue;
        auto lhs = b.hcomp1.find({h, gf->second});
        auto rhs = b.hcomp1.find({hg->second, f});
        if (lhs == b.hcomp1.end() || rhs == b.hcomp1.end()) continue;
        if (lhs->second != rhs->second)
          report.add("h1-associativity", {h, g, f}, rhs->second, lhs->second);
      }
    }

  for (const auto& [pq, r] : b.hcomp2) {
    const auto& [beta, alpha] = pq;
    auto s = b.hcomp1.find({b.src1.at(beta), b.src1.at(alpha)});
    auto t = b.hcomp1.find({b.tgt1.at(beta), b.tgt1.at(alpha)});
    const Token want_s = s == b.hcomp1.end() ? Token("<undefined>") : s->second;
    const Token want_t = t == b.hcomp1.end() ? Token("<undefined>") : t->second;
    if (b.src1.at(r) != want_s || b.tgt1.at(r) != want_t)
      report.add("h2-boundary", {beta, alpha, r}, want_s + "=>" + want_t,
                 b.src1.at(r) + "=>" + b.tgt1.at(r));
  }
  for (const auto& [pq, r] : b.hcomp1) {
    const auto& [g, f] = pq;
    auto it = b.hcomp2.find({b.id2.at(g), b.id2.at(f)});
    if (it == b.hcomp2.end() || it->second != b.id2.at(r))
      report.add("h2-identity", {g, f}, b.id2.at(r),
                 it == b.hcomp2.end() ? "<undefined>" : it->second);
  }
  for (const Token& alpha : b.cells2) {
    const Token& sx = b.id2.at(b.id1.at(b.src0.at(b.src1.at(alpha))));
    auto right = b.hcomp2.find({alpha, sx});
    if (right == b.hcomp2.end() || right->second != alpha)
      report.add("h2-unit", {alpha, sx}, alpha,
                 right == b.hcomp2.end() ? "<not-composable>" : right->second);
    const Token& tx = b.id2.at(b.id1.at(b.tgt0.at(b.src1.at(alpha))));
    auto left = b.hcomp2.find({tx, alpha});
    if (left == b.hcomp2.end() || left->second != alpha)
      report.add("h2-unit", {tx, alpha}, alpha,
                 left == b.hcomp2.end() ? "<not-composable>" : left->second);
  }

  std::map<Token, std::vector<Token>> by_t0;
  for (const Token& alpha : b.cells2)
    by_t0[b.tgt0.at(b.src1.at(alpha))].push_back(alpha);
  auto at0 = [&](const Token& x) -> const std::vector<Token>& {
    static const std::vector<Token> none;
    auto it = by_t0.find(x);
    return it == by_t0.end() ? none : it->second;
  };

  for (const Token& z : b.cells2) {
    const Token& zsrc0 = b.src0.at(b.src1.at(z));
    for (const Token& beta : at0(zsrc0)) {
      for (const Token& alpha : at0(b.src0.at(b.src1.at(beta)))) {
        auto ba = b.hcomp2.find({beta, alpha});
        auto zb = b.hcomp2.find({z, beta});
        if (ba == b.hcomp2.end() || zb == b.hcomp2.end()) continue;
        auto lhs = b.hcomp2.find({z, ba->second});
        auto rhs = b.hcomp2.find({zb->second, alpha});
        if (lhs == b.hcomp2.end() || rhs == b.hcomp2.end()) continue;
        if (lhs->second != rhs->second)
          report.add("h2-associativity", {z, beta, alpha}, rhs->second,
                     lhs->second);
      }
    }
  }

  // Interchange between vcomp2 and hcomp2.
  for (const auto& [pq, bottom] : b.hcomp2) {
    const auto& [beta, alpha] = pq;
    (void)bottom;
    for (const Token& alpha2 : b.cells2) {
      if (b.src1.at(alpha2) != b.tgt1.at(alpha)) continue;
      for (const Token& beta2 : b.cells2) {
        if (b.src1.at(beta2) != b.tgt1.at(beta)) continue;
        auto upper2 = b.hcomp2.find({beta2, alpha2});
        auto vb = b.vcomp2.find({beta2, beta});
        auto va = b.vcomp2.find({alpha2, alpha});
        if (upper2 == b.hcomp2.end() || vb == b.vcomp2.end() ||
            va == b.vcomp2.end())
          continue;
        auto lhs = b.vcomp2.find({upper2->second, b.hcomp2.at({beta, alpha})});
        auto rhs = b.hcomp2.find({vb->second, va->second});
        if (lhs == b.vcomp2.end() || rhs == b.hcomp2.end()) continue;
        if (lhs->second != rhs->second)
          report.add("interchange", {beta2, alpha2, beta, alpha}, rhs->second,
                     lhs->second);
      }
    }
  }

  report.sort_violations();
  return report;
}

ValidationReport validate_decorated(const DecoratedBicategory& b) {
  ValidationReport report;
  report.absorb(validate_category(b.decoration), "decoration-");
  report.absorb(validate_two_category(b.underlying), "underlying-");
  if (b.decoration.objects != b.underlying.cells0)
    report.add("decoration-objects", {}, "objects(decoration) = cells0",
               "mismatch");
  report.sort_violations();
  return report;
}

void require_valid(const Fin2Category& b, const char* op) {
  if (!validate_two_category(b).ok)
    throw InvalidInput(std::string(op) + ": input 2-category fails validation");
}

Fin2Category horizontalization(const FinDoubleCategory& c) {
  require_valid(c, "horizontalization");

  Fin2Category h;
  h.cells0 = c.c0.objects;
  h.cells1 = c.hmors;
  h.src0 = c.hsrc;
  h.tgt0 = c.htgt;
  h.id1 = c.hid_obj;
  for (const Token& q : c.squares)
    if (is_globular(c, q)) h.cells2.insert(q);
  for (const Token& q : h.cells2) {
    h.src1[q] = c.dom.at(q);
    h.tgt1[q] = c.cod.at(q);
  }
  h.id2 = c.vid;  // vertical identities are globular
  h.hcomp1 = c.hcomp_h;
  for (const auto& [pq, r] : c.vcomp) {
    if (h.cells2.count(pq.first) && h.cells2.count(pq.second))
      h.vcomp2[pq] = r;  // globular squares are closed under vcomp
  }
  for (const auto& [pq, r] : c.hcomp_sq) {
    if (h.cells2.count(pq.first) && h.cells2.count(pq.second))
      h.hcomp2[pq] = r;
  }
  return h;
}

DecoratedBicategory decorated_horizontalization(const FinDoubleCategory& c) {
  require_valid(c, "decorated_horizontalization");
  return {c.c0, horizontalization(c)};
}

FinDoubleCategory trivial_double(const Fin2Category& b) {
  require_valid(b, "trivial_double");

  FinDoubleCategory c;
  c.c0.objects = b.cells0;
  std::map<Token, Token> idtok;
  for (const Token& x : b.cells0) {
    Token f = "id|" + x;
    idtok[x] = f;
    c.c0.morphisms.insert(f);
    c.c0.src[f] = x;
    c.c0.tgt[f] = x;
    c.c0.id[x] = f;
    c.c0.comp[{f, f}] = f;
  }

  c.hmors = b.cells1;
  c.hsrc = b.src0;
  c.htgt = b.tgt0;
  c.hid_obj = b.id1;

  c.squares = b.cells2;
  c.dom = b.src1;
  c.cod = b.tgt1;
  for (const Token& alpha : b.cells2) {
    c.vsrc[alpha] = idtok.at(b.src0.at(b.src1.at(alpha)));
    c.vtgt[alpha] = idtok.at(b.tgt0.at(b.src1.at(alpha)));
  }
  c.vid = b.id2;
  c.vcomp = b.vcomp2;
  for (const Token& x : b.cells0) c.hid_vmor[idtok.at(x)] = b.id2.at(b.id1.at(x));
  c.hcomp_h = b.hcomp1;
  c.hcomp_sq = b.hcomp2;
  return c;
}

bool equal_decorated(const DecoratedBicategory& b1, const DecoratedBicategory& b2) {
  return b1 == b2;
}

bool is_internalization(const FinDoubleCategory& c, const DecoratedBicategory& b) {
  if (!validate_decorated(b).ok)
    throw InvalidInput("is_internalization: decorated bicategory fails validation");
  return equal_decorated(decorated_horizontalization(c), b);
}

}  // namespace dblcat
