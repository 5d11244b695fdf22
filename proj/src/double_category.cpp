#include "dblcat/double_category.hpp"

namespace dblcat {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw MalformedPresentation(what);
}

void check_square_table(const FinDoubleCategory& c,
                        const std::map<Token, Token>& m,
                        const std::set<Token>& values,
                        const std::string& name) {
  for (const Token& q : c.squares) {
    auto it = m.find(q);
    if (it == m.end()) malformed(name + " missing entry for " + q);
    if (!values.count(it->second))
      malformed(name + "(" + q + ") = " + it->second + " undeclared");
  }
  for (const auto& [k, v] : m) {
    if (!c.squares.count(k)) malformed(name + " keyed on undeclared " + k);
  }
}

}  // namespace

FinCategory FinDoubleCategory::c1() const {
  FinCategory k;
  k.objects = hmors;
  k.morphisms = squares;
  k.src = dom;
  k.tgt = cod;
  k.id = vid;
  k.comp = vcomp;
  return k;
}

void require_well_formed(const FinDoubleCategory& c) {
  require_well_formed(c.c0);
  for (const Token& a : c.hmors)
    if (!valid_token(a)) malformed("hmor token invalid: '" + a + "'");
  for (const Token& q : c.squares)
    if (!valid_token(q)) malformed("square token invalid: '" + q + "'");

  for (const Token& a : c.hmors) {
    if (!c.hsrc.count(a) || !c.htgt.count(a))
      malformed("hsrc/htgt missing entry for " + a);
    if (!c.c0.objects.count(c.hsrc.at(a)) || !c.c0.objects.count(c.htgt.at(a)))
      malformed("hsrc/htgt of " + a + " undeclared");
  }
  check_square_table(c, c.dom, c.hmors, "dom");
  check_square_table(c, c.cod, c.hmors, "cod");
  check_square_table(c, c.vsrc, c.c0.morphisms, "vsrc");
  check_square_table(c, c.vtgt, c.c0.morphisms, "vtgt");

  // C1 structural checks (vid totality, vcomp keyed exactly on
  // dom(psi) = cod(phi)) ride on the FinCategory well-formedness check.
  require_well_formed(c.c1());

  for (const Token& x : c.c0.objects) {
    auto it = c.hid_obj.find(x);
    if (it == c.hid_obj.end()) malformed("hid_obj missing entry for " + x);
    if (!c.hmors.count(it->second))
      malformed("hid_obj(" + x + ") undeclared");
  }
  for (const Token& f : c.c0.morphisms) {
    auto it = c.hid_vmor.find(f);
    if (it == c.hid_vmor.end()) malformed("hid_vmor missing entry for " + f);
    if (!c.squares.count(it->second))
      malformed("hid_vmor(" + f + ") undeclared");
  }

  for (const auto& [ba, r] : c.hcomp_h) {
    const auto& [b, a] = ba;
    if (!c.hmors.count(b) || !c.hmors.count(a) || !c.hmors.count(r))
      malformed("hcomp_h(" + b + "," + a + ") references undeclared hmor");
    if (c.hsrc.at(b) != c.htgt.at(a))
      malformed("hcomp_h entry on non-composable pair (" + b + "," + a + ")");
  }
  for (const Token& b : c.hmors)
    for (const Token& a : c.hmors)
      if (c.hsrc.at(b) == c.htgt.at(a) && !c.hcomp_h.count({b, a}))
        malformed("hcomp_h missing entry for (" + b + "," + a + ")");

  for (const auto& [pq, r] : c.hcomp_sq) {
    const auto& [psi, phi] = pq;
    if (!c.squares.count(psi) || !c.squares.count(phi) || !c.squares.count(r))
      malformed("hcomp_sq(" + psi + "," + phi + ") references undeclared square");
    if (c.vsrc.at(psi) != c.vtgt.at(phi))
      malformed("hcomp_sq entry on non-composable pair (" + psi + "," + phi + ")");
  }
  for (const Token& psi : c.squares)
    for (const Token& phi : c.squares)
      if (c.vsrc.at(psi) == c.vtgt.at(phi) && !c.hcomp_sq.count({psi, phi}))
        malformed("hcomp_sq missing entry for (" + psi + "," + phi + ")");
}

ValidationReport validate_double_category(const FinDoubleCategory& c) {
  require_well_formed(c);
  ValidationReport report;

  report.absorb(validate_category(c.c0), "C0-");
  report.absorb(validate_category(c.c1()), "C1-");

  // s and t must type squares: a square q : dom q => cod q has vertical
  // boundaries running hsrc(dom q) -> hsrc(cod q) and htgt(dom q) ->
  // htgt(cod q).
  for (const Token& q : c.squares) {
    const Token& f = c.vsrc.at(q);
    if (c.c0.src.at(f) != c.hsrc.at(c.dom.at(q)) ||
        c.c0.tgt.at(f) != c.hsrc.at(c.cod.at(q)))
      report.add("s-boundary", {q, f},
                 c.hsrc.at(c.dom.at(q)) + "->" + c.hsrc.at(c.cod.at(q)),
                 c.c0.src.at(f) + "->" + c.c0.tgt.at(f));
    const Token& g = c.vtgt.at(q);
    if (c.c0.src.at(g) != c.htgt.at(c.dom.at(q)) ||
        c.c0.tgt.at(g) != c.htgt.at(c.cod.at(q)))
      report.add("t-boundary", {q, g},
                 c.htgt.at(c.dom.at(q)) + "->" + c.htgt.at(c.cod.at(q)),
                 c.c0.src.at(g) + "->" + c.c0.tgt.at(g));
  }

  // Functoriality of s and t on identities and composites.
  for (const Token& a : c.hmors) {
    const Token& va = c.vid.at(a);
    if (c.vsrc.at(va) != c.c0.id.at(c.hsrc.at(a)))
      report.add("s-functoriality", {va, a}, c.c0.id.at(c.hsrc.at(a)),
                 c.vsrc.at(va));
    if (c.vtgt.at(va) != c.c0.id.at(c.htgt.at(a)))
      report.add("t-functoriality", {va, a}, c.c0.id.at(c.htgt.at(a)),
                 c.vtgt.at(va));
  }
  for (const auto& [pq, r] : c.vcomp) {
    const auto& [psi, phi] = pq;
    auto s_it = c.c0.comp.find({c.vsrc.at(psi), c.vsrc.at(phi)});
    if (s_it == c.c0.comp.end() || c.vsrc.at(r) != s_it->second)
      report.add("s-functoriality", {psi, phi, r},
                 s_it == c.c0.comp.end() ? "<composable pair>" : s_it->second,
                 c.vsrc.at(r));
    auto t_it = c.c0.comp.find({c.vtgt.at(psi), c.vtgt.at(phi)});
    if (t_it == c.c0.comp.end() || c.vtgt.at(r) != t_it->second)
      report.add("t-functoriality", {psi, phi, r},
                 t_it == c.c0.comp.end() ? "<composable pair>" : t_it->second,
                 c.vtgt.at(r));
  }

  // i : C0 -> C1 is a functor with prescribed boundaries.
  for (const Token& x : c.c0.objects) {
    const Token& u = c.hid_obj.at(x);
    if (c.hsrc.at(u) != x || c.htgt.at(u) != x)
      report.add("i-boundary", {x, u}, x + "->" + x,
                 c.hsrc.at(u) + "->" + c.htgt.at(u));
    const Token& want = c.vid.at(u);
    const Token& got = c.hid_vmor.at(c.c0.id.at(x));
    if (got != want) report.add("i-functoriality", {x}, want, got);
  }
  for (const Token& f : c.c0.morphisms) {
    const Token& q = c.hid_vmor.at(f);
    SquareBoundary want{c.hid_obj.at(c.c0.src.at(f)),
                        c.hid_obj.at(c.c0.tgt.at(f)), f, f};
    SquareBoundary got{c.dom.at(q), c.cod.at(q), c.vsrc.at(q), c.vtgt.at(q)};
    if (!(want == got))
      report.add("i-boundary", {f, q},
                 want.dom + ";" + want.cod + ";" + want.vsrc + ";" + want.vtgt,
                 got.dom + ";" + got.cod + ";" + got.vsrc + ";" + got.vtgt);
  }
  for (const auto& [gf, h] : c.c0.comp) {
    const auto& [g, f] = gf;
    auto it = c.vcomp.find({c.hid_vmor.at(g), c.hid_vmor.at(f)});
    if (it == c.vcomp.end() || it->second != c.hid_vmor.at(h))
      report.add("i-functoriality", {g, f}, c.hid_vmor.at(h),
                 it == c.vcomp.end() ? "<undefined>" : it->second);
  }

  // Horizontal composition of hmors: boundaries, strict units, strict
  // associativity.
  for (const auto& [ba, r] : c.hcomp_h) {
    const auto& [b, a] = ba;
    if (c.hsrc.at(r) != c.hsrc.at(a) || c.htgt.at(r) != c.htgt.at(b))
      report.add("hcomp-h-boundary", {b, a, r},
                 c.hsrc.at(a) + "->" + c.htgt.at(b),
                 c.hsrc.at(r) + "->" + c.htgt.at(r));
  }
  for (const Token& a : c.hmors) {
    auto right = c.hcomp_h.find({a, c.hid_obj.at(c.hsrc.at(a))});
    if (right == c.hcomp_h.end() || right->second != a)
      report.add("h-unit", {a, c.hid_obj.at(c.hsrc.at(a))}, a,
                 right == c.hcomp_h.end() ? "<not-composable>" : right->second);
    auto left = c.hcomp_h.find({c.hid_obj.at(c.htgt.at(a)), a});
    if (left == c.hcomp_h.end() || left->second != a)
      report.add("h-unit", {c.hid_obj.at(c.htgt.at(a)), a}, a,
                 left == c.hcomp_h.end() ? "<not-composable>" : left->second);
  }
  for (const Token& z : c.hmors)
    for (const Token& b : c.hmors) {
      if (c.hsrc.at(z) != c.htgt.at(b)) continue;
      for (const Token& a : c.hmors) {
        if (c.hsrc.at(b) != c.htgt.at(a)) continue;
        // Non-composable outer pairs only arise under a boundary
        // violation reported elsewhere.
        auto ba = c.hcomp_h.find({b, a});
        auto zb = c.hcomp_h.find({z, b});
        if (ba == c.hcomp_h.end() || zb == c.hcomp_h.end()) continue;
        auto lhs = c.hcomp_h.find({z, ba->second});
        auto rhs = c.hcomp_h.find({zb->second, a});
        if (lhs == c.hcomp_h.end() || rhs == c.hcomp_h.end()) continue;
        if (lhs->second != rhs->second)
          report.add("h-associativity", {z, b, a}, rhs->second, lhs->second);
      }
    }

  // Horizontal composition of squares: boundaries, units, associativity,
  // identity exchange and interchange.
  for (const auto& [pq, r] : c.hcomp_sq) {
    const auto& [psi, phi] = pq;
    auto top = c.hcomp_h.find({c.dom.at(psi), c.dom.at(phi)});
    auto bot = c.hcomp_h.find({c.cod.at(psi), c.cod.at(phi)});
    SquareBoundary want{top == c.hcomp_h.end() ? Token("<undefined>") : top->second,
                        bot == c.hcomp_h.end() ? Token("<undefined>") : bot->second,
                        c.vsrc.at(phi), c.vtgt.at(psi)};
    SquareBoundary got{c.dom.at(r), c.cod.at(r), c.vsrc.at(r), c.vtgt.at(r)};
    if (!(want == got))
      report.add("hcomp-sq-boundary", {psi, phi, r},
                 want.dom + ";" + want.cod + ";" + want.vsrc + ";" + want.vtgt,
                 got.dom + ";" + got.cod + ";" + got.vsrc + ";" + got.vtgt);
  }
  for (const auto& [ba, r] : c.hcomp_h) {
    const auto& [b, a] = ba;
    auto it = c.hcomp_sq.find({c.vid.at(b), c.vid.at(a)});
    if (it == c.hcomp_sq.end() || it->second != c.vid.at(r))
      report.add("hcomp-identity", {b, a}, c.vid.at(r),
                 it == c.hcomp_sq.end() ? "<undefined>" : it->second);
  }
  for (const Token& q : c.squares) {
    auto right = c.hcomp_sq.find({q, c.hid_vmor.at(c.vsrc.at(q))});
    if (right == c.hcomp_sq.end() || right->second != q)
      report.add("h-unit-sq", {q, c.hid_vmor.at(c.vsrc.at(q))}, q,
                 right == c.hcomp_sq.end() ? "<not-composable>" : right->second);
    auto left = c.hcomp_sq.find({c.hid_vmor.at(c.vtgt.at(q)), q});
    if (left == c.hcomp_sq.end() || left->second != q)
      report.add("h-unit-sq", {c.hid_vmor.at(c.vtgt.at(q)), q}, q,
                 left == c.hcomp_sq.end() ? "<not-composable>" : left->second);
  }

  // Index squares by vtgt to keep the scans near-linear in table size.
  std::map<Token, std::vector<Token>> by_vtgt;
  for (const Token& q : c.squares) by_vtgt[c.vtgt.at(q)].push_back(q);

  static const std::vector<Token> kNone;
  auto bucket = [&](const std::map<Token, std::vector<Token>>& index,
                    const Token& key) -> const std::vector<Token>& {
    auto it = index.find(key);
    return it == index.end() ? kNone : it->second;
  };

  for (const Token& z : c.squares) {
    for (const Token& b : bucket(by_vtgt, c.vsrc.at(z))) {
      for (const Token& a : bucket(by_vtgt, c.vsrc.at(b))) {
        auto ba = c.hcomp_sq.find({b, a});
        auto zb = c.hcomp_sq.find({z, b});
        if (ba == c.hcomp_sq.end() || zb == c.hcomp_sq.end()) continue;
        auto lhs = c.hcomp_sq.find({z, ba->second});
        auto rhs = c.hcomp_sq.find({zb->second, a});
        if (lhs == c.hcomp_sq.end() || rhs == c.hcomp_sq.end()) continue;
        if (lhs->second != rhs->second)
          report.add("h-associativity-sq", {z, b, a}, rhs->second, lhs->second);
      }
    }
  }

  // Interchange on every 2x2 arrangement: (psi' * phi') . (psi * phi) =
  // (psi' . psi) * (phi' . phi), where . is vertical and * horizontal.
  std::map<Token, std::vector<Token>> by_dom;
  for (const Token& q : c.squares) by_dom[c.dom.at(q)].push_back(q);
  // (psi, phi) is the top row (psi right of phi); phi2/psi2 sit below.
  for (const auto& [pq, top_row] : c.hcomp_sq) {
    const auto& [psi, phi] = pq;
    for (const Token& phi2 : bucket(by_dom, c.cod.at(phi))) {
      for (const Token& psi2 : bucket(by_dom, c.cod.at(psi))) {
        if (c.vsrc.at(psi2) != c.vtgt.at(phi2)) continue;
        auto bottom_row = c.hcomp_sq.find({psi2, phi2});
        auto right_col = c.vcomp.find({psi2, psi});
        auto left_col = c.vcomp.find({phi2, phi});
        if (bottom_row == c.hcomp_sq.end() || right_col == c.vcomp.end() ||
            left_col == c.vcomp.end())
          continue;
        auto lhs = c.vcomp.find({bottom_row->second, top_row});
        auto rhs = c.hcomp_sq.find({right_col->second, left_col->second});
        if (lhs == c.vcomp.end() || rhs == c.hcomp_sq.end()) continue;
        if (lhs->second != rhs->second)
          report.add("interchange", {psi2, phi2, psi, phi}, rhs->second,
                     lhs->second);
      }
    }
  }

  report.sort_violations();
  return report;
}

namespace {
void require_square(const FinDoubleCategory& c, const Token& q) {
  if (!c.squares.count(q))
    throw UnknownIdentifier("unknown square: " + q);
}
}  // namespace

bool is_globular(const FinDoubleCategory& c, const Token& q) {
  require_square(c, q);
  return c.vsrc.at(q) == c.c0.id.at(c.hsrc.at(c.dom.at(q))) &&
         c.vtgt.at(q) == c.c0.id.at(c.htgt.at(c.dom.at(q)));
}

bool is_horizontal_endomorphism(const FinDoubleCategory& c, const Token& q) {
  require_square(c, q);
  return c.vsrc.at(q) == c.vtgt.at(q);
}

SquareBoundary boundary(const FinDoubleCategory& c, const Token& q) {
  require_square(c, q);
  return {c.dom.at(q), c.cod.at(q), c.vsrc.at(q), c.vtgt.at(q)};
}

void require_valid(const FinDoubleCategory& c, const char* op) {
  if (!validate_double_category(c).ok)
    throw InvalidInput(std::string(op) + ": input double category fails validation");
}

}  // namespace dblcat
