#include "dblcat/generators.hpp"

#include <functional>

namespace dblcat {

namespace {

Token pair_token(const Token& a, const Token& b) { return a + "&" + b; }

// Square token of Sq(K): boundary quadruple joined by '|', read
// (top, left, right, bottom).
Token sq_token(const Token& a, const Token& f, const Token& g, const Token& b) {
  return "sq|" + a + "|" + f + "|" + g + "|" + b;
}

Token quintet_token(const Token& a, const Token& f, const Token& g,
                    const Token& b, const Token& alpha) {
  return "q|" + a + "|" + f + "|" + g + "|" + b + "|" + alpha;
}

void require_generated_valid(const FinDoubleCategory& c, const char* op) {
  if (!validate_double_category(c).ok)
    throw InvalidInput(std::string(op) + ": generated instance fails validation");
}

}  // namespace

bool is_partial_order(const PosetSpec& p) {
  if (p.size < 0) return false;
  auto in_range = [&](int i) { return 0 <= i && i < p.size; };
  for (auto [i, j] : p.relation)
    if (!in_range(i) || !in_range(j)) return false;
  for (int i = 0; i < p.size; ++i)
    if (!p.relation.count({i, i})) return false;
  for (auto [i, j] : p.relation) {
    if (p.relation.count({j, i}) && i != j) return false;
    for (auto [k, l] : p.relation)
      if (j == k && !p.relation.count({i, l})) return false;
  }
  return true;
}

PosetSpec poset_chain(int n) {
  PosetSpec p;
  p.size = n;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.relation.insert({i, j});
  return p;
}

PosetSpec poset_antichain(int n) {
  PosetSpec p;
  p.size = n;
  for (int i = 0; i < n; ++i) p.relation.insert({i, i});
  return p;
}

PosetSpec poset_diamond() {
  PosetSpec p;
  p.size = 4;
  for (int i = 0; i < 4; ++i) p.relation.insert({i, i});
  p.relation.insert({0, 1});
  p.relation.insert({0, 2});
  p.relation.insert({0, 3});
  p.relation.insert({1, 3});
  p.relation.insert({2, 3});
  return p;
}

PosetSpec parse_poset_spec(const std::string& text) {
  auto starts = [&](const char* prefix) {
    return text.rfind(prefix, 0) == 0;
  };
  try {
    if (text == "diamond") return poset_diamond();
    if (starts("chain")) return poset_chain(std::stoi(text.substr(5)));
    if (starts("antichain")) return poset_antichain(std::stoi(text.substr(9)));
    // Explicit form: "N;i<j;k<l;..."
    auto semi = text.find(';');
    PosetSpec p;
    p.size = std::stoi(text.substr(0, semi));
    for (int i = 0; i < p.size; ++i) p.relation.insert({i, i});
    std::string rest = semi == std::string::npos ? "" : text.substr(semi + 1);
    while (!rest.empty()) {
      auto next = rest.find(';');
      std::string item = rest.substr(0, next);
      rest = next == std::string::npos ? "" : rest.substr(next + 1);
      auto lt = item.find('<');
      if (lt == std::string::npos) throw InvalidInput("poset pair needs '<'");
      p.relation.insert({std::stoi(item.substr(0, lt)), std::stoi(item.substr(lt + 1))});
    }
    // reflexive-transitive closure
    bool grew = true;
    while (grew) {
      grew = false;
      auto rel = p.relation;
      for (auto [i, j] : rel)
        for (auto [k, l] : rel)
          if (j == k && !p.relation.count({i, l})) {
            p.relation.insert({i, l});
            grew = true;
          }
    }
    if (!is_partial_order(p)) throw InvalidInput("relation is not a partial order");
    return p;
  } catch (const DblcatError&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse poset spec: " + text);
  }
}

FinCategory gen_poset_category(const PosetSpec& p) {
  if (!is_partial_order(p))
    throw InvalidInput("gen_poset_category: relation is not a partial order");
  FinCategory k;
  auto obj = [](int i) { return "x" + std::to_string(i); };
  for (int i = 0; i < p.size; ++i) k.objects.insert(obj(i));
  for (auto [i, j] : p.relation) {
    Token m = "le|" + obj(i) + "|" + obj(j);
    k.morphisms.insert(m);
    k.src[m] = obj(i);
    k.tgt[m] = obj(j);
    if (i == j) k.id[obj(i)] = m;
  }
  for (auto [i, j] : p.relation)
    for (auto [a, b] : p.relation) {
      if (j != a) continue;
      k.comp[{"le|" + obj(a) + "|" + obj(b), "le|" + obj(i) + "|" + obj(j)}] =
          "le|" + obj(i) + "|" + obj(b);
    }
  return k;
}

FinDoubleCategory gen_trivial(const Fin2Category& b) {
  FinDoubleCategory c = trivial_double(b);
  require_generated_valid(c, "gen_trivial");
  return c;
}

FinDoubleCategory gen_commuting_squares(const FinCategory& k) {
  if (!validate_category(k).ok)
    throw InvalidInput("gen_commuting_squares: base category fails validation");

  FinDoubleCategory c;
  c.c0 = k;
  c.hmors = k.morphisms;
  c.hsrc = k.src;
  c.htgt = k.tgt;
  for (const Token& x : k.objects) c.hid_obj[x] = k.id.at(x);
  for (const Token& b : k.morphisms)
    for (const Token& a : k.morphisms)
      if (k.src.at(b) == k.tgt.at(a)) c.hcomp_h[{b, a}] = k.comp.at({b, a});

  // Squares: (a: x->y, f: x->z, g: y->w, b: z->w) with g.a = b.f.
  struct Quad { Token a, f, g, b; };
  std::map<Token, Quad> quads;
  for (const Token& a : k.morphisms)
    for (const Token& f : k.morphisms) {
      if (k.src.at(f) != k.src.at(a)) continue;
      for (const Token& g : k.morphisms) {
        if (k.src.at(g) != k.tgt.at(a)) continue;
        for (const Token& b : k.morphisms) {
          if (k.src.at(b) != k.tgt.at(f) || k.tgt.at(b) != k.tgt.at(g)) continue;
          if (k.comp.at({g, a}) != k.comp.at({b, f})) continue;
          Token t = sq_token(a, f, g, b);
          c.squares.insert(t);
          c.dom[t] = a;
          c.cod[t] = b;
          c.vsrc[t] = f;
          c.vtgt[t] = g;
          quads[t] = {a, f, g, b};
        }
      }
    }

  for (const Token& a : k.morphisms)
    c.vid[a] = sq_token(a, k.id.at(k.src.at(a)), k.id.at(k.tgt.at(a)), a);
  for (const Token& f : k.morphisms)
    c.hid_vmor[f] = sq_token(k.id.at(k.src.at(f)), f, f, k.id.at(k.tgt.at(f)));

  for (const auto& [t1, psi] : quads)
    for (const auto& [t2, phi] : quads) {
      if (psi.a == phi.b)  // vertical pasting: phi on top, psi below
        c.vcomp[{t1, t2}] = sq_token(phi.a, k.comp.at({psi.f, phi.f}),
                                     k.comp.at({psi.g, phi.g}), psi.b);
      if (psi.f == phi.g)  // horizontal pasting: phi on the left
        c.hcomp_sq[{t1, t2}] = sq_token(k.comp.at({psi.a, phi.a}), phi.f,
                                        psi.g, k.comp.at({psi.b, phi.b}));
    }

  require_generated_valid(c, "gen_commuting_squares");
  return c;
}

FinDoubleCategory gen_quintet(const Fin2Category& k) {
  require_valid(k, "gen_quintet");

  FinDoubleCategory c;
  c.c0.objects = k.cells0;
  c.c0.morphisms = k.cells1;
  c.c0.src = k.src0;
  c.c0.tgt = k.tgt0;
  c.c0.id = k.id1;
  c.c0.comp = k.hcomp1;
  c.hmors = k.cells1;
  c.hsrc = k.src0;
  c.htgt = k.tgt0;
  c.hid_obj = k.id1;
  c.hcomp_h = k.hcomp1;

  struct Quintet { Token a, f, g, b, alpha; };
  std::map<Token, Quintet> data;
  std::map<std::tuple<Token, Token, Token, Token, Token>, Token> lookup;
  for (const Token& a : k.cells1)
    for (const Token& f : k.cells1) {
      if (k.src0.at(f) != k.src0.at(a)) continue;
      for (const Token& g : k.cells1) {
        if (k.src0.at(g) != k.tgt0.at(a)) continue;
        for (const Token& b : k.cells1) {
          if (k.src0.at(b) != k.tgt0.at(f) || k.tgt0.at(b) != k.tgt0.at(g))
            continue;
          const Token ga = k.hcomp1.at({g, a});
          const Token bf = k.hcomp1.at({b, f});
          for (const Token& alpha : k.cells2) {
            if (k.src1.at(alpha) != ga || k.tgt1.at(alpha) != bf) continue;
            Token t = quintet_token(a, f, g, b, alpha);
            c.squares.insert(t);
            c.dom[t] = a;
            c.cod[t] = b;
            c.vsrc[t] = f;
            c.vtgt[t] = g;
            data[t] = {a, f, g, b, alpha};
            lookup[{a, f, g, b, alpha}] = t;
          }
        }
      }
    }

  for (const Token& a : k.cells1) {
    const Token& ix = k.id1.at(k.src0.at(a));
    const Token& iy = k.id1.at(k.tgt0.at(a));
    c.vid[a] = lookup.at({a, ix, iy, a, k.id2.at(a)});
    c.hid_vmor[a] = lookup.at({ix, a, a, iy, k.id2.at(a)});
  }

  for (const auto& [t1, psi] : data)
    for (const auto& [t2, phi] : data) {
      if (psi.a == phi.b) {
        // vertical pasting (phi on top): whisker and compose 2-cells.
        const Token upper = k.hcomp2.at({k.id2.at(psi.g), phi.alpha});
        const Token lower = k.hcomp2.at({psi.alpha, k.id2.at(phi.f)});
        const Token alpha = k.vcomp2.at({lower, upper});
        c.vcomp[{t1, t2}] =
            lookup.at({phi.a, k.hcomp1.at({psi.f, phi.f}),
                       k.hcomp1.at({psi.g, phi.g}), psi.b, alpha});
      }
      if (psi.f == phi.g) {
        // horizontal pasting (phi on the left).
        const Token upper = k.hcomp2.at({psi.alpha, k.id2.at(phi.a)});
        const Token lower = k.hcomp2.at({k.id2.at(psi.b), phi.alpha});
        const Token alpha = k.vcomp2.at({lower, upper});
        c.hcomp_sq[{t1, t2}] =
            lookup.at({k.hcomp1.at({psi.a, phi.a}), phi.f, psi.g,
                       k.hcomp1.at({psi.b, phi.b}), alpha});
      }
    }

  require_generated_valid(c, "gen_quintet");
  return c;
}

FinDoubleCategory gen_product(const FinDoubleCategory& c, const FinDoubleCategory& d) {
  require_valid(c, "gen_product");
  require_valid(d, "gen_product");

  FinDoubleCategory p;
  auto cross = [](const std::set<Token>& xs, const std::set<Token>& ys,
                  const std::function<void(const Token&, const Token&, const Token&)>& f) {
    for (const Token& x : xs)
      for (const Token& y : ys) f(x, y, pair_token(x, y));
  };

  cross(c.c0.objects, d.c0.objects,
        [&](const Token&, const Token&, const Token& t) { p.c0.objects.insert(t); });
  cross(c.c0.morphisms, d.c0.morphisms, [&](const Token& f, const Token& g, const Token& t) {
    p.c0.morphisms.insert(t);
    p.c0.src[t] = pair_token(c.c0.src.at(f), d.c0.src.at(g));
    p.c0.tgt[t] = pair_token(c.c0.tgt.at(f), d.c0.tgt.at(g));
  });
  cross(c.c0.objects, d.c0.objects, [&](const Token& x, const Token& y, const Token& t) {
    p.c0.id[t] = pair_token(c.c0.id.at(x), d.c0.id.at(y));
  });
  for (const auto& [gf, h] : c.c0.comp)
    for (const auto& [gf2, h2] : d.c0.comp)
      p.c0.comp[{pair_token(gf.first, gf2.first), pair_token(gf.second, gf2.second)}] =
          pair_token(h, h2);

  cross(c.hmors, d.hmors, [&](const Token& a, const Token& b, const Token& t) {
    p.hmors.insert(t);
    p.hsrc[t] = pair_token(c.hsrc.at(a), d.hsrc.at(b));
    p.htgt[t] = pair_token(c.htgt.at(a), d.htgt.at(b));
  });
  cross(c.c0.objects, d.c0.objects, [&](const Token& x, const Token& y, const Token& t) {
    p.hid_obj[t] = pair_token(c.hid_obj.at(x), d.hid_obj.at(y));
  });
  for (const auto& [ba, r] : c.hcomp_h)
    for (const auto& [ba2, r2] : d.hcomp_h)
      p.hcomp_h[{pair_token(ba.first, ba2.first), pair_token(ba.second, ba2.second)}] =
          pair_token(r, r2);

  cross(c.squares, d.squares, [&](const Token& q, const Token& r, const Token& t) {
    p.squares.insert(t);
    p.dom[t] = pair_token(c.dom.at(q), d.dom.at(r));
    p.cod[t] = pair_token(c.cod.at(q), d.cod.at(r));
    p.vsrc[t] = pair_token(c.vsrc.at(q), d.vsrc.at(r));
    p.vtgt[t] = pair_token(c.vtgt.at(q), d.vtgt.at(r));
  });
  cross(c.hmors, d.hmors, [&](const Token& a, const Token& b, const Token& t) {
    p.vid[t] = pair_token(c.vid.at(a), d.vid.at(b));
  });
  cross(c.c0.morphisms, d.c0.morphisms, [&](const Token& f, const Token& g, const Token& t) {
    p.hid_vmor[t] = pair_token(c.hid_vmor.at(f), d.hid_vmor.at(g));
  });
  for (const auto& [pq, r] : c.vcomp)
    for (const auto& [pq2, r2] : d.vcomp)
      p.vcomp[{pair_token(pq.first, pq2.first), pair_token(pq.second, pq2.second)}] =
          pair_token(r, r2);
  for (const auto& [pq, r] : c.hcomp_sq)
    for (const auto& [pq2, r2] : d.hcomp_sq)
      p.hcomp_sq[{pair_token(pq.first, pq2.first), pair_token(pq.second, pq2.second)}] =
          pair_token(r, r2);

  require_generated_valid(p, "gen_product");
  return p;
}

}  // namespace dblcat
