// Shared corpus builders and mutation machinery for the test suites.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "dblcat/functors.hpp"
#include "dblcat/generators.hpp"

namespace dblcat::testing {

// Locally discrete 2-category on a finite category: one identity 2-cell
// per 1-cell.
inline Fin2Category locally_discrete(const FinCategory& k) {
  Fin2Category b;
  b.cells0 = k.objects;
  b.cells1 = k.morphisms;
  b.src0 = k.src;
  b.tgt0 = k.tgt;
  b.id1 = k.id;
  b.hcomp1 = k.comp;
  for (const Token& f : k.morphisms) {
    Token t = "2id|" + f;
    b.cells2.insert(t);
    b.src1[t] = f;
    b.tgt1[t] = f;
    b.id2[f] = t;
  }
  for (const Token& f : k.morphisms) b.vcomp2[{b.id2.at(f), b.id2.at(f)}] = b.id2.at(f);
  for (const auto& [gf, h] : k.comp)
    b.hcomp2[{b.id2.at(gf.first), b.id2.at(gf.second)}] = b.id2.at(h);
  return b;
}

// One 0-cell, one 1-cell, 2-cells the idempotent two-element monoid.
inline Fin2Category idempotent_monoid_2cat() {
  Fin2Category b;
  b.cells0 = {"pt"};
  b.cells1 = {"I"};
  b.cells2 = {"e", "one"};
  b.src0["I"] = "pt";
  b.tgt0["I"] = "pt";
  b.id1["pt"] = "I";
  b.src1["e"] = b.tgt1["e"] = "I";
  b.src1["one"] = b.tgt1["one"] = "I";
  b.id2["I"] = "one";
  for (const Token& x : {"e", "one"})
    for (const Token& y : {"e", "one"}) {
      const Token r = (x == "e" || y == "e") ? "e" : "one";
      b.vcomp2[{x, y}] = r;
      b.hcomp2[{x, y}] = r;
    }
  b.hcomp1[{"I", "I"}] = "I";
  return b;
}

// Two parallel 1-cells with a single non-identity 2-cell between them.
inline Fin2Category walking_2cell() {
  Fin2Category b;
  b.cells0 = {"x", "y"};
  b.cells1 = {"a", "b", "ix", "iy"};
  b.src0 = {{"a", "x"}, {"b", "x"}, {"ix", "x"}, {"iy", "y"}};
  b.tgt0 = {{"a", "y"}, {"b", "y"}, {"ix", "x"}, {"iy", "y"}};
  b.id1 = {{"x", "ix"}, {"y", "iy"}};
  for (const Token& f : b.cells1) {
    Token t = "2id|" + f;
    b.cells2.insert(t);
    b.src1[t] = f;
    b.tgt1[t] = f;
    b.id2[f] = t;
  }
  b.cells2.insert("al");
  b.src1["al"] = "a";
  b.tgt1["al"] = "b";

  b.hcomp1 = {{{"a", "ix"}, "a"},  {{"b", "ix"}, "b"},  {{"iy", "a"}, "a"},
              {{"iy", "b"}, "b"},  {{"ix", "ix"}, "ix"}, {{"iy", "iy"}, "iy"}};

  auto vc = [&](const Token& beta, const Token& alpha, const Token& r) {
    b.vcomp2[{beta, alpha}] = r;
  };
  for (const Token& f : b.cells1) vc(b.id2.at(f), b.id2.at(f), b.id2.at(f));
  vc("al", "2id|a", "al");
  vc("2id|b", "al", "al");

  auto hc = [&](const Token& beta, const Token& alpha, const Token& r) {
    b.hcomp2[{beta, alpha}] = r;
  };
  for (const auto& [gf, h] : b.hcomp1)
    hc(b.id2.at(gf.first), b.id2.at(gf.second), b.id2.at(h));
  hc("2id|iy", "al", "al");
  hc("al", "2id|ix", "al");
  return b;
}

inline Fin2Category point_2cat() {
  return locally_discrete(gen_poset_category(poset_antichain(1)));
}

inline Fin2Category walking_arrow_2cat() {
  return locally_discrete(gen_poset_category(poset_chain(2)));
}

inline std::vector<Fin2Category> corpus_two_categories() {
  return {point_2cat(), walking_arrow_2cat(), idempotent_monoid_2cat(),
          walking_2cell()};
}

// All partial orders on {0..n-1} for 1 <= n <= maxn, one representative
// per isomorphism class (canonical form taken over all relabelings).
inline std::vector<PosetSpec> all_posets_up_to(int maxn) {
  std::vector<PosetSpec> out;
  for (int n = 1; n <= maxn; ++n) {
    std::set<std::set<std::pair<int, int>>> seen;
    std::vector<std::pair<int, int>> offdiag;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) offdiag.push_back({i, j});

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    for (std::uint32_t bits = 0; bits < (1u << offdiag.size()); ++bits) {
      PosetSpec p;
      p.size = n;
      for (int i = 0; i < n; ++i) p.relation.insert({i, i});
      for (size_t k = 0; k < offdiag.size(); ++k)
        if (bits & (1u << k)) p.relation.insert(offdiag[k]);
      if (!is_partial_order(p)) continue;

      std::set<std::pair<int, int>> canon;
      std::vector<int> sigma = perm;
      bool first = true;
      do {
        std::set<std::pair<int, int>> relabeled;
        for (auto [i, j] : p.relation) relabeled.insert({sigma[i], sigma[j]});
        if (first || relabeled < canon) {
          canon = relabeled;
          first = false;
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));

      if (seen.insert(canon).second) {
        PosetSpec rep;
        rep.size = n;
        rep.relation = canon;
        out.push_back(rep);
      }
    }
  }
  return out;
}

// All monotone maps between two posets, as functors of their thin
// categories.
inline std::vector<CatFunctor> monotone_functors(const PosetSpec& p,
                                                 const PosetSpec& q) {
  std::vector<CatFunctor> out;
  FinCategory src = gen_poset_category(p);
  FinCategory dst = gen_poset_category(q);
  std::vector<int> u(p.size, 0);
  while (true) {
    bool monotone = true;
    for (auto [i, j] : p.relation)
      if (!q.relation.count({u[i], u[j]})) {
        monotone = false;
        break;
      }
    if (monotone) {
      CatFunctor f;
      f.source = src;
      f.target = dst;
      auto obj = [](int i) { return "x" + std::to_string(i); };
      for (int i = 0; i < p.size; ++i) f.f_obj[obj(i)] = obj(u[i]);
      for (auto [i, j] : p.relation)
        f.f_mor["le|" + obj(i) + "|" + obj(j)] =
            "le|" + obj(u[i]) + "|" + obj(u[j]);
      out.push_back(std::move(f));
    }
    int k = 0;
    while (k < p.size && ++u[k] == q.size) u[k++] = 0;
    if (k == p.size) break;
  }
  return out;
}

// The double functor Sq(u) induced by a functor of base categories.
inline DoubleFunctor sq_functor(const CatFunctor& u) {
  DoubleFunctor f;
  f.source = gen_commuting_squares(u.source);
  f.target = gen_commuting_squares(u.target);
  f.f_obj = u.f_obj;
  f.f_vmor = u.f_mor;
  f.f_hmor = u.f_mor;
  for (const Token& q : f.source.squares) {
    f.f_sq[q] = "sq|" + u.f_mor.at(f.source.dom.at(q)) + "|" +
                u.f_mor.at(f.source.vsrc.at(q)) + "|" +
                u.f_mor.at(f.source.vtgt.at(q)) + "|" +
                u.f_mor.at(f.source.cod.at(q));
  }
  return f;
}

struct NamedInstance {
  std::string name;
  FinDoubleCategory instance;
};

// The standing corpus: trivial doubles over the builtin 2-categories,
// Sq(K) over all posets of size <= 4, quintets over the builtin
// 2-categories, and pairwise products of a small seed list.
inline std::vector<NamedInstance> corpus_double_categories(int max_poset = 4,
                                                           bool with_products = true) {
  std::vector<NamedInstance> out;
  int i = 0;
  for (const Fin2Category& b : corpus_two_categories())
    out.push_back({"trivial" + std::to_string(i++), gen_trivial(b)});
  i = 0;
  for (const PosetSpec& p : all_posets_up_to(max_poset))
    out.push_back({"sq" + std::to_string(i++), gen_commuting_squares(gen_poset_category(p))});
  i = 0;
  for (const Fin2Category& b : corpus_two_categories())
    out.push_back({"quintet" + std::to_string(i++), gen_quintet(b)});

  if (with_products) {
    std::vector<NamedInstance> seeds;
    seeds.push_back({"sq-chain2", gen_commuting_squares(gen_poset_category(poset_chain(2)))});
    seeds.push_back({"sq-chain3", gen_commuting_squares(gen_poset_category(poset_chain(3)))});
    seeds.push_back({"trivial-monoid", gen_trivial(idempotent_monoid_2cat())});
    seeds.push_back({"quintet-monoid", gen_quintet(idempotent_monoid_2cat())});
    for (size_t a = 0; a < seeds.size(); ++a)
      for (size_t b = a; b < seeds.size(); ++b)
        out.push_back({"product|" + seeds[a].name + "|" + seeds[b].name,
                       gen_product(seeds[a].instance, seeds[b].instance)});
  }
  return out;
}

struct Mutant {
  std::string description;
  FinDoubleCategory instance;
};

// Single-entry mutations that keep the presentation well-formed: identity
// map entries are redirected to other declared values of the same sort,
// and unit-law composition entries are rewritten. Every such mutant
// violates a named axiom.
inline std::vector<Mutant> enumerate_named_mutants(const FinDoubleCategory& c,
                                                   size_t cap) {
  std::vector<Mutant> out;
  auto other = [](const std::set<Token>& pool, const Token& current) {
    for (const Token& t : pool)
      if (t != current) return t;
    return current;
  };

  for (const auto& [x, m] : c.c0.id) {
    const Token repl = other(c.c0.morphisms, m);
    if (repl == m) continue;
    Mutant mu{"c0.id(" + x + ")->" + repl, c};
    mu.instance.c0.id[x] = repl;
    out.push_back(std::move(mu));
    if (out.size() >= cap) return out;
  }
  for (const auto& [a, q] : c.vid) {
    const Token repl = other(c.squares, q);
    if (repl == q) continue;
    Mutant mu{"vid(" + a + ")->" + repl, c};
    mu.instance.vid[a] = repl;
    out.push_back(std::move(mu));
    if (out.size() >= cap) return out;
  }
  for (const auto& [x, u] : c.hid_obj) {
    const Token repl = other(c.hmors, u);
    if (repl == u) continue;
    Mutant mu{"hid_obj(" + x + ")->" + repl, c};
    mu.instance.hid_obj[x] = repl;
    out.push_back(std::move(mu));
    if (out.size() >= cap) return out;
  }
  for (const auto& [v, q] : c.hid_vmor) {
    const Token repl = other(c.squares, q);
    if (repl == q) continue;
    Mutant mu{"hid_vmor(" + v + ")->" + repl, c};
    mu.instance.hid_vmor[v] = repl;
    out.push_back(std::move(mu));
    if (out.size() >= cap) return out;
  }
  // Unit-law composition entries: rewriting comp(f, id) breaks the unit
  // law at f directly.
  for (const Token& f : c.c0.morphisms) {
    const TokenPair key{f, c.c0.id.at(c.c0.src.at(f))};
    const Token repl = other(c.c0.morphisms, c.c0.comp.at(key));
    if (repl == c.c0.comp.at(key)) continue;
    Mutant mu{"c0.comp(" + key.first + "," + key.second + ")->" + repl, c};
    mu.instance.c0.comp[key] = repl;
    out.push_back(std::move(mu));
    if (out.size() >= cap) return out;
  }
  for (const Token& q : c.squares) {
    const TokenPair key{q, c.vid.at(c.dom.at(q))};
    const Token repl = other(c.squares, c.vcomp.at(key));
    if (repl == c.vcomp.at(key)) continue;
    Mutant mu{"vcomp(" + key.first + "," + key.second + ")->" + repl, c};
    mu.instance.vcomp[key] = repl;
    out.push_back(std::move(mu));
    if (out.size() >= cap) return out;
  }
  for (const Token& q : c.squares) {
    const TokenPair key{q, c.hid_vmor.at(c.vsrc.at(q))};
    const Token repl = other(c.squares, c.hcomp_sq.at(key));
    if (repl == c.hcomp_sq.at(key)) continue;
    Mutant mu{"hcomp_sq(" + key.first + "," + key.second + ")->" + repl, c};
    mu.instance.hcomp_sq[key] = repl;
    out.push_back(std::move(mu));
    if (out.size() >= cap) return out;
  }
  for (const Token& a : c.hmors) {
    const TokenPair key{a, c.hid_obj.at(c.hsrc.at(a))};
    const Token repl = other(c.hmors, c.hcomp_h.at(key));
    if (repl == c.hcomp_h.at(key)) continue;
    Mutant mu{"hcomp_h(" + key.first + "," + key.second + ")->" + repl, c};
    mu.instance.hcomp_h[key] = repl;
    out.push_back(std::move(mu));
    if (out.size() >= cap) return out;
  }
  return out;
}

}  // namespace dblcat::testing
