#include "dblcat/functors.hpp"

namespace dblcat {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw MalformedPresentation(what);
}

void check_total(const std::map<Token, Token>& m, const std::set<Token>& keys,
                 const std::set<Token>& values, const std::string& name) {
  for (const Token& k : keys) {
    auto it = m.find(k);
    if (it == m.end()) malformed(name + " missing entry for " + k);
    if (!values.count(it->second))
      malformed(name + "(" + k + ") = " + it->second + " undeclared in target");
  }
  for (const auto& [k, v] : m)
    if (!keys.count(k)) malformed(name + " keyed on undeclared " + k);
}

void require_valid_functor(const DoubleFunctor& f, const char* op) {
  if (!validate_double_functor(f).ok)
    throw InvalidInput(std::string(op) + ": functor fails validation");
}

}  // namespace

ValidationReport validate_double_functor(const DoubleFunctor& f) {
  require_valid(f.source, "validate_double_functor(source)");
  require_valid(f.target, "validate_double_functor(target)");
  check_total(f.f_obj, f.source.c0.objects, f.target.c0.objects, "f_obj");
  check_total(f.f_vmor, f.source.c0.morphisms, f.target.c0.morphisms, "f_vmor");
  check_total(f.f_hmor, f.source.hmors, f.target.hmors, "f_hmor");
  check_total(f.f_sq, f.source.squares, f.target.squares, "f_sq");

  const FinDoubleCategory& s = f.source;
  const FinDoubleCategory& t = f.target;
  ValidationReport report;

  // F0 : C0 -> D0 is a functor.
  for (const Token& m : s.c0.morphisms) {
    if (t.c0.src.at(f.f_vmor.at(m)) != f.f_obj.at(s.c0.src.at(m)) ||
        t.c0.tgt.at(f.f_vmor.at(m)) != f.f_obj.at(s.c0.tgt.at(m)))
      report.add("F0-boundary", {m},
                 f.f_obj.at(s.c0.src.at(m)) + "->" + f.f_obj.at(s.c0.tgt.at(m)),
                 t.c0.src.at(f.f_vmor.at(m)) + "->" + t.c0.tgt.at(f.f_vmor.at(m)));
  }
  for (const Token& x : s.c0.objects) {
    if (f.f_vmor.at(s.c0.id.at(x)) != t.c0.id.at(f.f_obj.at(x)))
      report.add("F0-identity", {x}, t.c0.id.at(f.f_obj.at(x)),
                 f.f_vmor.at(s.c0.id.at(x)));
  }
  for (const auto& [gf, h] : s.c0.comp) {
    auto it = t.c0.comp.find({f.f_vmor.at(gf.first), f.f_vmor.at(gf.second)});
    if (it == t.c0.comp.end() || it->second != f.f_vmor.at(h))
      report.add("F0-composition", {gf.first, gf.second}, f.f_vmor.at(h),
                 it == t.c0.comp.end() ? "<undefined>" : it->second);
  }

  // F1 : C1 -> D1 is a functor.
  for (const Token& q : s.squares) {
    if (t.dom.at(f.f_sq.at(q)) != f.f_hmor.at(s.dom.at(q)) ||
        t.cod.at(f.f_sq.at(q)) != f.f_hmor.at(s.cod.at(q)))
      report.add("F1-boundary", {q},
                 f.f_hmor.at(s.dom.at(q)) + "=>" + f.f_hmor.at(s.cod.at(q)),
                 t.dom.at(f.f_sq.at(q)) + "=>" + t.cod.at(f.f_sq.at(q)));
  }
  for (const Token& a : s.hmors) {
    if (f.f_sq.at(s.vid.at(a)) != t.vid.at(f.f_hmor.at(a)))
      report.add("F1-identity", {a}, t.vid.at(f.f_hmor.at(a)),
                 f.f_sq.at(s.vid.at(a)));
  }
  for (const auto& [pq, r] : s.vcomp) {
    auto it = t.vcomp.find({f.f_sq.at(pq.first), f.f_sq.at(pq.second)});
    if (it == t.vcomp.end() || it->second != f.f_sq.at(r))
      report.add("F1-composition", {pq.first, pq.second}, f.f_sq.at(r),
                 it == t.vcomp.end() ? "<undefined>" : it->second);
  }

  // Compatibility with s, t, and hsrc/htgt.
  for (const Token& q : s.squares) {
    if (t.vsrc.at(f.f_sq.at(q)) != f.f_vmor.at(s.vsrc.at(q)))
      report.add("s-commutes", {q}, f.f_vmor.at(s.vsrc.at(q)),
                 t.vsrc.at(f.f_sq.at(q)));
    if (t.vtgt.at(f.f_sq.at(q)) != f.f_vmor.at(s.vtgt.at(q)))
      report.add("t-commutes", {q}, f.f_vmor.at(s.vtgt.at(q)),
                 t.vtgt.at(f.f_sq.at(q)));
  }
  for (const Token& a : s.hmors) {
    if (t.hsrc.at(f.f_hmor.at(a)) != f.f_obj.at(s.hsrc.at(a)) ||
        t.htgt.at(f.f_hmor.at(a)) != f.f_obj.at(s.htgt.at(a)))
      report.add("hsrc-commutes", {a},
                 f.f_obj.at(s.hsrc.at(a)) + "->" + f.f_obj.at(s.htgt.at(a)),
                 t.hsrc.at(f.f_hmor.at(a)) + "->" + t.htgt.at(f.f_hmor.at(a)));
  }

  // Compatibility with i.
  for (const Token& x : s.c0.objects) {
    if (f.f_hmor.at(s.hid_obj.at(x)) != t.hid_obj.at(f.f_obj.at(x)))
      report.add("i-commutes", {x}, t.hid_obj.at(f.f_obj.at(x)),
                 f.f_hmor.at(s.hid_obj.at(x)));
  }
  for (const Token& v : s.c0.morphisms) {
    if (f.f_sq.at(s.hid_vmor.at(v)) != t.hid_vmor.at(f.f_vmor.at(v)))
      report.add("i-commutes", {v}, t.hid_vmor.at(f.f_vmor.at(v)),
                 f.f_sq.at(s.hid_vmor.at(v)));
  }

  // Strict preservation of horizontal composition.
  for (const auto& [ba, r] : s.hcomp_h) {
    auto it = t.hcomp_h.find({f.f_hmor.at(ba.first), f.f_hmor.at(ba.second)});
    if (it == t.hcomp_h.end() || it->second != f.f_hmor.at(r))
      report.add("hcomp-h-preserved", {ba.first, ba.second}, f.f_hmor.at(r),
                 it == t.hcomp_h.end() ? "<undefined>" : it->second);
  }
  for (const auto& [pq, r] : s.hcomp_sq) {
    auto it = t.hcomp_sq.find({f.f_sq.at(pq.first), f.f_sq.at(pq.second)});
    if (it == t.hcomp_sq.end() || it->second != f.f_sq.at(r))
      report.add("hcomp-sq-preserved", {pq.first, pq.second}, f.f_sq.at(r),
                 it == t.hcomp_sq.end() ? "<undefined>" : it->second);
  }

  report.sort_violations();
  return report;
}

ValidationReport validate_cat_functor(const CatFunctor& f) {
  require_well_formed(f.source);
  require_well_formed(f.target);
  check_total(f.f_obj, f.source.objects, f.target.objects, "f_obj");
  check_total(f.f_mor, f.source.morphisms, f.target.morphisms, "f_mor");

  ValidationReport report;
  for (const Token& m : f.source.morphisms) {
    if (f.target.src.at(f.f_mor.at(m)) != f.f_obj.at(f.source.src.at(m)) ||
        f.target.tgt.at(f.f_mor.at(m)) != f.f_obj.at(f.source.tgt.at(m)))
      report.add("functor-boundary", {m},
                 f.f_obj.at(f.source.src.at(m)) + "->" + f.f_obj.at(f.source.tgt.at(m)),
                 f.target.src.at(f.f_mor.at(m)) + "->" + f.target.tgt.at(f.f_mor.at(m)));
  }
  for (const Token& x : f.source.objects) {
    if (f.f_mor.at(f.source.id.at(x)) != f.target.id.at(f.f_obj.at(x)))
      report.add("functor-identity", {x}, f.target.id.at(f.f_obj.at(x)),
                 f.f_mor.at(f.source.id.at(x)));
  }
  for (const auto& [gf, h] : f.source.comp) {
    auto it = f.target.comp.find({f.f_mor.at(gf.first), f.f_mor.at(gf.second)});
    if (it == f.target.comp.end() || it->second != f.f_mor.at(h))
      report.add("functor-composition", {gf.first, gf.second}, f.f_mor.at(h),
                 it == f.target.comp.end() ? "<undefined>" : it->second);
  }
  report.sort_violations();
  return report;
}

ValidationReport validate_transformation(const DoubleNaturalTransformation& t) {
  ValidationReport report;
  report.absorb(validate_double_functor(t.src_f), "srcF-");
  report.absorb(validate_double_functor(t.tgt_f), "tgtF-");
  if (t.src_f.source != t.tgt_f.source || t.src_f.target != t.tgt_f.target) {
    report.add("parallel", {}, "src_f and tgt_f parallel", "mismatch");
    report.sort_violations();
    return report;
  }
  const FinDoubleCategory& c = t.src_f.source;
  const FinDoubleCategory& d = t.src_f.target;
  check_total(t.eta0, c.c0.objects, d.c0.morphisms, "eta0");
  check_total(t.eta1, c.hmors, d.squares, "eta1");

  for (const Token& x : c.c0.objects) {
    if (d.c0.src.at(t.eta0.at(x)) != t.src_f.f_obj.at(x) ||
        d.c0.tgt.at(t.eta0.at(x)) != t.tgt_f.f_obj.at(x))
      report.add("eta0-boundary", {x},
                 t.src_f.f_obj.at(x) + "->" + t.tgt_f.f_obj.at(x),
                 d.c0.src.at(t.eta0.at(x)) + "->" + d.c0.tgt.at(t.eta0.at(x)));
  }
  for (const Token& v : c.c0.morphisms) {
    auto lhs = d.c0.comp.find({t.eta0.at(c.c0.tgt.at(v)), t.src_f.f_vmor.at(v)});
    auto rhs = d.c0.comp.find({t.tgt_f.f_vmor.at(v), t.eta0.at(c.c0.src.at(v))});
    if (lhs == d.c0.comp.end() || rhs == d.c0.comp.end() ||
        lhs->second != rhs->second)
      report.add("eta0-naturality", {v},
                 rhs == d.c0.comp.end() ? "<undefined>" : rhs->second,
                 lhs == d.c0.comp.end() ? "<undefined>" : lhs->second);
  }
  for (const Token& a : c.hmors) {
    const Token& q = t.eta1.at(a);
    SquareBoundary want{t.src_f.f_hmor.at(a), t.tgt_f.f_hmor.at(a),
                        t.eta0.at(c.hsrc.at(a)), t.eta0.at(c.htgt.at(a))};
    SquareBoundary got{d.dom.at(q), d.cod.at(q), d.vsrc.at(q), d.vtgt.at(q)};
    if (!(want == got))
      report.add("eta1-boundary", {a, q},
                 want.dom + ";" + want.cod + ";" + want.vsrc + ";" + want.vtgt,
                 got.dom + ";" + got.cod + ";" + got.vsrc + ";" + got.vtgt);
  }
  for (const Token& q : c.squares) {
    auto lhs = d.vcomp.find({t.eta1.at(c.cod.at(q)), t.src_f.f_sq.at(q)});
    auto rhs = d.vcomp.find({t.tgt_f.f_sq.at(q), t.eta1.at(c.dom.at(q))});
    if (lhs == d.vcomp.end() || rhs == d.vcomp.end() || lhs->second != rhs->second)
      report.add("eta1-naturality", {q},
                 rhs == d.vcomp.end() ? "<undefined>" : rhs->second,
                 lhs == d.vcomp.end() ? "<undefined>" : lhs->second);
  }
  for (const Token& x : c.c0.objects) {
    if (t.eta1.at(c.hid_obj.at(x)) != d.hid_vmor.at(t.eta0.at(x)))
      report.add("eta1-i", {x}, d.hid_vmor.at(t.eta0.at(x)),
                 t.eta1.at(c.hid_obj.at(x)));
  }
  for (const auto& [ba, r] : c.hcomp_h) {
    auto it = d.hcomp_sq.find({t.eta1.at(ba.first), t.eta1.at(ba.second)});
    if (it == d.hcomp_sq.end() || it->second != t.eta1.at(r))
      report.add("eta1-hcomp", {ba.first, ba.second}, t.eta1.at(r),
                 it == d.hcomp_sq.end() ? "<undefined>" : it->second);
  }

  report.sort_violations();
  return report;
}

DoubleFunctor identity_functor(const FinDoubleCategory& c) {
  DoubleFunctor f;
  f.source = c;
  f.target = c;
  for (const Token& x : c.c0.objects) f.f_obj[x] = x;
  for (const Token& v : c.c0.morphisms) f.f_vmor[v] = v;
  for (const Token& a : c.hmors) f.f_hmor[a] = a;
  for (const Token& q : c.squares) f.f_sq[q] = q;
  return f;
}

DoubleFunctor inclusion_functor(const FinDoubleCategory& sub,
                                const FinDoubleCategory& ambient) {
  DoubleFunctor f;
  f.source = sub;
  f.target = ambient;
  for (const Token& x : sub.c0.objects) f.f_obj[x] = x;
  for (const Token& v : sub.c0.morphisms) f.f_vmor[v] = v;
  for (const Token& a : sub.hmors) f.f_hmor[a] = a;
  for (const Token& q : sub.squares) f.f_sq[q] = q;
  return f;
}

DoubleFunctor compose_functors(const DoubleFunctor& g, const DoubleFunctor& f) {
  if (f.target != g.source)
    throw InvalidInput("compose_functors: target of f differs from source of g");
  DoubleFunctor h;
  h.source = f.source;
  h.target = g.target;
  for (const auto& [k, v] : f.f_obj) h.f_obj[k] = g.f_obj.at(v);
  for (const auto& [k, v] : f.f_vmor) h.f_vmor[k] = g.f_vmor.at(v);
  for (const auto& [k, v] : f.f_hmor) h.f_hmor[k] = g.f_hmor.at(v);
  for (const auto& [k, v] : f.f_sq) h.f_sq[k] = g.f_sq.at(v);
  return h;
}

DoubleFunctor gamma_functor(const DoubleFunctor& f) {
  require_valid_functor(f, "gamma_functor");
  FinDoubleCategory gs = gamma(f.source);
  FinDoubleCategory gt = gamma(f.target);

  DoubleFunctor g;
  g.source = gs;
  g.target = std::move(gt);
  g.f_obj = f.f_obj;
  g.f_vmor = f.f_vmor;
  g.f_hmor = f.f_hmor;
  for (const Token& q : gs.squares) {
    const Token& image = f.f_sq.at(q);
    if (!g.target.squares.count(image))
      throw ImageEscape("gamma_functor: image of " + q +
                        " lies outside the target's gamma");
    g.f_sq[q] = image;
  }
  return g;
}

ValidationReport check_filtration_preservation(const DoubleFunctor& f) {
  require_valid_functor(f, "check_filtration_preservation");
  DoubleFunctor g = f;
  if (!is_globularily_generated(f.source) || !is_globularily_generated(f.target))
    g = gamma_functor(f);

  GammaAnalysis sa = vertical_filtration(g.source);
  GammaAnalysis ta = vertical_filtration(g.target);
  ValidationReport report;

  auto level = [](const GammaAnalysis& a, int n) -> const GammaLevel& {
    const int idx = std::min<int>(n, static_cast<int>(a.levels.size())) - 1;
    return a.levels[idx];
  };
  for (int n = 1; n <= sa.stable_at; ++n) {
    const GammaLevel& src = sa.levels[n - 1];
    const GammaLevel& dst = level(ta, n);
    for (const Token& q : src.v)
      if (!dst.v.count(g.f_sq.at(q)))
        report.add("lemma51-V", {q, g.f_sq.at(q)},
                   "image in V_" + std::to_string(n), "outside");
    for (const Token& q : src.h)
      if (!dst.h.count(g.f_sq.at(q)))
        report.add("lemma51-H", {q, g.f_sq.at(q)},
                   "image in H_" + std::to_string(n), "outside");
  }
  report.sort_violations();
  return report;
}

namespace {

FinCategory vertical_level_category(const FinDoubleCategory& c,
                                    const GammaAnalysis& a, int n) {
  const std::set<Token>& members = a.levels[n - 1].v;
  FinCategory k;
  k.objects = c.hmors;
  k.morphisms = members;
  for (const Token& q : members) {
    k.src[q] = c.dom.at(q);
    k.tgt[q] = c.cod.at(q);
  }
  k.id = c.vid;
  for (const auto& [key, r] : c.vcomp)
    if (members.count(key.first) && members.count(key.second)) k.comp[key] = r;
  return k;
}

}  // namespace

CatFunctor restrict_vertical_functor(const DoubleFunctor& f, int n) {
  ValidationReport pre = check_filtration_preservation(f);
  if (!pre.ok)
    throw InvalidInput("restrict_vertical_functor: filtration preservation fails");

  GammaAnalysis sa = vertical_filtration(f.source);
  if (n < 1 || n > sa.stable_at)
    throw LevelOutOfRange("restrict_vertical_functor: level " + std::to_string(n) +
                          " exceeds stabilization " + std::to_string(sa.stable_at));
  GammaAnalysis ta = vertical_filtration(f.target);
  const int tn = std::min<int>(n, static_cast<int>(ta.levels.size()));

  CatFunctor r;
  r.source = vertical_level_category(f.source, sa, n);
  r.target = vertical_level_category(f.target, ta, tn);
  r.f_obj = f.f_hmor;
  for (const Token& q : r.source.morphisms) r.f_mor[q] = f.f_sq.at(q);
  return r;
}

CatFunctor transversal_functor(const DoubleFunctor& f) {
  require_valid_functor(f, "transversal_functor");
  CatFunctor t;
  t.source = transversal_category(f.source);
  t.target = transversal_category(f.target);
  t.f_obj = f.f_vmor;
  t.f_mor = f.f_sq;
  return t;
}

ValidationReport check_epsilon_naturality(const DoubleFunctor& f) {
  require_valid_functor(f, "check_epsilon_naturality");
  return check_epsilon_naturality(f, gamma_functor(f));
}

ValidationReport check_epsilon_naturality(const DoubleFunctor& f,
                                          const DoubleFunctor& gamma_f) {
  require_valid_functor(f, "check_epsilon_naturality");
  ValidationReport report;

  FinDoubleCategory gs = gamma(f.source);
  FinDoubleCategory gt = gamma(f.target);
  if (gamma_f.source != gs)
    report.add("gammaF-source", {}, "gamma of source", "mismatch");
  if (gamma_f.target != gt)
    report.add("gammaF-target", {}, "gamma of target", "mismatch");

  // epsilon_D . gamma f = f . epsilon_C componentwise: both counit legs
  // are token inclusions, so the two composites agree exactly when
  // gamma_f restricts f on every cell of gamma(source).
  auto compare = [&](const std::map<Token, Token>& gmap,
                     const std::map<Token, Token>& fmap,
                     const std::set<Token>& cells, const char* what) {
    for (const Token& x : cells) {
      auto git = gmap.find(x);
      auto fit = fmap.find(x);
      if (git == gmap.end() || fit == fmap.end() || git->second != fit->second)
        report.add("epsilon-naturality", {what, x},
                   fit == fmap.end() ? "<undefined>" : fit->second,
                   git == gmap.end() ? "<undefined>" : git->second);
    }
  };
  compare(gamma_f.f_obj, f.f_obj, gs.c0.objects, "f_obj");
  compare(gamma_f.f_vmor, f.f_vmor, gs.c0.morphisms, "f_vmor");
  compare(gamma_f.f_hmor, f.f_hmor, gs.hmors, "f_hmor");
  compare(gamma_f.f_sq, f.f_sq, gs.squares, "f_sq");

  // Triangle identities: gamma applied to either counit inclusion is the
  // identity of the corresponding gamma piece.
  auto triangle = [&](const FinDoubleCategory& g, const FinDoubleCategory& ambient,
                      const char* side) {
    DoubleFunctor eps = inclusion_functor(g, ambient);
    DoubleFunctor restricted = gamma_functor(eps);
    if (!(restricted == identity_functor(g)))
      report.add("triangle", {}, std::string("identity on gamma(") + side + ")",
                 "mismatch");
  };
  triangle(gs, f.source, "source");
  triangle(gt, f.target, "target");

  report.sort_violations();
  return report;
}

DoubleFunctor universal_lift(const DoubleFunctor& f) {
  require_valid_functor(f, "universal_lift");
  if (!is_globularily_generated(f.source))
    throw InvalidInput("universal_lift: source is not globularily generated");

  DoubleFunctor lift;
  lift.source = f.source;
  lift.target = gamma(f.target);
  lift.f_obj = f.f_obj;
  lift.f_vmor = f.f_vmor;
  lift.f_hmor = f.f_hmor;
  for (const Token& q : f.source.squares) {
    const Token& image = f.f_sq.at(q);
    if (!lift.target.squares.count(image))
      throw ImageEscape("universal_lift: image of " + q +
                        " lies outside gamma of the target");
    lift.f_sq[q] = image;
  }
  return lift;
}

bool is_gg_transformation(const DoubleNaturalTransformation& t) {
  if (!validate_transformation(t).ok)
    throw InvalidInput("is_gg_transformation: transformation fails validation");
  const std::set<Token> member = gamma(t.src_f.target).squares;
  for (const auto& [a, q] : t.eta1)
    if (!member.count(q)) return false;
  return true;
}

}  // namespace dblcat
