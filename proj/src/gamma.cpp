#include "dblcat/gamma.hpp"

#include <algorithm>

namespace dblcat {

namespace {

struct Derivation {
  std::vector<Token> child_tokens;
  std::vector<WitnessTree> children;
};

// Closes `start` under a binary composition table, recording one witness
// per new square. Work proceeds in rounds: candidates of a round derive
// only from squares present before it, which keeps witnesses well-founded.
// Composites created inside this run are spliced into their parents so
// children always witness membership in the starting set. Among the
// derivations first reaching a square, the lexicographically least child
// token sequence wins.
std::map<Token, WitnessTree> close_under(const std::map<TokenPair, Token>& table,
                                         WitnessTree::Kind kind,
                                         const std::map<Token, WitnessTree>& start) {
  std::map<Token, WitnessTree> current = start;
  std::set<Token> this_run;

  auto flatten = [&](const Token& t, Derivation& d) {
    const WitnessTree& w = current.at(t);
    if (this_run.count(t)) {
      for (const WitnessTree& ch : w.children) {
        d.children.push_back(ch);
        d.child_tokens.push_back(ch.square);
      }
    } else {
      d.children.push_back(w);
      d.child_tokens.push_back(t);
    }
  };

  bool grew = true;
  while (grew) {
    grew = false;
    std::map<Token, Derivation> best;
    for (const auto& [key, r] : table) {
      if (current.count(r)) continue;
      if (!current.count(key.first) || !current.count(key.second)) continue;
      Derivation d;
      flatten(key.first, d);
      flatten(key.second, d);
      auto it = best.find(r);
      if (it == best.end() || d.child_tokens < it->second.child_tokens)
        best[r] = std::move(d);
    }
    for (auto& [r, d] : best) {
      WitnessTree w;
      w.kind = kind;
      w.square = r;
      w.children = std::move(d.children);
      current.emplace(r, std::move(w));
      this_run.insert(r);
      grew = true;
    }
  }
  return current;
}

std::set<Token> keys_of(const std::map<Token, WitnessTree>& m) {
  std::set<Token> s;
  for (const auto& [t, w] : m) s.insert(t);
  return s;
}

}  // namespace

GammaAnalysis vertical_filtration(const FinDoubleCategory& c) {
  require_valid(c, "vertical_filtration");
  GammaAnalysis a;

  std::map<Token, WitnessTree> h1;
  for (const Token& q : c.squares)
    if (is_globular(c, q)) h1.emplace(q, WitnessTree{WitnessTree::Kind::leaf, q, {}});
  for (const auto& [f, q] : c.hid_vmor)
    h1.emplace(q, WitnessTree{WitnessTree::Kind::leaf, q, {}});

  std::map<Token, WitnessTree> v = close_under(c.vcomp, WitnessTree::Kind::vnode, h1);
  a.levels.push_back({keys_of(h1), keys_of(v)});
  for (const auto& [t, w] : v) {
    a.vlength.emplace(t, 1);
    a.witness.emplace(t, w);
  }

  while (true) {
    auto h_next = close_under(c.hcomp_sq, WitnessTree::Kind::hnode, v);
    auto v_next = close_under(c.vcomp, WitnessTree::Kind::vnode, h_next);
    if (keys_of(v_next) == a.levels.back().v) {
      a.stable_at = static_cast<int>(a.levels.size());
      break;
    }
    const int n = static_cast<int>(a.levels.size()) + 1;
    a.levels.push_back({keys_of(h_next), keys_of(v_next)});
    for (const auto& [t, w] : v_next) {
      a.vlength.emplace(t, n);
      a.witness.emplace(t, w);
    }
    v = std::move(v_next);
  }

  const std::set<Token>& member = a.levels.back().v;
  FinDoubleCategory g;
  g.c0 = c.c0;
  g.hmors = c.hmors;
  g.hsrc = c.hsrc;
  g.htgt = c.htgt;
  g.hid_obj = c.hid_obj;
  g.hcomp_h = c.hcomp_h;
  g.vid = c.vid;
  g.hid_vmor = c.hid_vmor;
  g.squares = member;
  for (const Token& q : member) {
    g.dom[q] = c.dom.at(q);
    g.cod[q] = c.cod.at(q);
    g.vsrc[q] = c.vsrc.at(q);
    g.vtgt[q] = c.vtgt.at(q);
  }
  for (const auto& [key, r] : c.vcomp)
    if (member.count(key.first) && member.count(key.second)) g.vcomp[key] = r;
  for (const auto& [key, r] : c.hcomp_sq)
    if (member.count(key.first) && member.count(key.second)) g.hcomp_sq[key] = r;
  a.gamma = std::move(g);
  return a;
}

FinDoubleCategory gamma(const FinDoubleCategory& c) {
  return vertical_filtration(c).gamma;
}

bool is_globularily_generated(const FinDoubleCategory& c) {
  return gamma(c).squares == c.squares;
}

std::optional<int> vertical_length(const GammaAnalysis& a, const Token& q) {
  auto it = a.vlength.find(q);
  if (it == a.vlength.end()) return std::nullopt;
  return it->second;
}

std::optional<int> vertical_length(const FinDoubleCategory& c, const Token& q) {
  if (!c.squares.count(q)) throw UnknownIdentifier("unknown square: " + q);
  return vertical_length(vertical_filtration(c), q);
}

std::vector<Token> length_one_decomposition(const FinDoubleCategory& c,
                                            const GammaAnalysis& a, const Token& q) {
  if (!c.squares.count(q)) throw UnknownIdentifier("unknown square: " + q);
  auto len = vertical_length(a, q);
  if (!len || *len != 1)
    throw NotLengthOne("length_one_decomposition: vertical length of " + q +
                       " is not 1");

  std::map<Token, Token> hid_of;  // square -> vertical morphism
  for (const auto& [f, s] : c.hid_vmor) hid_of.emplace(s, f);

  const WitnessTree& w = a.witness.at(q);
  std::vector<Token> factors;  // composition order [theta_m, ..., theta_1]
  if (w.kind == WitnessTree::Kind::leaf) {
    factors = {q};
  } else {
    for (const WitnessTree& ch : w.children) factors.push_back(ch.square);
  }

  std::vector<Token> out;
  auto extend = [&](const Token& theta, bool first) {
    if (is_globular(c, theta)) {
      if (first)
        out = {theta};
      else
        out.front() = c.vcomp.at({theta, out.front()});
      return;
    }
    const Token& f = hid_of.at(theta);
    const Token top = c.vid.at(c.hid_obj.at(c.c0.tgt.at(f)));
    if (first) {
      const Token bottom = c.vid.at(c.hid_obj.at(c.c0.src.at(f)));
      out = {top, theta, bottom};
    } else {
      out.insert(out.begin(), {top, theta});
    }
  };

  extend(factors.back(), true);
  for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
    extend(factors[i], false);
  return out;
}

std::vector<Token> length_one_decomposition(const FinDoubleCategory& c, const Token& q) {
  return length_one_decomposition(c, vertical_filtration(c), q);
}

FinCategory transversal_category(const FinDoubleCategory& c) {
  require_valid(c, "transversal_category");
  FinCategory t;
  t.objects = c.c0.morphisms;
  t.morphisms = c.squares;
  t.src = c.vsrc;
  t.tgt = c.vtgt;
  t.id = c.hid_vmor;
  t.comp = c.hcomp_sq;
  return t;
}

ValidationReport check_prop_4_4(const FinDoubleCategory& c) {
  GammaAnalysis a = vertical_filtration(c);
  ValidationReport report;
  for (const Token& q : a.gamma.squares) {
    if (!is_globular(c, q) && !is_horizontal_endomorphism(c, q))
      report.add("prop44", {q}, "globular or horizontal endomorphism",
                 c.vsrc.at(q) + "!=" + c.vtgt.at(q));
  }
  report.sort_violations();
  return report;
}

ValidationReport check_cor_4_5(const FinDoubleCategory& c) {
  GammaAnalysis a = vertical_filtration(c);
  const std::set<Token>& member = a.gamma.squares;
  ValidationReport report;
  for (const auto& [key, r] : c.hcomp_sq) {
    if (!member.count(key.first) || !member.count(key.second)) continue;
    const bool both = is_globular(c, key.first) && is_globular(c, key.second);
    const bool composite = is_globular(c, r);
    if (both != composite)
      report.add("cor45", {key.first, key.second, r},
                 both ? "globular composite" : "non-globular composite",
                 composite ? "globular" : "non-globular");
  }
  report.sort_violations();
  return report;
}

ValidationReport check_lemma_4_6(const FinDoubleCategory& c) {
  GammaAnalysis a = vertical_filtration(c);
  std::map<Token, Token> hid_of;
  for (const auto& [f, s] : c.hid_vmor) hid_of.emplace(s, f);

  ValidationReport report;
  for (const Token& q : a.levels.front().v) {
    std::vector<Token> d;
    try {
      d = length_one_decomposition(c, a, q);
    } catch (const DblcatError& e) {
      report.add("lemma46", {q}, "decomposition", e.what());
      continue;
    }
    if (d.size() % 2 != 1) {
      report.add("lemma46", {q}, "odd alternating list",
                 std::to_string(d.size()) + " entries");
      continue;
    }
    for (size_t i = 0; i < d.size(); ++i) {
      const bool want_globular = i % 2 == 0;
      if (want_globular && !is_globular(c, d[i]))
        report.add("lemma46", {q, d[i]}, "globular Psi", d[i]);
      if (!want_globular && !hid_of.count(d[i]))
        report.add("lemma46", {q, d[i]}, "horizontal identity Phi", d[i]);
    }
    Token acc = d.back();
    for (int i = static_cast<int>(d.size()) - 2; i >= 0; --i)
      acc = c.vcomp.at({d[i], acc});
    if (acc != q) report.add("lemma46", {q}, q, acc);
  }
  report.sort_violations();
  return report;
}

Token evaluate_witness(const FinDoubleCategory& c, const WitnessTree& w) {
  if (w.kind == WitnessTree::Kind::leaf) return w.square;
  const auto& table = w.kind == WitnessTree::Kind::vnode ? c.vcomp : c.hcomp_sq;
  if (w.children.empty()) throw InvalidInput("witness node without children");
  Token acc = evaluate_witness(c, w.children.back());
  for (int i = static_cast<int>(w.children.size()) - 2; i >= 0; --i) {
    const Token left = evaluate_witness(c, w.children[i]);
    auto it = table.find({left, acc});
    if (it == table.end())
      throw InvalidInput("witness fold reaches a non-composable pair");
    acc = it->second;
  }
  return acc;
}

int witness_depth(const WitnessTree& w) {
  if (w.kind == WitnessTree::Kind::leaf) return 1;
  int m = 0;
  for (const WitnessTree& ch : w.children) m = std::max(m, witness_depth(ch));
  return w.kind == WitnessTree::Kind::hnode ? m + 1 : m;
}

std::string witness_to_prefix(const WitnessTree& w) {
  if (w.kind == WitnessTree::Kind::leaf) return w.square;
  std::string s = w.kind == WitnessTree::Kind::vnode ? "(v" : "(h";
  for (const WitnessTree& ch : w.children) s += " " + witness_to_prefix(ch);
  return s + ")";
}

}  // namespace dblcat
