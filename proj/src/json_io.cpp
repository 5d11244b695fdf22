#include "dblcat/json_io.hpp"

namespace dblcat {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw MalformedPresentation(what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::set<Token> tokens_from(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array()) malformed(std::string(key) + " must be an array");
  std::set<Token> out;
  for (const json& item : arr) {
    if (!item.is_string()) malformed(std::string(key) + " entries must be strings");
    auto [it, fresh] = out.insert(item.get<Token>());
    if (!fresh) malformed("duplicate token '" + *it + "' in " + key);
  }
  return out;
}

json tokens_to(const std::set<Token>& s) {
  json arr = json::array();
  for (const Token& t : s) arr.push_back(t);
  return arr;
}

std::map<Token, Token> map_from(const json& j, const char* key) {
  const json& obj = field(j, key);
  if (!obj.is_object()) malformed(std::string(key) + " must be an object");
  std::map<Token, Token> out;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!it.value().is_string())
      malformed(std::string(key) + " values must be strings");
    out[it.key()] = it.value().get<Token>();
  }
  return out;
}

json map_to(const std::map<Token, Token>& m) {
  json obj = json::object();
  for (const auto& [k, v] : m) obj[k] = v;
  return obj;
}

std::map<TokenPair, Token> table_from(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array()) malformed(std::string(key) + " must be an array of triples");
  std::map<TokenPair, Token> out;
  for (const json& item : arr) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_string() ||
        !item[1].is_string() || !item[2].is_string())
      malformed(std::string(key) + " entries must be [left, right, result]");
    TokenPair kp{item[0].get<Token>(), item[1].get<Token>()};
    if (out.count(kp))
      malformed("duplicate " + std::string(key) + " entry (" + kp.first + "," +
                kp.second + ")");
    out[kp] = item[2].get<Token>();
  }
  return out;
}

json table_to(const std::map<TokenPair, Token>& m) {
  json arr = json::array();
  for (const auto& [k, v] : m) arr.push_back(json::array({k.first, k.second, v}));
  return arr;
}

}  // namespace

json category_to_json(const FinCategory& k) {
  json j;
  j["objects"] = tokens_to(k.objects);
  j["morphisms"] = tokens_to(k.morphisms);
  j["src"] = map_to(k.src);
  j["tgt"] = map_to(k.tgt);
  j["id"] = map_to(k.id);
  j["comp"] = table_to(k.comp);
  return j;
}

FinCategory category_from_json(const json& j) {
  FinCategory k;
  k.objects = tokens_from(j, "objects");
  k.morphisms = tokens_from(j, "morphisms");
  k.src = map_from(j, "src");
  k.tgt = map_from(j, "tgt");
  k.id = map_from(j, "id");
  k.comp = table_from(j, "comp");
  require_well_formed(k);
  return k;
}

json double_category_to_json(const FinDoubleCategory& c) {
  json j;
  j["c0"] = category_to_json(c.c0);
  j["hmors"] = tokens_to(c.hmors);
  j["hsrc"] = map_to(c.hsrc);
  j["htgt"] = map_to(c.htgt);
  j["hid_obj"] = map_to(c.hid_obj);
  j["squares"] = tokens_to(c.squares);
  j["dom"] = map_to(c.dom);
  j["cod"] = map_to(c.cod);
  j["vsrc"] = map_to(c.vsrc);
  j["vtgt"] = map_to(c.vtgt);
  j["vid"] = map_to(c.vid);
  j["hid_vmor"] = map_to(c.hid_vmor);
  j["vcomp"] = table_to(c.vcomp);
  j["hcomp_h"] = table_to(c.hcomp_h);
  j["hcomp_sq"] = table_to(c.hcomp_sq);
  return j;
}

FinDoubleCategory double_category_from_json(const json& j) {
  FinDoubleCategory c;
  c.c0 = category_from_json(field(j, "c0"));
  c.hmors = tokens_from(j, "hmors");
  c.hsrc = map_from(j, "hsrc");
  c.htgt = map_from(j, "htgt");
  c.hid_obj = map_from(j, "hid_obj");
  c.squares = tokens_from(j, "squares");
  c.dom = map_from(j, "dom");
  c.cod = map_from(j, "cod");
  c.vsrc = map_from(j, "vsrc");
  c.vtgt = map_from(j, "vtgt");
  c.vid = map_from(j, "vid");
  c.hid_vmor = map_from(j, "hid_vmor");
  c.vcomp = table_from(j, "vcomp");
  c.hcomp_h = table_from(j, "hcomp_h");
  c.hcomp_sq = table_from(j, "hcomp_sq");
  require_well_formed(c);
  return c;
}

json two_category_to_json(const Fin2Category& b) {
  json j;
  j["cells0"] = tokens_to(b.cells0);
  j["cells1"] = tokens_to(b.cells1);
  j["cells2"] = tokens_to(b.cells2);
  j["src0"] = map_to(b.src0);
  j["tgt0"] = map_to(b.tgt0);
  j["src1"] = map_to(b.src1);
  j["tgt1"] = map_to(b.tgt1);
  j["id1"] = map_to(b.id1);
  j["id2"] = map_to(b.id2);
  j["hcomp1"] = table_to(b.hcomp1);
  j["vcomp2"] = table_to(b.vcomp2);
  j["hcomp2"] = table_to(b.hcomp2);
  return j;
}

Fin2Category two_category_from_json(const json& j) {
  Fin2Category b;
  b.cells0 = tokens_from(j, "cells0");
  b.cells1 = tokens_from(j, "cells1");
  b.cells2 = tokens_from(j, "cells2");
  b.src0 = map_from(j, "src0");
  b.tgt0 = map_from(j, "tgt0");
  b.src1 = map_from(j, "src1");
  b.tgt1 = map_from(j, "tgt1");
  b.id1 = map_from(j, "id1");
  b.id2 = map_from(j, "id2");
  b.hcomp1 = table_from(j, "hcomp1");
  b.vcomp2 = table_from(j, "vcomp2");
  b.hcomp2 = table_from(j, "hcomp2");
  require_well_formed(b);
  return b;
}

json decorated_to_json(const DecoratedBicategory& d) {
  json j;
  j["decoration"] = category_to_json(d.decoration);
  j["underlying"] = two_category_to_json(d.underlying);
  return j;
}

DecoratedBicategory decorated_from_json(const json& j) {
  DecoratedBicategory d;
  d.decoration = category_from_json(field(j, "decoration"));
  d.underlying = two_category_from_json(field(j, "underlying"));
  return d;
}

json functor_to_json(const DoubleFunctor& f) {
  json j;
  j["source"] = double_category_to_json(f.source);
  j["target"] = double_category_to_json(f.target);
  j["f_obj"] = map_to(f.f_obj);
  j["f_vmor"] = map_to(f.f_vmor);
  j["f_hmor"] = map_to(f.f_hmor);
  j["f_sq"] = map_to(f.f_sq);
  return j;
}

DoubleFunctor functor_from_json(const json& j) {
  DoubleFunctor f;
  f.source = double_category_from_json(field(j, "source"));
  f.target = double_category_from_json(field(j, "target"));
  f.f_obj = map_from(j, "f_obj");
  f.f_vmor = map_from(j, "f_vmor");
  f.f_hmor = map_from(j, "f_hmor");
  f.f_sq = map_from(j, "f_sq");
  return f;
}

json transformation_to_json(const DoubleNaturalTransformation& t) {
  json j;
  j["source"] = double_category_to_json(t.src_f.source);
  j["target"] = double_category_to_json(t.src_f.target);
  auto maps = [](const DoubleFunctor& f) {
    json m;
    m["f_obj"] = map_to(f.f_obj);
    m["f_vmor"] = map_to(f.f_vmor);
    m["f_hmor"] = map_to(f.f_hmor);
    m["f_sq"] = map_to(f.f_sq);
    return m;
  };
  j["src_f"] = maps(t.src_f);
  j["tgt_f"] = maps(t.tgt_f);
  j["eta0"] = map_to(t.eta0);
  j["eta1"] = map_to(t.eta1);
  return j;
}

DoubleNaturalTransformation transformation_from_json(const json& j) {
  DoubleNaturalTransformation t;
  FinDoubleCategory source = double_category_from_json(field(j, "source"));
  FinDoubleCategory target = double_category_from_json(field(j, "target"));
  auto maps = [&](const json& m) {
    DoubleFunctor f;
    f.source = source;
    f.target = target;
    f.f_obj = map_from(m, "f_obj");
    f.f_vmor = map_from(m, "f_vmor");
    f.f_hmor = map_from(m, "f_hmor");
    f.f_sq = map_from(m, "f_sq");
    return f;
  };
  t.src_f = maps(field(j, "src_f"));
  t.tgt_f = maps(field(j, "tgt_f"));
  t.eta0 = map_from(j, "eta0");
  t.eta1 = map_from(j, "eta1");
  return t;
}

json gamma_report_to_json(const FinDoubleCategory& c, const GammaAnalysis& a,
                          bool lengths, bool witnesses) {
  json j;
  j["gg"] = a.gamma.squares == c.squares;
  j["squares"] = c.squares.size();
  j["stable_at"] = a.stable_at;
  j["gamma_squares"] = a.gamma.squares.size();
  json levels = json::array();
  for (size_t i = 0; i < a.levels.size(); ++i) {
    json level;
    level["n"] = i + 1;
    level["H"] = tokens_to(a.levels[i].h);
    level["V"] = tokens_to(a.levels[i].v);
    levels.push_back(level);
  }
  j["levels"] = levels;
  j["gamma"] = double_category_to_json(a.gamma);
  if (lengths) {
    json vl = json::object();
    for (const auto& [q, n] : a.vlength) vl[q] = n;
    j["vlength"] = vl;
  }
  if (witnesses) {
    json w = json::object();
    for (const auto& [q, tree] : a.witness) w[q] = witness_to_prefix(tree);
    j["witnesses"] = w;
  }
  return j;
}

namespace {

BitVec bitvec_from(const json& row, const char* key, int width) {
  if (!row.is_array() || static_cast<int>(row.size()) != width)
    malformed(std::string(key) + " must be a 0/1 array of length " +
              std::to_string(width));
  BitVec v = 0;
  for (int i = 0; i < width; ++i) {
    if (!row[i].is_number_integer() || (row[i] != 0 && row[i] != 1))
      malformed(std::string(key) + " entries must be 0 or 1");
    if (row[i] == 1) v |= BitVec(1) << i;
  }
  return v;
}

json bitvec_to(BitVec v, int width) {
  json arr = json::array();
  for (int i = 0; i < width; ++i) arr.push_back((v >> i) & 1u);
  return arr;
}

json matrix_to(const F2Matrix& m) {
  // row-major rows of 0/1
  json arr = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back((m.col[c] >> r) & 1u);
    arr.push_back(row);
  }
  return arr;
}

F2Matrix matrix_from(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array() || arr.empty())
    malformed(std::string(key) + " must be a non-empty array of rows");
  F2Matrix m;
  m.rows = static_cast<int>(arr.size());
  m.cols = static_cast<int>(arr[0].size());
  m.col.assign(m.cols, 0);
  for (int r = 0; r < m.rows; ++r) {
    const json& row = arr[r];
    if (!row.is_array() || static_cast<int>(row.size()) != m.cols)
      malformed(std::string(key) + " rows must be equal length");
    for (int c = 0; c < m.cols; ++c) {
      if (!row[c].is_number_integer() || (row[c] != 0 && row[c] != 1))
        malformed(std::string(key) + " entries must be 0 or 1");
      if (row[c] == 1) m.col[c] |= BitVec(1) << r;
    }
  }
  return m;
}

}  // namespace

json algebra_to_json(const F2Algebra& a) {
  json j;
  j["dim"] = a.dim;
  j["unit"] = bitvec_to(a.unit, a.dim);
  json mul = json::array();
  for (int i = 0; i < a.dim; ++i) {
    json row = json::array();
    for (int k = 0; k < a.dim; ++k) row.push_back(bitvec_to(a.mul[i][k], a.dim));
    mul.push_back(row);
  }
  j["mul"] = mul;
  return j;
}

F2Algebra algebra_from_json(const json& j) {
  F2Algebra a;
  const json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<int>() <= 0 || d.get<int>() > 30)
    malformed("algebra dim out of range");
  a.dim = d.get<int>();
  a.unit = bitvec_from(field(j, "unit"), "unit", a.dim);
  const json& mul = field(j, "mul");
  if (!mul.is_array() || static_cast<int>(mul.size()) != a.dim)
    malformed("mul must have dim rows");
  for (int i = 0; i < a.dim; ++i) {
    if (!mul[i].is_array() || static_cast<int>(mul[i].size()) != a.dim)
      malformed("mul rows must have dim entries");
    std::vector<BitVec> row;
    for (int k = 0; k < a.dim; ++k) row.push_back(bitvec_from(mul[i][k], "mul", a.dim));
    a.mul.push_back(std::move(row));
  }
  if (!a.valid()) malformed("algebra tables violate associativity or unit laws");
  return a;
}

json bimodule_to_json(const F2Bimodule& m) {
  json j;
  j["left"] = algebra_to_json(m.left);
  j["right"] = algebra_to_json(m.right);
  j["dim"] = m.dim;
  auto action = [&](const std::vector<std::vector<BitVec>>& table) {
    json arr = json::array();
    for (const auto& row : table) {
      json r = json::array();
      for (BitVec v : row) r.push_back(bitvec_to(v, m.dim));
      arr.push_back(r);
    }
    return arr;
  };
  j["lact"] = action(m.lact);
  j["ract"] = action(m.ract);
  return j;
}

F2Bimodule bimodule_from_json(const json& j) {
  F2Bimodule m;
  m.left = algebra_from_json(field(j, "left"));
  m.right = algebra_from_json(field(j, "right"));
  const json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<int>() <= 0 || d.get<int>() > 30)
    malformed("bimodule dim out of range");
  m.dim = d.get<int>();
  auto action = [&](const char* key, int alg_dim) {
    const json& arr = field(j, key);
    if (!arr.is_array() || static_cast<int>(arr.size()) != alg_dim)
      malformed(std::string(key) + " must have one row per algebra basis vector");
    std::vector<std::vector<BitVec>> out;
    for (const json& row : arr) {
      if (!row.is_array() || static_cast<int>(row.size()) != m.dim)
        malformed(std::string(key) + " rows must have dim entries");
      std::vector<BitVec> r;
      for (const json& cell : row) r.push_back(bitvec_from(cell, key, m.dim));
      out.push_back(std::move(r));
    }
    return out;
  };
  m.lact = action("lact", m.left.dim);
  m.ract = action("ract", m.right.dim);
  if (!m.valid()) malformed("bimodule tables violate the action laws");
  return m;
}

json equivariant_to_json(const EquivariantMorphism& t) {
  json j;
  j["source"] = bimodule_to_json(t.source);
  j["target"] = bimodule_to_json(t.target);
  j["f"] = matrix_to(t.f);
  j["phi"] = matrix_to(t.phi);
  j["g"] = matrix_to(t.g);
  return j;
}

EquivariantMorphism equivariant_from_json(const json& j) {
  EquivariantMorphism t;
  t.source = bimodule_from_json(field(j, "source"));
  t.target = bimodule_from_json(field(j, "target"));
  t.f = matrix_from(j, "f");
  t.phi = matrix_from(j, "phi");
  t.g = matrix_from(j, "g");
  return t;
}

json wrap_document(const std::string& kind, json body) {
  json j;
  j["format"] = kFormatTag;
  j["kind"] = kind;
  j["body"] = std::move(body);
  return j;
}

std::pair<std::string, json> unwrap_document(const json& j) {
  if (!j.is_object()) malformed("document must be a JSON object");
  if (!j.contains("format") || j.at("format") != kFormatTag)
    malformed("missing or unsupported format tag");
  if (!j.contains("kind") || !j.at("kind").is_string())
    malformed("missing document kind");
  const std::string kind = j.at("kind").get<std::string>();
  static const std::set<std::string> kinds{
      "double_category", "two_category", "decorated",  "functor",
      "transformation",  "findim",       "gamma_report"};
  if (!kinds.count(kind)) malformed("unknown document kind: " + kind);
  return {kind, field(j, "body")};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) malformed("input is not valid JSON");
  return j;
}

FinDoubleCategory load_double_category_document(const json& document) {
  auto [kind, body] = unwrap_document(document);
  if (kind == "double_category") return double_category_from_json(body);
  if (kind == "gamma_report")
    return double_category_from_json(field(body, "gamma"));
  malformed("expected a double_category or gamma_report document, got " + kind);
}

}  // namespace dblcat
