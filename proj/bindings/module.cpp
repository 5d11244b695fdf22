// Python bindings: the main document-level operations work on dblcat/1
// JSON strings; the finite-field layer is exposed structurally.
#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "dblcat/generators.hpp"
#include "dblcat/json_io.hpp"

namespace py = pybind11;
using namespace dblcat;

namespace {

json parse_document(const std::string& text) { return parse_text(text); }

py::dict report_to_dict(const ValidationReport& report) {
  py::dict out;
  out["ok"] = report.ok;
  py::list violations;
  for (const Violation& v : report.violations) {
    py::dict item;
    item["axiom"] = v.axiom;
    item["ids"] = v.ids;
    item["expected"] = v.expected;
    item["found"] = v.found;
    violations.append(item);
  }
  out["violations"] = violations;
  return out;
}

ValidationReport validate_document_impl(const std::string& text) {
  json document = parse_document(text);
  auto [kind, body] = unwrap_document(document);
  if (kind == "double_category")
    return validate_double_category(double_category_from_json(body));
  if (kind == "two_category")
    return validate_two_category(two_category_from_json(body));
  if (kind == "decorated") return validate_decorated(decorated_from_json(body));
  if (kind == "functor") return validate_double_functor(functor_from_json(body));
  if (kind == "transformation")
    return validate_transformation(transformation_from_json(body));
  if (kind == "gamma_report") {
    if (!body.contains("gamma"))
      throw MalformedPresentation("gamma_report document lacks a gamma section");
    return validate_double_category(double_category_from_json(body.at("gamma")));
  }
  // findim documents hold a single equivariant morphism
  EquivariantMorphism t = equivariant_from_json(body);
  ValidationReport report;
  if (!is_equivariant(t))
    report.add("equivariance", {}, "phi(a x b) = f(a) phi(x) g(b)", "violated");
  return report;
}

FinDoubleCategory dc_from_text(const std::string& text) {
  return load_double_category_document(parse_document(text));
}

F2Matrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
  F2Matrix m;
  m.rows = static_cast<int>(rows.size());
  m.cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  m.col.assign(m.cols, 0);
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols)
      throw DimensionMismatch("matrix rows must have equal length");
    for (int c = 0; c < m.cols; ++c)
      if (rows[r][c]) m.col[c] |= BitVec(1) << r;
  }
  return m;
}

std::vector<std::vector<int>> matrix_to_rows(const F2Matrix& m) {
  std::vector<std::vector<int>> rows(m.rows, std::vector<int>(m.cols, 0));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) rows[r][c] = (m.col[c] >> r) & 1;
  return rows;
}

BitVec vec_from(const std::vector<int>& bits) {
  BitVec v = 0;
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) v |= BitVec(1) << i;
  return v;
}

std::vector<std::vector<BitVec>> table_from(
    const std::vector<std::vector<std::vector<int>>>& t) {
  std::vector<std::vector<BitVec>> out;
  for (const auto& row : t) {
    std::vector<BitVec> r;
    for (const auto& cell : row) r.push_back(vec_from(cell));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite strict double category toolkit";

  py::register_exception<MalformedPresentation>(m, "MalformedPresentation");
  py::register_exception<UnknownIdentifier>(m, "UnknownIdentifier");
  py::register_exception<InvalidInput>(m, "InvalidInput");
  py::register_exception<NotLengthOne>(m, "NotLengthOne");
  py::register_exception<ImageEscape>(m, "ImageEscape");
  py::register_exception<LevelOutOfRange>(m, "LevelOutOfRange");
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch");
  py::register_exception<MiddleMismatch>(m, "MiddleMismatch");
  py::register_exception<InconsistentTagging>(m, "InconsistentTagging");

  m.def("validate_document", [](const std::string& text) {
    return report_to_dict(validate_document_impl(text));
  }, py::arg("text"), "Validate any dblcat/1 document, returning {ok, violations}.");

  m.def("gamma_summary", [](const std::string& text) {
    FinDoubleCategory c = dc_from_text(text);
    GammaAnalysis a = vertical_filtration(c);
    py::dict out;
    out["gg"] = a.gamma.squares == c.squares;
    out["squares"] = c.squares.size();
    out["gamma_squares"] = a.gamma.squares.size();
    out["stable_at"] = a.stable_at;
    return out;
  }, py::arg("text"));

  m.def("gamma_report", [](const std::string& text, bool lengths, bool witnesses) {
    FinDoubleCategory c = dc_from_text(text);
    GammaAnalysis a = vertical_filtration(c);
    return canonical_dump(
        wrap_document("gamma_report", gamma_report_to_json(c, a, lengths, witnesses)));
  }, py::arg("text"), py::arg("lengths") = true, py::arg("witnesses") = false);

  m.def("hstar", [](const std::string& text) {
    DecoratedBicategory d = decorated_horizontalization(dc_from_text(text));
    return canonical_dump(wrap_document("decorated", decorated_to_json(d)));
  }, py::arg("text"));

  m.def("horizontalization", [](const std::string& text) {
    Fin2Category b = horizontalization(dc_from_text(text));
    return canonical_dump(wrap_document("two_category", two_category_to_json(b)));
  }, py::arg("text"));

  m.def("trivial_double", [](const std::string& two_cat_text) {
    auto [kind, body] = unwrap_document(parse_document(two_cat_text));
    if (kind != "two_category")
      throw MalformedPresentation("trivial_double expects a two_category document");
    FinDoubleCategory c = trivial_double(two_category_from_json(body));
    return canonical_dump(wrap_document("double_category", double_category_to_json(c)));
  }, py::arg("text"));

  m.def("is_globular", [](const std::string& text, const std::string& square) {
    FinDoubleCategory c = dc_from_text(text);
    return is_globular(c, square);
  }, py::arg("text"), py::arg("square"));

  m.def("is_horizontal_endomorphism",
        [](const std::string& text, const std::string& square) {
    FinDoubleCategory c = dc_from_text(text);
    return is_horizontal_endomorphism(c, square);
  }, py::arg("text"), py::arg("square"));

  m.def("boundary", [](const std::string& text, const std::string& square) {
    FinDoubleCategory c = dc_from_text(text);
    SquareBoundary b = boundary(c, square);
    py::dict out;
    out["dom"] = b.dom;
    out["cod"] = b.cod;
    out["vsrc"] = b.vsrc;
    out["vtgt"] = b.vtgt;
    return out;
  }, py::arg("text"), py::arg("square"));

  m.def("vertical_length", [](const std::string& text, const std::string& square) {
    FinDoubleCategory c = dc_from_text(text);
    auto n = vertical_length(c, square);
    return n ? py::cast(*n) : py::none().cast<py::object>();
  }, py::arg("text"), py::arg("square"));

  m.def("length_one_decomposition", [](const std::string& text, const std::string& square) {
    FinDoubleCategory c = dc_from_text(text);
    return length_one_decomposition(c, square);
  }, py::arg("text"), py::arg("square"));

  m.def("check_suite", [](const std::string& text, const std::string& suite) {
    FinDoubleCategory c = dc_from_text(text);
    ValidationReport report;
    if (suite == "axioms") report = validate_double_category(c);
    else if (suite == "prop44") report = check_prop_4_4(c);
    else if (suite == "cor45") report = check_cor_4_5(c);
    else if (suite == "lemma46") report = check_lemma_4_6(c);
    else if (suite == "lemma51")
      report = check_filtration_preservation(identity_functor(c));
    else if (suite == "prop36")
      report = check_epsilon_naturality(identity_functor(c));
    else throw MalformedPresentation("unknown suite: " + suite);
    return report_to_dict(report);
  }, py::arg("text"), py::arg("suite"));

  m.def("gen_sq", [](const std::string& poset) {
    FinDoubleCategory c = gen_commuting_squares(gen_poset_category(parse_poset_spec(poset)));
    return canonical_dump(wrap_document("double_category", double_category_to_json(c)));
  }, py::arg("poset"));

  m.def("gen_quintet", [](const std::string& two_cat_text) {
    auto [kind, body] = unwrap_document(parse_document(two_cat_text));
    if (kind != "two_category")
      throw MalformedPresentation("gen_quintet expects a two_category document");
    FinDoubleCategory c = gen_quintet(two_category_from_json(body));
    return canonical_dump(wrap_document("double_category", double_category_to_json(c)));
  }, py::arg("text"));

  m.def("gen_product", [](const std::string& a, const std::string& b) {
    FinDoubleCategory c = gen_product(dc_from_text(a), dc_from_text(b));
    return canonical_dump(wrap_document("double_category", double_category_to_json(c)));
  }, py::arg("a"), py::arg("b"));

  py::class_<F2Algebra>(m, "F2Algebra")
      .def(py::init([](int dim, const std::vector<std::vector<std::vector<int>>>& mul,
                       const std::vector<int>& unit) {
             F2Algebra a;
             a.dim = dim;
             a.mul = table_from(mul);
             a.unit = vec_from(unit);
             if (!a.valid()) throw InvalidInput("algebra tables are not valid");
             return a;
           }),
           py::arg("dim"), py::arg("mul"), py::arg("unit"))
      .def_readonly("dim", &F2Algebra::dim)
      .def("valid", &F2Algebra::valid)
      .def(py::self == py::self);

  py::class_<F2Bimodule>(m, "F2Bimodule")
      .def(py::init([](const F2Algebra& left, const F2Algebra& right, int dim,
                       const std::vector<std::vector<std::vector<int>>>& lact,
                       const std::vector<std::vector<std::vector<int>>>& ract) {
             F2Bimodule b;
             b.left = left;
             b.right = right;
             b.dim = dim;
             b.lact = table_from(lact);
             b.ract = table_from(ract);
             if (!b.valid()) throw InvalidInput("bimodule tables are not valid");
             return b;
           }),
           py::arg("left"), py::arg("right"), py::arg("dim"), py::arg("lact"),
           py::arg("ract"))
      .def_readonly("dim", &F2Bimodule::dim)
      .def("valid", &F2Bimodule::valid)
      .def(py::self == py::self);

  py::class_<EquivariantMorphism>(m, "EquivariantMorphism")
      .def(py::init([](const F2Bimodule& source, const F2Bimodule& target,
                       const std::vector<std::vector<int>>& f,
                       const std::vector<std::vector<int>>& phi,
                       const std::vector<std::vector<int>>& g) {
             EquivariantMorphism t;
             t.source = source;
             t.target = target;
             t.f = matrix_from_rows(f);
             t.phi = matrix_from_rows(phi);
             t.g = matrix_from_rows(g);
             return t;
           }),
           py::arg("source"), py::arg("target"), py::arg("f"), py::arg("phi"),
           py::arg("g"))
      .def_property_readonly("phi", [](const EquivariantMorphism& t) {
        return matrix_to_rows(t.phi);
      })
      .def(py::self == py::self);

  m.def("algebra_as_bimodule", &algebra_as_bimodule, py::arg("algebra"));
  m.def("identity_morphism", &identity_morphism, py::arg("bimodule"));
  m.def("hid_morphism", [](const F2Algebra& a, const F2Algebra& b,
                           const std::vector<std::vector<int>>& f) {
    return hid_morphism(a, b, matrix_from_rows(f));
  }, py::arg("a"), py::arg("b"), py::arg("f"));
  m.def("is_equivariant", &is_equivariant, py::arg("t"));
  m.def("is_two_subcyclic", &is_2_subcyclic, py::arg("t"));
  m.def("tensor_bimodules", &tensor_bimodules, py::arg("m"), py::arg("m2"));
  m.def("tensor_morphisms", &tensor_morphisms, py::arg("t"), py::arg("t2"));
}
