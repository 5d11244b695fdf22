// The dblcat/1 JSON interchange format: one envelope
// {"format": "dblcat/1", "kind": ..., "body": ...} per document, canonical
// serialization with sorted keys, sorted token arrays and sorted
// composition triples.
#pragma once

#include "dblcat/findim.hpp"
#include "dblcat/functors.hpp"
#include "dblcat/gamma.hpp"
#include "dblcat/two_category.hpp"

#include "json.hpp"

namespace dblcat {

using json = nlohmann::json;

inline constexpr const char* kFormatTag = "dblcat/1";

json category_to_json(const FinCategory& k);
FinCategory category_from_json(const json& j);

json double_category_to_json(const FinDoubleCategory& c);
FinDoubleCategory double_category_from_json(const json& j);

json two_category_to_json(const Fin2Category& b);
Fin2Category two_category_from_json(const json& j);

json decorated_to_json(const DecoratedBicategory& d);
DecoratedBicategory decorated_from_json(const json& j);

json functor_to_json(const DoubleFunctor& f);
DoubleFunctor functor_from_json(const json& j);

json transformation_to_json(const DoubleNaturalTransformation& t);
DoubleNaturalTransformation transformation_from_json(const json& j);

json gamma_report_to_json(const FinDoubleCategory& c, const GammaAnalysis& a,
                          bool lengths, bool witnesses);

json algebra_to_json(const F2Algebra& a);
F2Algebra algebra_from_json(const json& j);
json bimodule_to_json(const F2Bimodule& m);
F2Bimodule bimodule_from_json(const json& j);
json equivariant_to_json(const EquivariantMorphism& t);
EquivariantMorphism equivariant_from_json(const json& j);

json wrap_document(const std::string& kind, json body);
// Returns (kind, body); throws MalformedPresentation unless the envelope
// carries the dblcat/1 format tag and a known kind.
std::pair<std::string, json> unwrap_document(const json& j);

// Sorted keys, two-space indent, trailing newline; byte-stable for equal
// values.
std::string canonical_dump(const json& j);

// Parses text, throws MalformedPresentation on any syntax error.
json parse_text(const std::string& text);

// Accepts a double_category document, or a gamma_report document (its
// embedded gamma is taken).
FinDoubleCategory load_double_category_document(const json& document);

}  // namespace dblcat
