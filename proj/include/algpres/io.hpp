#pragma once

#include "algpres/gabriel.hpp"

#include "json.hpp"

// JSON for fields, algebras, quivers, presentations and reports. Scalars are
// strings in the field's own syntax so that values survive any parser.
namespace algpres::io {

using Json = nlohmann::ordered_json;

Json field_to_json(FieldRef f);
FieldRef field_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(FieldRef f, const Json& j, std::size_t expected);

/// {"field", "labels", "one", "products": [[i, j, [[k, "c"], ...]], ...]}
Json algebra_to_json(const FDAlgebra& a);
FDAlgebra algebra_from_json(const Json& j);

/// An algebra together with optional splitting hints: "radical",
/// "lifted_subalgebra" (A coordinates) and "idempotents" (A/r coordinates).
struct AlgebraSpec {
    std::string name;
    FDAlgebra algebra;
    SplittingInput hints;
};
AlgebraSpec spec_from_json(const Json& j);
Json spec_to_json(const AlgebraSpec& s);

/// {"vertices": [...], "arrows": [[id, source, target, label], ...]}
Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json report_to_json(const Report& r);

Json presentation_to_json(const Presentation& p);
/// Throws ParseError on malformed input; the stored report is ignored.
Presentation presentation_from_json(const Json& j);

Json read_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

} // namespace algpres::io
