#ifndef SPINOR_FORGE_SERIALIZE_HPP
#define SPINOR_FORGE_SERIALIZE_HPP

#include "spinor_forge/structure.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace spinor_forge {

using nlohmann::json;

json to_json(const Rational& q);
json to_json(const SpinorVector& v);
json to_json(const ScaledSpinor& v);
json to_json(const TwoForm& w);
json to_json(const EtaTable& table);
json to_json(const AmbientElement& x);
json to_json(const LieSubalgebra& algebra);
json to_json(const PurityReport& report);
json to_json(const ReducingReport& report);

/// All readers throw Error(ParseError) on malformed input and
/// Error(ShapeMismatch) when the data contradicts the declared shape.
Rational rational_from_json(const json& j);
SpinorVector spinor_vector_from_json(const json& j);
ScaledSpinor scaled_spinor_from_json(const json& j);
TwoForm two_form_from_json(const json& j);

/// Parses text as JSON (ParseError on syntax errors).
json parse_json(const std::string& text);
json read_json_file(const std::string& path);

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_SERIALIZE_HPP
