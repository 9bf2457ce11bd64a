#pragma once

#include <string>

#include "json.hpp"
#include "rootspace/faces.hpp"
#include "rootspace/liewords.hpp"
#include "rootspace/polyhedron.hpp"
#include "rootspace/psp.hpp"
#include "rootspace/weights.hpp"

namespace rootspace {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "rootspace/1";

/// {"schema": "rootspace/1", "command": ...}.
Json envelope(const std::string& command);

Json to_json(const Rational& r);
Json to_json(const RationalVec& v);
Json to_json(const Root& r);
Json to_json(const std::vector<Root>& rs);
Json to_json(const Facet& f);
Json to_json(const Polyhedron& p);
Json to_json(const CartanData& c);
Json to_json(const PspDecomposition& d);
Json weight_json(const CartanData& c, const HighestWeight& lambda, const Depth& d);
Json to_json(const CartanData& c, const WeightSetWindow& w);
Json to_json(const AmbientSet& X, std::uint64_t Y);
Json to_json(const AmbientSet& X, const ViolationWitness& w);
Json to_json(const LieWordWitness& w);
Json to_json(const AffineReport& r);
Json labels_json(const CartanData& c, NodeMask m);

/// Points as a list of rational vectors: [[..], ..] with entries numbers or "p/q" strings.
std::vector<RationalVec> points_from_json(const Json& j);
Rational rational_from_json(const Json& j);

/// Two-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace rootspace
