#pragma once

#include <stdexcept>

#include <json.hpp>

#include "pathgpd/core.hpp"
#include "pathgpd/lifting.hpp"

// File formats: versioned JSON with explicit tables, matching the library's
// exact representations. Serialization uses ordered keys so identical values
// produce identical bytes.

namespace pathgpd {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// format tags: "groupoid/1", "functor/1", "group/1", "square/1"
json groupoid_to_json(const FiniteGroupoid& g);
// Structural bounds are enforced here (ids in range, compose triples
// composable); law checking is left to validate_groupoid.
GroupoidPtr groupoid_from_json(const json& j);

/// `base_dir` resolves string-valued domain/codomain entries as file paths;
/// object values are parsed inline.
json map_to_json(const GroupoidMap& f);
GroupoidMap map_from_json(const json& j, const std::string& base_dir = ".");

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json square_to_json(const LiftingProblem& p);
LiftingProblem square_from_json(const json& j, const std::string& base_dir = ".");

json natiso_to_json(const NaturalIso& h);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace pathgpd
