#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "brauer/gmodule.hpp"
#include "brauer/inertial.hpp"
#include "brauer/relations.hpp"

namespace brauer {

using json = nlohmann::json;

/// Malformed or inconsistent input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"rows", "cols", "entries"}; entries beyond 2^53 are decimal strings.
IntMatrix matrix_from_json(const json& j);
json to_json(const IntMatrix& m);

/// {"preset": name} or {"degree": n, "generators": [[perm], ...]}.
GroupPtr group_from_json(const json& j);

/// {"group", "terms": [{"subgroup_class", "coeff"}]}. When "group" is absent the given lattice is used;
/// when both are present they must agree.
BrauerRelation relation_from_json(const json& j, LatticePtr lattice = nullptr);
json to_json(const BrauerRelation& r);

/// {"group", "rank", "rels", "action": {element: matrix}}; missing elements follow from the Cayley table.
GModule module_from_json(const json& j, GroupPtr group = nullptr);
json to_json(const GModule& m);

/// {"group", "inertia_subgroup_class", "frobenius_element"}.
LocalGaloisDatum local_datum_from_json(const json& j, LatticePtr lattice = nullptr);

json read_json_file(const std::string& path);
/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
json json_argument(const std::string& text);

}  // namespace brauer
