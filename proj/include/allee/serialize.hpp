#pragma once

#include "allee/elimination.hpp"
#include "allee/multipoly.hpp"

#include "json.hpp"

namespace allee {

using json = nlohmann::json;

/// {"vars": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}
/// with vars the occurring variables in canonical order.
json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const json& j);

json to_json(const EliminationTrace& t);

}  // namespace allee
