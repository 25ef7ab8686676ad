#pragma once

#include <string>

#include <json.hpp>

#include "crit2/group.hpp"

namespace crit2 {

// Group files are one JSON object: {"name": str, "format": F, ...payload}.
//
// F = "perm":      {"degree": d, "generators": [[1-based images] ...]}
// F = "cayley":    {"table": [[ids] ...]}, ids 0..n-1, id 0 the identity
// F = "named":     {"family": str, "params": [ints]}; families as in named.hpp
// F = "extension": {"base": <group object>, "steps": [{"index": m,
//                   "phi": [[word] ...], "power": [word]} ...]}; words are
//                   1-based signed generator indices of the layer below
Group group_from_json(const nlohmann::json& j, const Caps& caps = default_caps());
Group read_group_file(const std::string& path, const Caps& caps = default_caps());

// Serializes the construction recipe when provenance carries one (perm,
// named, extension); otherwise emits the full multiplication table. Reading
// the result reproduces the identical group.
nlohmann::json group_to_json(const Group& g);
void write_group_file(const Group& g, const std::string& path);

}  // namespace crit2
