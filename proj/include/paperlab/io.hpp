#ifndef PAPERLAB_IO_HPP
#define PAPERLAB_IO_HPP

#include <json.hpp>
#include <string>

#include "paperlab/fincat.hpp"
#include "paperlab/sset.hpp"

namespace paperlab {

/// `.sset.json`:
///   { "simplices": { "<dim>": [names...] },
///     "faces": { "<name>": [ [[surjection-values...], "<base-name>"], ... ] } }
/// Each face of a nondegenerate d-simplex is an Eilenberg-Zilber normal form
/// (surjective degeneracy values, nondegenerate base); the base dimension is
/// the last surjection value.  Names must be unique within a dimension, and
/// names of simplices of dimension >= 1 must be globally unique (they key the
/// "faces" object).  Round trips are lossless.
nlohmann::json sset_to_json(const SSet& s);
SSet sset_from_json(const nlohmann::json& j);

/// `.fincat.json`: the extensional structure verbatim:
///   { "objects": [...], "morphisms": [...], "src": [...], "dst": [...],
///     "identity": [...], "table": [[...]] }   (table[g][f] = g o f, -1 if
/// not composable).  Round trips are lossless.
nlohmann::json fincat_to_json(const FinCat& c);
FinCat fincat_from_json(const nlohmann::json& j);

/// `.catpres.json`: graph plus path relations:
///   { "vertices": [...], "edges": [{"name","src","dst"}],
///     "relations": [{"lhs": path, "rhs": path}], "vertex_glue": [[a,b]] }
/// with path = {"start": vertex, "edges": [edge-indices...]} in diagrammatic
/// order.  Round trips are lossless.
nlohmann::json presentation_to_json(const CatPresentation& p);
CatPresentation presentation_from_json(const nlohmann::json& j);

void save_json(const nlohmann::json& j, const std::string& path);
nlohmann::json load_json(const std::string& path);

}  // namespace paperlab

#endif
