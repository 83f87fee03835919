#ifndef CONFSPACE_JSON_IO_HPP
#define CONFSPACE_JSON_IO_HPP

#include "confspace/configuration.hpp"
#include "confspace/covering.hpp"
#include "confspace/homotopy.hpp"
#include "confspace/perm_group.hpp"
#include "confspace/vieta.hpp"

#include <json.hpp>

#include <string>

namespace confspace::io {

using Json = nlohmann::json;

// Every parser throws ParseError naming the offending field.

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& value);

/// [1, 0, 2]
Permutation permutation_from_json(const Json& j, const std::string& field = "permutation");
Json to_json(const Permutation& p);

/// {"n": 3, "generators": [[1,0,2],[0,2,1]]}
PermGroup group_from_json(const Json& j);
Json group_to_json(const PermGroup& group);

/// {"n": 2, "d": 3, "points": [[0,0,0],[1,0,0]]}
Configuration configuration_from_json(const Json& j, const std::string& field = "configuration");
Json to_json(const Configuration& x);

/// {"closed": true, "samples": [Configuration, ...]}
PathSamples path_from_json(const Json& j);
Json to_json(const PathSamples& path);

/// The lifted path with "deck" added (null for an open path).
Json to_json(const LiftResult& lift);

Json to_json(const Polyline& polyline);

/// {"initial": ..., "events": [{"kind", "indices", "points", "vertex_count",
///  "clearance", "polyline"}], "final": ..., "collapses": k}
Json to_json(const ReductionTrace& trace);

/// [[re, im], ...]
ComplexTuple complex_tuple_from_json(const Json& j, const std::string& field = "values");
Json to_json(const ComplexTuple& values);

} // namespace confspace::io

#endif // CONFSPACE_JSON_IO_HPP
