#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "clusterkit/morphism.hpp"
#include "clusterkit/mutation_class.hpp"
#include "clusterkit/pairs.hpp"
#include "clusterkit/quiver.hpp"
#include "clusterkit/seed.hpp"

namespace clusterkit {

using Json = nlohmann::json;

/// Throws ParseError / InvalidSeed on malformed input.
Seed seed_from_json(const Json& j);
Seed parse_seed(const std::string& text);
/// Exact single-line form: exchangeable, frozen, matrix, then values only
/// for positions that differ from their own variable.
std::string seed_to_json(const Seed& seed);
Json seed_json_value(const Seed& seed);

/// Loads a file path given in a morphism document.
using DocumentLoader = std::function<Json(const std::string& path)>;

MorphismSpec morphism_from_json(const Json& j, const DocumentLoader& load = {});
Json morphism_to_json(const MorphismSpec& spec);

Json verdict_to_json(const MorphismSpec& spec, const MorphismVerdict& v);
Json ideal_to_json(const MorphismSpec& spec, const IdealVerdict& v);
Json injection_to_json(const InjectionReport& r);
Json decomposition_to_json(const SeedDecomposition& d);
Json pairs_to_json(const std::vector<ClassEntry>& entries);
Json tensor_to_json(const TensorReport& r);
Json variables_to_json(const Seed& root, const ClusterVariables& vars);
Json exchange_graph_to_json(const MutationClass& cls);
Json quiver_to_json(const IceQuiver& q);

}  // namespace clusterkit
