#pragma once

#include <string>

#include <json.hpp>

#include "ktoric/fan.hpp"
#include "ktoric/gkm.hpp"
#include "ktoric/laurent.hpp"
#include "ktoric/piecewise.hpp"

namespace ktoric {

using Json = nlohmann::ordered_json;

/// Canonical serialization: object keys in fixed order, Laurent terms in
/// exponent lexicographic order, so outputs are diffable golden files.

Json int_to_json(const Int& v);

Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j, int num_vars);

Json piecewise_to_json(const Fan& fan, const PiecewiseElement& elt);
PiecewiseElement piecewise_from_json(const Fan& fan, const Json& j);

Json gkm_graph_to_json(const GkmGraph& graph);
GkmGraph gkm_graph_from_json(const Json& j);

Json gkm_element_to_json(const GkmElement& elt);
GkmElement gkm_element_from_json(const Json& j, int rank);

struct MalformedInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json load_json_file(const std::string& path);

}  // namespace ktoric
