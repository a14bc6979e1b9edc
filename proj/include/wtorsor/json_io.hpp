#pragma once

#include <string>

#include <json.hpp>

#include "wtorsor/knot.hpp"
#include "wtorsor/lens.hpp"
#include "wtorsor/msinv.hpp"

namespace wtorsor {

// All values serialize as exact strings, never floats. ordered_json keeps
// key order deterministic so repeated runs are byte-identical.
using json = nlohmann::ordered_json;

json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const json& j);

json weighted_group_to_json(const WeightedGroup& w);
/// Requires "group" to already be an invariant-factor chain, so the weight
/// indexing in the file is unambiguous.
WeightedGroup weighted_group_from_json(const json& j);

json dual_weights_to_json(const DualWeights& d);
DualWeights dual_weights_from_json(const json& j);

json ms_multiset_to_json(const MSMultiset& ms);

json lens_to_json(const LensSpace& l);
json classification_to_json(long p_max, const std::vector<std::vector<LensSpace>>& classes);

json alexander_to_json(const AlexanderPolynomial& delta);

std::string weighted_group_to_csv(const WeightedGroup& w);
std::string dual_weights_to_csv(const DualWeights& d);

}  // namespace wtorsor
