#pragma once

#include <json.hpp>

#include "braidkit/action.hpp"
#include "braidkit/braid.hpp"
#include "braidkit/laurent.hpp"
#include "braidkit/loop.hpp"
#include "braidkit/matrix.hpp"
#include "braidkit/trajectory.hpp"

namespace braidkit {

using json = nlohmann::json;

// Integers that do not fit in 64 bits are written as decimal strings;
// readers accept either form.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json to_json(const Braid& b);
json to_json(const AnnularBraid& b);
json to_json(const Loop& l);
json to_json(const IntMatrix& m);
json to_json(const LaurentPoly& p);
json to_json(const TrajectorySet& ts);
json to_json(const DataBraid& db);
json to_json(const CycleResult& c);

/// Reads {"n", "word", "annular"}.  Annular input is converted to an
/// ordinary braid.
Braid braid_from_json(const json& j);
Loop loop_from_json(const json& j);
IntMatrix matrix_from_json(const json& j);
LaurentPoly laurent_from_json(const json& j);
TrajectorySet trajectories_from_json(const json& j);
DataBraid databraid_from_json(const json& j);

}  // namespace braidkit
