#pragma once

// Independent feasibility checker used by the verification suites. Decides
// whether judgment values extend to a measure by enumerating candidate
// supports and solving each square subsystem by Gaussian elimination; it
// shares no code with the simplex path it cross-checks.

#include <cstdint>
#include <vector>

#include "credo/agenda.hpp"
#include "credo/rational.hpp"

namespace credo::oracle {

// A nonempty bounded polytope {w >= 0, Aw = b} has a vertex, and a vertex
// is the unique solution on its linearly independent support, so scanning
// every support is a complete feasibility test. Limited to small languages.
bool feasible_by_enumeration(const Agenda& agenda, const std::vector<Rat>& values);

}  // namespace credo::oracle
