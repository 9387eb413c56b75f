#pragma once

#include <iosfwd>
#include <string>

#include "battopf/grid_case.hpp"

namespace battopf {

// Attaches horizon, renewables, batteries, the uncertainty model and
// per-period scaling to a base network, then checks every GridCase invariant.
GridCase parse_scenario_spec(std::istream& text, const GridCase& base);
GridCase parse_scenario_spec(const std::string& text, const GridCase& base);
GridCase parse_scenario_file(const std::string& path, const GridCase& base);

}  // namespace battopf
