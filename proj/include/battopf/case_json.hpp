#pragma once

#include <string>

#include "battopf/grid_case.hpp"

namespace battopf {

// Internal JSON report form of a complete case. Round-trips exactly:
// case_from_json(case_to_json(c)) is field-equal to c.
std::string case_to_json(const GridCase& c);
GridCase case_from_json(const std::string& text);

}  // namespace battopf
