#pragma once

#include <iosfwd>
#include <string>

#include "battopf/grid_case.hpp"

namespace battopf {

// Parses the MATPOWER fields the DC model needs (baseMVA, bus, branch, gen,
// gencost). AC-only data is read and discarded; anything surprising lands in
// GridCase::warnings. The result covers a single base period; the scenario
// document completes it.
GridCase parse_matpower_case(std::istream& text);
GridCase parse_matpower_case(const std::string& text);
GridCase parse_matpower_file(const std::string& path);

}  // namespace battopf
