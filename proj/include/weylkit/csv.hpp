#pragma once

#include "weylkit/grid_function.hpp"

#include <string>

namespace weylkit {

/**
 * CSV exchange format for grid functions.  First column is t, remaining
 * columns are components, header "t,value" or "t,value,value2,...".  Values
 * are written with %.17g so a write/read round trip is bit exact.  The
 * reader checks grid uniformity and infers the domain: negative first
 * sample time means full-line data.
 */
void write_csv(const std::string& path, const GridFunction& f);
GridFunction read_csv(const std::string& path);

} // namespace weylkit
