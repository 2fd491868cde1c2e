#pragma once

#include "ars3d/locus.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace ars3d {

/// %.17g, independent of the global locale.
std::string csv_number(double x);

/// Quotes a field when it holds a comma, quote or line break.
std::string csv_field(const std::string& s);

/// Writes one record terminated by a bare LF.
void csv_row(std::ostream& out, const std::vector<std::string>& fields);

/// t,x,y,F-residual rows, plus a plane column when the samples come from a plane stack.
void write_locus_csv(std::ostream& out, const std::vector<LocusSample>& samples, bool plane_stack);

}  // namespace ars3d
