#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cavityrad/binned.hpp"
#include "cavityrad/modes.hpp"

namespace cavityrad::csv {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// One table row; an empty optional renders as an empty field.
using Row = std::vector<std::optional<double>>;

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<Row>& rows);

/// `omega_rad_s,multiplicity`
void write_modes(std::ostream& out, const ModeList& modes);

/// `omega_left_rad_s,u_J_s_m3`
void write_binned(std::ostream& out, const BinnedSpectrum& spectrum);

}  // namespace cavityrad::csv
