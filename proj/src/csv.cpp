#include "cavityrad/csv.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace cavityrad::csv {

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (result.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buffer, result.ptr);
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<Row>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i != 0) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out << ',';
      if (row[i]) out << format_double(*row[i]);
    }
    out << '\n';
  }
}

void write_modes(std::ostream& out, const ModeList& modes) {
  out << "omega_rad_s,multiplicity\n";
  for (const auto& m : modes.entries) {
    out << format_double(m.omega) << ',' << m.multiplicity << '\n';
  }
}

void write_binned(std::ostream& out, const BinnedSpectrum& spectrum) {
  out << "omega_left_rad_s,u_J_s_m3\n";
  for (const auto& bin : spectrum.bins) {
    out << format_double(bin.omega_left) << ',' << format_double(bin.u) << '\n';
  }
}

}  // namespace cavityrad::csv
