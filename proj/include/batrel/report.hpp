#pragma once

#include <ostream>
#include <string>

#include "batrel/appbat.hpp"

namespace batrel {

/// Shortest text that parses back to exactly `value`.
std::string format_round_trip(double value);

/// Fixed-point with the given number of decimals.
std::string format_fixed(double value, int decimals = 6);

/// CSV: header `zeta,total,connected,mass,elapsed_s`, one row per evaluated
/// level in evaluation order, then the trailer `R,<value>,<termination>`.
/// Probabilities at full round-trip precision.
void write_report_csv(std::ostream& out, const ReliabilityReport& report);

/// Aligned per-level table with 6-decimal probabilities, then the bound.
void write_report_table(std::ostream& out, const ReliabilityReport& report);

}  // namespace batrel
