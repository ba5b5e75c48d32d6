#pragma once

// Unit-suffixed quantity parsing and formatting. Config files and CLI
// arguments carry explicit unit suffixes ("7.5 mN", "4 deg", "13 mg");
// everything behind the ingestion boundary is SI base units.

#include <string>
#include <string_view>
#include <vector>

namespace jumpbot::units {

enum class Dimension {
  Dimensionless,
  Length,
  Area,
  Mass,
  Force,
  Stiffness,
  Pressure,
  Density,
  Angle,
  Voltage,
  Resistance,
  MagneticField,
  Frequency,
  Acceleration,
  Energy,
  Torque,
  Current,
  Power,
  Velocity,
  Time,
};

/// Parses "number [unit]" into an SI value. The unit token may be attached
/// ("4mm") or space-separated ("4 mm"). A bare number is taken as SI.
/// Throws DomainError with a descriptive message on failure.
double parse_quantity(std::string_view text, Dimension dim);

/// SI unit symbol used when serializing (e.g. "N/m", "rad", "kg").
const char* si_unit(Dimension dim);

/// Unit symbols accepted for a dimension, for diagnostics.
std::vector<std::string> accepted_units(Dimension dim);

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

/// "value unit" in SI units, exact round-trip.
std::string format_quantity(double si_value, Dimension dim);

/// Human-oriented formatting with an engineering prefix where it helps
/// ("11.25 uJ", "15 uNm", "8.099 mA"). Display only; not round-trip safe.
std::string format_pretty(double si_value, Dimension dim);

}  // namespace jumpbot::units
