#include "jumpbot/units.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "jumpbot/errors.hpp"

namespace jumpbot::units {

namespace {

struct UnitEntry {
  const char* symbol;
  double factor;
};

constexpr double kDeg = std::numbers::pi / 180.0;

struct DimensionInfo {
  const char* si_symbol;
  std::vector<UnitEntry> entries;
};

const DimensionInfo& dimension_info(Dimension dim) {
  static const DimensionInfo tables[] = {
      {"", {{"", 1.0}}},
      {"m",
       {{"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"µm", 1e-6}, {"nm", 1e-9}}},
      {"m^2",
       {{"m^2", 1.0},
        {"m2", 1.0},
        {"cm^2", 1e-4},
        {"cm2", 1e-4},
        {"mm^2", 1e-6},
        {"mm2", 1e-6}}},
      {"kg", {{"kg", 1.0}, {"g", 1e-3}, {"mg", 1e-6}, {"ug", 1e-9}, {"µg", 1e-9}}},
      {"N", {{"N", 1.0}, {"kN", 1e3}, {"mN", 1e-3}, {"uN", 1e-6}, {"µN", 1e-6}}},
      {"N/m", {{"N/m", 1.0}, {"kN/m", 1e3}, {"N/mm", 1e3}, {"mN/m", 1e-3}}},
      {"Pa", {{"Pa", 1.0}, {"kPa", 1e3}, {"MPa", 1e6}, {"GPa", 1e9}}},
      {"kg/m^3",
       {{"kg/m^3", 1.0}, {"kg/m3", 1.0}, {"g/cm^3", 1e3}, {"g/cm3", 1e3}}},
      {"rad", {{"rad", 1.0}, {"mrad", 1e-3}, {"deg", kDeg}, {"°", kDeg}}},
      {"V", {{"V", 1.0}, {"kV", 1e3}, {"mV", 1e-3}, {"uV", 1e-6}, {"µV", 1e-6}}},
      {"ohm",
       {{"ohm", 1.0},
        {"Ohm", 1.0},
        {"ohms", 1.0},
        {"Ω", 1.0},
        {"kohm", 1e3},
        {"mohm", 1e-3}}},
      {"T", {{"T", 1.0}, {"mT", 1e-3}, {"uT", 1e-6}, {"µT", 1e-6}}},
      {"Hz", {{"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}}},
      {"m/s^2", {{"m/s^2", 1.0}, {"m/s2", 1.0}}},
      {"J",
       {{"J", 1.0}, {"kJ", 1e3}, {"mJ", 1e-3}, {"uJ", 1e-6}, {"µJ", 1e-6}, {"nJ", 1e-9}}},
      {"Nm",
       {{"Nm", 1.0},
        {"N*m", 1.0},
        {"N.m", 1.0},
        {"mNm", 1e-3},
        {"uNm", 1e-6},
        {"µNm", 1e-6},
        {"nNm", 1e-9}}},
      {"A", {{"A", 1.0}, {"mA", 1e-3}, {"uA", 1e-6}, {"µA", 1e-6}}},
      {"W", {{"W", 1.0}, {"kW", 1e3}, {"mW", 1e-3}, {"uW", 1e-6}, {"µW", 1e-6}}},
      {"m/s", {{"m/s", 1.0}, {"mps", 1.0}, {"mm/s", 1e-3}}},
      {"s", {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"µs", 1e-6}, {"min", 60.0}}},
  };
  return tables[static_cast<int>(dim)];
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_quantity(std::string_view text, Dimension dim) {
  std::string_view body = trim(text);
  if (body.empty()) {
    throw DomainError("empty quantity");
  }
  std::string buf(body);
  const char* begin = buf.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin) {
    throw DomainError("expected a number, got '" + buf + "'");
  }
  std::string_view unit = trim(std::string_view(end));
  const DimensionInfo& info = dimension_info(dim);
  if (unit.empty()) {
    // Bare numbers are taken as SI (or plain values for dimensionless).
    return value;
  }
  for (const UnitEntry& e : info.entries) {
    if (unit == e.symbol) {
      return value * e.factor;
    }
  }
  std::string msg = "unknown unit '" + std::string(unit) + "', accepted:";
  for (const UnitEntry& e : info.entries) {
    if (e.symbol[0] == '\0') continue;
    msg += ' ';
    msg += e.symbol;
  }
  throw DomainError(msg);
}

const char* si_unit(Dimension dim) { return dimension_info(dim).si_symbol; }

std::vector<std::string> accepted_units(Dimension dim) {
  std::vector<std::string> out;
  for (const UnitEntry& e : dimension_info(dim).entries) {
    if (e.symbol[0] != '\0') out.emplace_back(e.symbol);
  }
  return out;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

std::string format_quantity(double si_value, Dimension dim) {
  std::string out = format_double(si_value);
  const char* unit = si_unit(dim);
  if (unit[0] != '\0') {
    out += ' ';
    out += unit;
  }
  return out;
}

namespace {

std::string with_prefix(double value, const char* base_symbol) {
  struct Prefix {
    const char* text;
    double scale;
  };
  static const Prefix prefixes[] = {
      {"G", 1e9}, {"M", 1e6}, {"k", 1e3}, {"", 1.0}, {"m", 1e-3}, {"u", 1e-6}, {"n", 1e-9}};
  double mag = std::fabs(value);
  const Prefix* chosen = &prefixes[3];
  if (mag != 0.0 && std::isfinite(mag)) {
    for (const Prefix& p : prefixes) {
      if (mag >= p.scale) {
        chosen = &p;
        break;
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g %s%s", value / chosen->scale, chosen->text, base_symbol);
  return buf;
}

}  // namespace

std::string format_pretty(double si_value, Dimension dim) {
  char buf[64];
  switch (dim) {
    case Dimension::Dimensionless:
      std::snprintf(buf, sizeof(buf), "%.6g", si_value);
      return buf;
    case Dimension::Mass:
      return with_prefix(si_value * 1e3, "g");
    case Dimension::Angle:
      std::snprintf(buf, sizeof(buf), "%.6g deg", si_value / kDeg);
      return buf;
    case Dimension::Length:
      return with_prefix(si_value, "m");
    case Dimension::Force:
      return with_prefix(si_value, "N");
    case Dimension::Energy:
      return with_prefix(si_value, "J");
    case Dimension::Torque:
      return with_prefix(si_value, "Nm");
    case Dimension::Current:
      return with_prefix(si_value, "A");
    case Dimension::Power:
      return with_prefix(si_value, "W");
    case Dimension::Voltage:
      return with_prefix(si_value, "V");
    case Dimension::Pressure:
      return with_prefix(si_value, "Pa");
    case Dimension::Time:
      std::snprintf(buf, sizeof(buf), "%.6g s", si_value);
      return buf;
    default:
      std::snprintf(buf, sizeof(buf), "%.6g %s", si_value, si_unit(dim));
      return buf;
  }
}

}  // namespace jumpbot::units
