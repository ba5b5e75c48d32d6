#include "jumpbot/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "jumpbot/errors.hpp"
#include "jumpbot/units.hpp"

namespace jumpbot {

namespace {

using units::Dimension;

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

struct ParsedText {
  // (section, key) -> entry; mass items kept in file order separately.
  std::map<std::string, std::map<std::string, Entry>> sections;
  std::vector<std::pair<std::string, Entry>> mass_items;
};

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')) {
      return false;
    }
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

const char* const kKnownSections[] = {
    "spring", "spring.material", "release",   "ratchet", "actuator",
    "actuator.coil", "body",     "body.mass", "drive",
};

ParsedText tokenize(std::string_view text, std::string_view source_name) {
  ParsedText parsed;
  std::string section;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = raw;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(std::string(source_name) + ":" + std::to_string(line_no) +
                              ": unterminated section header",
                          line_no, std::string(line));
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      const bool known = std::any_of(std::begin(kKnownSections), std::end(kKnownSections),
                                     [&](const char* s) { return section == s; });
      if (!known) {
        throw ConfigError(std::string(source_name) + ":" + std::to_string(line_no) +
                              ": unknown section [" + section + "]",
                          line_no, section);
      }
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(source_name) + ":" + std::to_string(line_no) +
                            ": expected 'key = value'",
                        line_no, std::string(line));
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (!valid_key(key)) {
      throw ConfigError(std::string(source_name) + ":" + std::to_string(line_no) +
                            ": malformed key '" + key + "'",
                        line_no, key);
    }
    if (section.empty()) {
      throw ConfigError(std::string(source_name) + ":" + std::to_string(line_no) +
                            ": key '" + key + "' before any [section]",
                        line_no, key);
    }
    if (section == "body.mass") {
      parsed.mass_items.emplace_back(key, Entry{value, line_no, true});
      continue;
    }
    auto [it, inserted] = parsed.sections[section].emplace(key, Entry{value, line_no, false});
    if (!inserted) {
      throw ConfigError(std::string(source_name) + ":" + std::to_string(line_no) +
                            ": duplicate key '" + section + "." + key + "'",
                        line_no, section + "." + key);
    }
  }
  return parsed;
}

class Extractor {
 public:
  Extractor(ParsedText& parsed, std::string_view source_name)
      : parsed_(parsed), source_(source_name) {}

  double number(const std::string& section, const std::string& key, Dimension dim) {
    Entry& e = require(section, key);
    return convert(e, section, key, dim);
  }

  std::optional<double> optional_number(const std::string& section, const std::string& key,
                                        Dimension dim) {
    Entry* e = lookup(section, key);
    if (e == nullptr) return std::nullopt;
    return convert(*e, section, key, dim);
  }

  int integer(const std::string& section, const std::string& key) {
    Entry& e = require(section, key);
    const double v = convert(e, section, key, Dimension::Dimensionless);
    const double rounded = std::round(v);
    if (v != rounded) {
      fail(e.line, section + "." + key, "expected an integer, got '" + e.value + "'");
    }
    return static_cast<int>(rounded);
  }

  std::string token(const std::string& section, const std::string& key,
                    const std::string& fallback) {
    Entry* e = lookup(section, key);
    if (e == nullptr) return fallback;
    if (!valid_key(e->value)) {
      fail(e->line, section + "." + key, "malformed value '" + e->value + "'");
    }
    return e->value;
  }

  bool has_section(const std::string& section) const {
    return parsed_.sections.count(section) != 0;
  }

  void finish() {
    for (const auto& [section, entries] : parsed_.sections) {
      for (const auto& [key, entry] : entries) {
        if (!entry.used) {
          fail(entry.line, section + "." + key, "unknown field '" + section + "." + key + "'");
        }
      }
    }
  }

  [[noreturn]] void fail(int line, const std::string& field, const std::string& message) {
    throw ConfigError(std::string(source_) + ":" + std::to_string(line) + ": " + message,
                      line, field);
  }

 private:
  Entry* lookup(const std::string& section, const std::string& key) {
    auto sec = parsed_.sections.find(section);
    if (sec == parsed_.sections.end()) return nullptr;
    auto it = sec->second.find(key);
    if (it == sec->second.end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }

  Entry& require(const std::string& section, const std::string& key) {
    Entry* e = lookup(section, key);
    if (e == nullptr) {
      fail(0, section + "." + key, "missing required field '" + section + "." + key + "'");
    }
    return *e;
  }

  double convert(const Entry& e, const std::string& section, const std::string& key,
                 Dimension dim) {
    try {
      return units::parse_quantity(e.value, dim);
    } catch (const DomainError& err) {
      fail(e.line, section + "." + key, err.what());
    }
  }

  ParsedText& parsed_;
  std::string_view source_;
};

}  // namespace

RunConfig parse_config(std::string_view text, std::string_view source_name) {
  ParsedText parsed = tokenize(text, source_name);
  Extractor ex(parsed, source_name);
  RunConfig config;
  RobotDesign& d = config.design;

  d.spring.stiffness = ex.optional_number("spring", "stiffness", Dimension::Stiffness);
  d.spring.beam_length = ex.number("spring", "beam_length", Dimension::Length);
  d.spring.beam_width = ex.number("spring", "beam_width", Dimension::Length);
  d.spring.sheet_thickness = ex.number("spring", "sheet_thickness", Dimension::Length);
  d.spring.parallel_beam_count = ex.integer("spring", "parallel_beam_count");
  d.spring.max_deflection_rated =
      ex.number("spring", "max_deflection_rated", Dimension::Length);

  d.spring.material.name = ex.token("spring.material", "name", "material");
  d.spring.material.youngs_modulus =
      ex.number("spring.material", "youngs_modulus", Dimension::Pressure);
  d.spring.material.yield_strain =
      ex.number("spring.material", "yield_strain", Dimension::Dimensionless);
  d.spring.material.density = ex.number("spring.material", "density", Dimension::Density);

  d.release.release_force = ex.number("release", "release_force", Dimension::Force);

  d.ratchet.shaft_radius = ex.number("ratchet", "shaft_radius", Dimension::Length);
  d.ratchet.tooth_pitch = ex.number("ratchet", "tooth_pitch", Dimension::Angle);
  d.ratchet.tooth_height = ex.number("ratchet", "tooth_height", Dimension::Length);
  d.ratchet.stroke_angle = ex.number("ratchet", "stroke_angle", Dimension::Angle);
  d.ratchet.winding_efficiency =
      ex.number("ratchet", "winding_efficiency", Dimension::Dimensionless);
  d.ratchet.friction_coefficient =
      ex.number("ratchet", "friction_coefficient", Dimension::Dimensionless);
  d.ratchet.measured_starting_torque =
      ex.optional_number("ratchet", "measured_starting_torque", Dimension::Torque);

  d.actuator.moment_arm_length =
      ex.number("actuator", "moment_arm_length", Dimension::Length);
  d.actuator.coil.turns = ex.integer("actuator.coil", "turns");
  d.actuator.coil.mean_radius = ex.number("actuator.coil", "mean_radius", Dimension::Length);
  d.actuator.coil.resistance =
      ex.optional_number("actuator.coil", "resistance", Dimension::Resistance);
  d.actuator.coil.wire_diameter =
      ex.number("actuator.coil", "wire_diameter", Dimension::Length);
  d.actuator.coil.avg_field =
      ex.number("actuator.coil", "avg_field", Dimension::MagneticField);

  d.body.drag_coefficient = ex.number("body", "drag_coefficient", Dimension::Dimensionless);
  d.body.reference_area = ex.number("body", "reference_area", Dimension::Area);
  d.body.air_density = ex.number("body", "air_density", Dimension::Density);
  d.body.gravity = ex.number("body", "gravity", Dimension::Acceleration);
  d.body.launch_efficiency =
      ex.number("body", "launch_efficiency", Dimension::Dimensionless);

  if (parsed.mass_items.empty()) {
    ex.fail(0, "body.mass", "missing [body.mass] items");
  }
  for (auto& [label, entry] : parsed.mass_items) {
    double mass = 0.0;
    try {
      mass = units::parse_quantity(entry.value, Dimension::Mass);
    } catch (const DomainError& err) {
      ex.fail(entry.line, "body.mass." + label, err.what());
    }
    d.body.mass_items.push_back({label, mass});
  }

  if (ex.has_section("drive")) {
    const std::string kind = ex.token("drive", "kind", "square_wave_supply");
    if (kind == "square_wave_supply") {
      config.drive.kind = DriveKind::SquareWaveSupply;
    } else if (kind == "pv_pair") {
      config.drive.kind = DriveKind::PvPair;
    } else {
      ex.fail(0, "drive.kind",
              "unknown drive kind '" + kind + "' (square_wave_supply | pv_pair)");
    }
    config.drive.amplitude = ex.number("drive", "amplitude", Dimension::Voltage);
    config.drive.frequency = ex.number("drive", "frequency", Dimension::Frequency);
  } else {
    config.drive = baseline_drive();
  }

  ex.finish();
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file '" + path.string() + "'", 0, path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.string());
}

namespace {

std::string sanitize_label(const std::string& label) {
  std::string out = label;
  for (char& c : out) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
      c = '_';
    }
  }
  return out.empty() ? "item" : out;
}

void emit(std::string& out, const char* key, double si_value, Dimension dim) {
  out += key;
  out += " = ";
  out += units::format_quantity(si_value, dim);
  out += '\n';
}

}  // namespace

std::string serialize_config(const RunConfig& config) {
  const RobotDesign& d = config.design;
  std::string out;
  out.reserve(2048);

  out += "[spring]\n";
  if (d.spring.stiffness.has_value()) {
    emit(out, "stiffness", *d.spring.stiffness, Dimension::Stiffness);
  }
  emit(out, "beam_length", d.spring.beam_length, Dimension::Length);
  emit(out, "beam_width", d.spring.beam_width, Dimension::Length);
  emit(out, "sheet_thickness", d.spring.sheet_thickness, Dimension::Length);
  out += "parallel_beam_count = " + std::to_string(d.spring.parallel_beam_count) + "\n";
  emit(out, "max_deflection_rated", d.spring.max_deflection_rated, Dimension::Length);

  out += "\n[spring.material]\n";
  out += "name = " + sanitize_label(d.spring.material.name) + "\n";
  emit(out, "youngs_modulus", d.spring.material.youngs_modulus, Dimension::Pressure);
  emit(out, "yield_strain", d.spring.material.yield_strain, Dimension::Dimensionless);
  emit(out, "density", d.spring.material.density, Dimension::Density);

  out += "\n[release]\n";
  emit(out, "release_force", d.release.release_force, Dimension::Force);

  out += "\n[ratchet]\n";
  emit(out, "shaft_radius", d.ratchet.shaft_radius, Dimension::Length);
  emit(out, "tooth_pitch", d.ratchet.tooth_pitch, Dimension::Angle);
  emit(out, "tooth_height", d.ratchet.tooth_height, Dimension::Length);
  emit(out, "stroke_angle", d.ratchet.stroke_angle, Dimension::Angle);
  emit(out, "winding_efficiency", d.ratchet.winding_efficiency, Dimension::Dimensionless);
  emit(out, "friction_coefficient", d.ratchet.friction_coefficient,
       Dimension::Dimensionless);
  if (d.ratchet.measured_starting_torque.has_value()) {
    emit(out, "measured_starting_torque", *d.ratchet.measured_starting_torque,
         Dimension::Torque);
  }

  out += "\n[actuator]\n";
  emit(out, "moment_arm_length", d.actuator.moment_arm_length, Dimension::Length);

  out += "\n[actuator.coil]\n";
  out += "turns = " + std::to_string(d.actuator.coil.turns) + "\n";
  emit(out, "mean_radius", d.actuator.coil.mean_radius, Dimension::Length);
  if (d.actuator.coil.resistance.has_value()) {
    emit(out, "resistance", *d.actuator.coil.resistance, Dimension::Resistance);
  }
  emit(out, "wire_diameter", d.actuator.coil.wire_diameter, Dimension::Length);
  emit(out, "avg_field", d.actuator.coil.avg_field, Dimension::MagneticField);

  out += "\n[body]\n";
  emit(out, "drag_coefficient", d.body.drag_coefficient, Dimension::Dimensionless);
  emit(out, "reference_area", d.body.reference_area, Dimension::Area);
  emit(out, "air_density", d.body.air_density, Dimension::Density);
  emit(out, "gravity", d.body.gravity, Dimension::Acceleration);
  emit(out, "launch_efficiency", d.body.launch_efficiency, Dimension::Dimensionless);

  out += "\n[body.mass]\n";
  for (const MassItem& item : d.body.mass_items) {
    out += sanitize_label(item.label) + " = " + units::format_quantity(item.mass, Dimension::Mass) +
           "\n";
  }

  out += "\n[drive]\n";
  out += std::string("kind = ") +
         (config.drive.kind == DriveKind::SquareWaveSupply ? "square_wave_supply" : "pv_pair") +
         "\n";
  emit(out, "amplitude", config.drive.amplitude, Dimension::Voltage);
  emit(out, "frequency", config.drive.frequency, Dimension::Frequency);

  return out;
}

void save_config(const RunConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot write config file '" + path.string() + "'", 0, path.string());
  }
  out << serialize_config(config);
}

}  // namespace jumpbot
