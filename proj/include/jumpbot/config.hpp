#pragma once

// Config ingestion and emission. The on-disk format is sectioned key-value
// text with an explicit unit suffix on every physical quantity:
//
//   [spring]
//   stiffness = 2.5 N/m
//   ...
//   [body.mass]
//   coil = 13 mg
//
// Values are converted to SI at this boundary; serialization emits SI units
// with shortest-round-trip formatting, so parse -> serialize -> parse is the
// identity on every field.

#include <filesystem>
#include <string>
#include <string_view>

#include "jumpbot/model.hpp"

namespace jumpbot {

struct RunConfig {
  RobotDesign design;
  DriveSource drive;
};

/// Parses config text. Throws ConfigError naming the line and field on
/// malformed input. `source_name` is used in diagnostics.
RunConfig parse_config(std::string_view text, std::string_view source_name = "<string>");

/// Reads and parses a config file.
RunConfig load_config(const std::filesystem::path& path);

/// Canonical text form: fixed section order, SI units, exact round-trip.
std::string serialize_config(const RunConfig& config);

/// Writes serialize_config output to a file (LF line endings).
void save_config(const RunConfig& config, const std::filesystem::path& path);

}  // namespace jumpbot
