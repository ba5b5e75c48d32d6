#pragma once

// Physical-design record types for the jumping microrobot, plus the
// consistency checks every other module relies on. All fields are SI base
// units; ingestion from unit-suffixed config text happens in config.cpp.
// Records are immutable values in practice: operations never mutate them.

#include <optional>
#include <string>
#include <vector>

namespace jumpbot {

struct MaterialSpec {
  double youngs_modulus = 0.0;  // Pa
  double yield_strain = 0.0;
  double density = 0.0;  // kg/m^3
  std::string name;
};

struct SpringSpec {
  // Explicit stiffness wins over the geometry-derived value when present.
  std::optional<double> stiffness;  // N/m
  double beam_length = 0.0;         // m
  double beam_width = 0.0;          // m
  double sheet_thickness = 0.0;     // m
  int parallel_beam_count = 1;
  MaterialSpec material;
  double max_deflection_rated = 0.0;  // m
};

struct ReleaseSpec {
  double release_force = 0.0;  // N, measured magnet snap threshold
};

struct RatchetSpec {
  double shaft_radius = 0.0;          // m
  double tooth_pitch = 0.0;           // rad
  double tooth_height = 0.0;          // m
  double stroke_angle = 0.0;          // rad, input arm rotation per half-cycle
  double winding_efficiency = 1.0;    // (0, 1], lumped backlash/slip loss
  double friction_coefficient = 0.0;  // shaft-on-ring static friction
  // Bench-measured breakaway torque, report-only; simulation uses the
  // friction + spring estimate.
  std::optional<double> measured_starting_torque;  // N*m
};

struct CoilSpec {
  int turns = 0;
  double mean_radius = 0.0;  // m
  // Explicit resistance wins over the wire-derived value when present.
  std::optional<double> resistance;  // ohm
  double wire_diameter = 0.0;        // m
  double avg_field = 0.0;            // T, mean field seen by the winding
};

struct ActuatorSpec {
  CoilSpec coil;
  double moment_arm_length = 0.0;  // m
};

enum class DriveKind {
  SquareWaveSupply,
  PvPair,
};

struct DriveSource {
  DriveKind kind = DriveKind::SquareWaveSupply;
  double amplitude = 0.0;  // V
  double frequency = 0.0;  // Hz
};

struct MassItem {
  std::string label;
  double mass = 0.0;  // kg
};

struct BodySpec {
  std::vector<MassItem> mass_items;
  double drag_coefficient = 0.0;
  double reference_area = 0.0;   // m^2, frontal bounding box
  double air_density = 0.0;      // kg/m^3
  double gravity = 9.81;         // m/s^2
  double launch_efficiency = 1.0;  // (0, 1], stored -> kinetic conversion
};

struct RobotDesign {
  SpringSpec spring;
  ReleaseSpec release;
  RatchetSpec ratchet;
  ActuatorSpec actuator;
  BodySpec body;
};

/// One violated invariant: which field and which rule.
struct Violation {
  std::string field;
  std::string rule;
};

/// Exact sum of the body's mass items. Throws SpecError on an empty list.
double total_mass(const BodySpec& body);

/// Empty iff every record invariant holds. Violations are data, not errors.
std::vector<Violation> validate_design(const RobotDesign& design);

/// Throws SpecError listing all violations if validate_design is non-empty.
void require_valid(const RobotDesign& design);

/// Loss factors that reproduce the observed jump height and jump rate of
/// the reference hardware. The ideal model uses 1.0 for both.
inline constexpr double kCalibratedLaunchEfficiency = 0.52;
inline constexpr double kCalibratedWindingEfficiency = 0.43;

/// The reference 75 mg robot: 2.5 N/m spring, 7.5 mN release, 1 mm shaft,
/// 384-turn coil on an 8 mm arm. Ideal loss factors (1.0).
RobotDesign baseline_design();

/// baseline_design with the calibrated loss factors applied.
RobotDesign calibrated_design();

/// 0.8 V / 20 Hz square-wave supply.
DriveSource baseline_drive();

}  // namespace jumpbot
