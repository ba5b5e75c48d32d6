#include "jumpbot/actuator.hpp"

#include <cmath>
#include <numbers>

#include "jumpbot/errors.hpp"
#include "jumpbot/spring.hpp"

namespace jumpbot {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double coil_resistance_from_wire(const CoilSpec& coil, double resistivity) {
  if (!(coil.wire_diameter > 0.0) || coil.turns < 1) {
    throw SpecError("CoilSpec: wire_diameter and turns must be positive");
  }
  const double wire_length = coil.turns * kTwoPi * coil.mean_radius;
  const double half_d = coil.wire_diameter / 2.0;
  const double cross_section = std::numbers::pi * half_d * half_d;
  return resistivity * wire_length / cross_section;
}

double effective_resistance(const CoilSpec& coil) {
  if (coil.resistance.has_value()) {
    if (!(*coil.resistance > 0.0)) {
      throw SpecError("CoilSpec.resistance: must be > 0 when present");
    }
    return *coil.resistance;
  }
  return coil_resistance_from_wire(coil, kCopperResistivity);
}

double coil_force(const CoilSpec& coil, double current) {
  if (!std::isfinite(current)) {
    throw DomainError("coil_force: current must be finite");
  }
  return coil.turns * coil.avg_field * current * kTwoPi * coil.mean_radius;
}

TorqueBudget required_torque(const RobotDesign& design, double deflection, double available) {
  if (deflection < 0.0) {
    throw DomainError("required_torque: deflection must be >= 0");
  }
  const double k = effective_stiffness(design.spring);
  const double tension = spring_force(k, deflection);
  const double r = design.ratchet.shaft_radius;

  TorqueBudget budget;
  budget.friction_torque = design.ratchet.friction_coefficient * tension * r;
  budget.spring_torque = tension * r;
  budget.total_required = budget.friction_torque + budget.spring_torque;
  budget.available = available;
  budget.feasible = available >= budget.total_required;
  return budget;
}

double available_torque(const ActuatorSpec& actuator, double current) {
  return std::fabs(coil_force(actuator.coil, current)) * actuator.moment_arm_length;
}

double required_current(const ActuatorSpec& actuator, double torque) {
  if (torque < 0.0) {
    throw DomainError("required_current: torque must be >= 0");
  }
  const double gain = actuator.moment_arm_length * actuator.coil.turns *
                      actuator.coil.avg_field * kTwoPi * actuator.coil.mean_radius;
  if (!(gain > 0.0)) {
    throw SpecError("required_current: zero moment arm or field makes the actuator singular");
  }
  return torque / gain;
}

ElectricalBudget electrical_budget(const CoilSpec& coil, double current) {
  ElectricalBudget budget;
  budget.resistance = effective_resistance(coil);
  budget.current = current;
  budget.voltage = current * budget.resistance;
  budget.power = current * current * budget.resistance;
  return budget;
}

double drive_waveform(const DriveSource& source, double time) {
  if (time < 0.0) {
    throw DomainError("drive_waveform: time must be >= 0");
  }
  const double cycles = time * source.frequency;
  const double phase = cycles - std::floor(cycles);
  return phase < 0.5 ? source.amplitude : -source.amplitude;
}

double stall_threshold_amplitude(const RobotDesign& design) {
  const double k = effective_stiffness(design.spring);
  const double at_release = release_deflection(k, design.release);
  const TorqueBudget budget = required_torque(design, at_release);
  const double current = required_current(design.actuator, budget.total_required);
  return current * effective_resistance(design.actuator.coil);
}

}  // namespace jumpbot
