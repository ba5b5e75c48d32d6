#pragma once

// Electromagnetic coil actuator: force/torque generation, the electrical
// budget behind it, the starting-torque requirement, and the drive-source
// waveform. Coil inductance and back-EMF are ignored (I = V/R); the mean
// field over the magnet stroke is a single constant.

#include "jumpbot/model.hpp"

namespace jumpbot {

struct TorqueBudget {
  double friction_torque = 0.0;  // N*m, ring-contact friction
  double spring_torque = 0.0;    // N*m, string tension counter-torque
  double total_required = 0.0;   // N*m
  double available = 0.0;        // N*m, from the drive context
  bool feasible = false;         // available >= total_required
};

struct ElectricalBudget {
  double current = 0.0;     // A
  double voltage = 0.0;     // V
  double power = 0.0;       // W
  double resistance = 0.0;  // ohm
};

inline constexpr double kCopperResistivity = 1.68e-8;  // ohm*m

/// Wire-length resistance: rho * (turns * 2 pi r_mean) / (pi (d/2)^2).
double coil_resistance_from_wire(const CoilSpec& coil, double resistivity);

/// Explicit resistance when present, copper wire-derived otherwise.
double effective_resistance(const CoilSpec& coil);

/// Lorentz force on the winding: turns * B_avg * I * 2 pi r_mean, signed
/// with the current.
double coil_force(const CoilSpec& coil, double current);

/// Starting torque at a given deflection: friction = mu_s * k d * r_shaft
/// (string tension presses the shaft into the support rings) plus the
/// spring counter-torque k d * r_shaft. `available` fills the drive side.
TorqueBudget required_torque(const RobotDesign& design, double deflection,
                             double available = 0.0);

/// |coil force| * moment arm.
double available_torque(const ActuatorSpec& actuator, double current);

/// Inverse of available_torque: the current whose torque equals `torque`.
double required_current(const ActuatorSpec& actuator, double torque);

/// Ohm's-law budget at a given current: V = I R, P = I^2 R.
ElectricalBudget electrical_budget(const CoilSpec& coil, double current);

/// Drive voltage at time t: +/- amplitude alternating at `frequency`, 50%
/// duty. The PV pair behaves as the same ideal alternating source (each
/// cell sustains the amplitude into the coil for one half-period).
double drive_waveform(const DriveSource& source, double time);

/// Smallest drive amplitude whose current meets the starting torque at the
/// release deflection; below it the mechanism stalls before the snap.
double stall_threshold_amplitude(const RobotDesign& design);

}  // namespace jumpbot
