#pragma once

// Load-release-flight cycle: released spring energy becomes launch velocity,
// 1-D vertical ballistics with quadratic drag integrates to apex, and the
// wind/release/flight events are recorded in a trace.

#include <optional>
#include <vector>

#include "jumpbot/model.hpp"

namespace jumpbot {

struct FlightSample {
  double time = 0.0;      // s, measured from release
  double height = 0.0;    // m, measured from the release position
  double velocity = 0.0;  // m/s
};

struct WindEvent {
  long cycle = 0;           // 1-based full input cycle index
  double time = 0.0;        // s, completion of the winding stroke
  double deflection = 0.0;  // m
  double tension = 0.0;     // N
};

struct ReleaseEvent {
  double time = 0.0;        // s
  double deflection = 0.0;  // m
  double energy = 0.0;      // J, stored in the spring at the snap
};

struct StallEvent {
  double time = 0.0;        // s
  double deflection = 0.0;  // m, where winding stopped
  long cycles_completed = 0;
};

struct FlightResult {
  double apex = 0.0;  // m
  std::vector<FlightSample> samples;
};

struct CycleTrace {
  std::vector<WindEvent> wind_events;
  std::optional<ReleaseEvent> release;
  std::optional<StallEvent> stall;  // mutually exclusive with flight
  std::vector<FlightSample> flight;
  double apex_height = 0.0;  // m
  double jump_period = 0.0;  // s, release time + time to apex (0 on stall)
};

inline constexpr double kDefaultFlightStep = 10e-6;  // s

/// v0 = sqrt(2 * efficiency * energy / mass).
double launch_velocity(double energy, double mass, double efficiency);

/// Drag-free apex from energy conservation: h = E / (m g).
double ideal_jump_height(double energy, double mass, double gravity);

/// Fixed-step classical RK4 on m dv/dt = -m g - 1/2 rho Cd A v |v| from
/// (h = 0, v = v0). The apex is located by the velocity sign change with
/// quadratic interpolation between the bracketing samples. Integration
/// stops at the apex unless `include_descent`, which continues to h = 0.
FlightResult simulate_flight(double v0, const BodySpec& body, double step,
                             bool include_descent = false);

/// Full event-driven cycle under the given drive. Each drive period is one
/// wind stroke plus one return stroke; a wind stroke completes only if the
/// available torque covers the starting torque at the tension it creates,
/// otherwise the trace carries a stall marker at the reached deflection.
/// On release the stored energy (times launch_efficiency) feeds the flight.
CycleTrace simulate_cycle(const RobotDesign& design, const DriveSource& source,
                          double step = kDefaultFlightStep);

/// Jumps per minute: 60 / (cycles_to_release / frequency). Flight time is
/// ignored unless it exceeds 10% of the wind time. Throws InfeasibleError
/// when the design stalls under the given drive.
double jump_rate(const RobotDesign& design, const DriveSource& source);

}  // namespace jumpbot
