#include "jumpbot/dynamics.hpp"

#include <cmath>

#include "jumpbot/actuator.hpp"
#include "jumpbot/errors.hpp"
#include "jumpbot/ratchet.hpp"
#include "jumpbot/spring.hpp"

namespace jumpbot {

double launch_velocity(double energy, double mass, double efficiency) {
  if (energy < 0.0) throw DomainError("launch_velocity: energy must be >= 0");
  if (!(mass > 0.0)) throw DomainError("launch_velocity: mass must be > 0");
  if (!(efficiency > 0.0 && efficiency <= 1.0)) {
    throw DomainError("launch_velocity: efficiency must be in (0, 1]");
  }
  return std::sqrt(2.0 * efficiency * energy / mass);
}

double ideal_jump_height(double energy, double mass, double gravity) {
  if (energy < 0.0) throw DomainError("ideal_jump_height: energy must be >= 0");
  if (!(mass > 0.0) || !(gravity > 0.0)) {
    throw DomainError("ideal_jump_height: mass and gravity must be > 0");
  }
  return energy / (mass * gravity);
}

namespace {

struct FlightDerivative {
  double dh;
  double dv;
};

class VerticalBallistics {
 public:
  VerticalBallistics(const BodySpec& body, double mass)
      : gravity_(body.gravity),
        drag_over_mass_(0.5 * body.air_density * body.drag_coefficient * body.reference_area /
                        mass) {}

  FlightDerivative operator()(double /*h*/, double v) const {
    return {v, -gravity_ - drag_over_mass_ * v * std::fabs(v)};
  }

 private:
  double gravity_;
  double drag_over_mass_;
};

void rk4_step(const VerticalBallistics& f, double step, double& h, double& v) {
  const FlightDerivative k1 = f(h, v);
  const FlightDerivative k2 = f(h + 0.5 * step * k1.dh, v + 0.5 * step * k1.dv);
  const FlightDerivative k3 = f(h + 0.5 * step * k2.dh, v + 0.5 * step * k2.dv);
  const FlightDerivative k4 = f(h + step * k3.dh, v + step * k3.dv);
  h += step / 6.0 * (k1.dh + 2.0 * k2.dh + 2.0 * k3.dh + k4.dh);
  v += step / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
}

}  // namespace

FlightResult simulate_flight(double v0, const BodySpec& body, double step,
                             bool include_descent) {
  if (v0 < 0.0) throw DomainError("simulate_flight: v0 must be >= 0");
  if (!(step > 0.0)) throw DomainError("simulate_flight: step must be > 0");

  const double mass = total_mass(body);
  const VerticalBallistics f(body, mass);

  FlightResult result;
  result.samples.push_back({0.0, 0.0, v0});
  if (v0 == 0.0) {
    return result;
  }

  double t = 0.0;
  double h = 0.0;
  double v = v0;
  bool ascending = true;
  long iterations = 0;

  while (true) {
    if (++iterations > 200'000'000L) {
      throw IntegrationError("simulate_flight: step too small for the flight duration");
    }
    const double h_prev = h;
    const double v_prev = v;
    rk4_step(f, step, h, v);
    const double t_next = t + step;
    if (!std::isfinite(h) || !std::isfinite(v)) {
      throw IntegrationError("simulate_flight: state left the finite range");
    }

    if (ascending && v <= 0.0) {
      // Apex bracketed: v is close to linear across one step, so locate the
      // zero crossing and evaluate the locally quadratic height there.
      const double accel = (v - v_prev) / step;
      const double tau = v_prev * step / (v_prev - v);
      const double apex_h = h_prev + v_prev * tau + 0.5 * accel * tau * tau;
      const double apex_t = t + tau;
      result.apex = apex_h;
      result.samples.push_back({apex_t, apex_h, 0.0});
      if (!include_descent) {
        return result;
      }
      ascending = false;
      t = apex_t;
      h = apex_h;
      v = 0.0;
      continue;
    }

    if (!ascending && h <= 0.0) {
      const double tau = h_prev / (h_prev - h) * step;
      const double v_touch = v_prev + (v - v_prev) * (tau / step);
      result.samples.push_back({t + tau, 0.0, v_touch});
      return result;
    }

    t = t_next;
    result.samples.push_back({t, h, v});
  }
}

CycleTrace simulate_cycle(const RobotDesign& design, const DriveSource& source, double step) {
  require_valid(design);
  if (!(source.frequency > 0.0)) {
    throw SpecError("DriveSource.frequency: must be > 0");
  }
  if (source.amplitude < 0.0) {
    throw SpecError("DriveSource.amplitude: must be >= 0");
  }

  const double k = effective_stiffness(design.spring);
  const double resistance = effective_resistance(design.actuator.coil);
  const double target = release_deflection(k, design.release);
  const double per_cycle = design.ratchet.shaft_radius * design.ratchet.stroke_angle *
                           design.ratchet.winding_efficiency;
  const double ratio = target / per_cycle;
  if (!(per_cycle > 0.0) || !std::isfinite(ratio) || ratio >= 1e15) {
    throw InfeasibleError("simulate_cycle: per-cycle take-up underflows");
  }
  const long max_cycles = static_cast<long>(std::ceil(ratio));
  const double period = 1.0 / source.frequency;

  CycleTrace trace;
  RatchetState state;
  double deflection = 0.0;

  for (long n = 1; n <= max_cycles; ++n) {
    const double stroke_start = (n - 1) * period;
    const double voltage = drive_waveform(source, stroke_start);
    const double current = std::fabs(voltage) / resistance;
    const double available = available_torque(design.actuator, current);

    // The wind stroke counts only if the actuator can overcome the starting
    // torque at the tension the stroke winds up to.
    const RatchetState wound = apply_stroke(state, StrokeDirection::Clockwise, design.ratchet);
    const double next_deflection = wound_length(wound, design.ratchet);
    const TorqueBudget budget = required_torque(design, next_deflection, available);
    if (!budget.feasible) {
      trace.stall = StallEvent{stroke_start, deflection, n - 1};
      return trace;
    }

    state = wound;
    deflection = next_deflection;
    const double stroke_end = stroke_start + 0.5 * period;
    const double tension = spring_force(k, deflection);
    trace.wind_events.push_back({n, stroke_end, deflection, tension});

    const ReleaseOutcome outcome =
        check_release(SpringState{deflection, tension}, design.release);
    if (outcome.released) {
      trace.release = ReleaseEvent{stroke_end, outcome.deflection_at_event,
                                   outcome.stored_energy_at_event};
      const double mass = total_mass(design.body);
      const double v0 =
          launch_velocity(outcome.stored_energy_at_event, mass, design.body.launch_efficiency);
      FlightResult flight = simulate_flight(v0, design.body, step);
      trace.apex_height = flight.apex;
      trace.jump_period = stroke_end + flight.samples.back().time;
      trace.flight = std::move(flight.samples);
      return trace;
    }

    state = apply_stroke(state, StrokeDirection::CounterClockwise, design.ratchet);
  }

  // Unreachable: within max_cycles the tension reaches the release force.
  throw IntegrationError("simulate_cycle: release not reached within the cycle bound");
}

double jump_rate(const RobotDesign& design, const DriveSource& source) {
  const CycleTrace trace = simulate_cycle(design, source);
  if (trace.stall.has_value()) {
    throw InfeasibleError("jump_rate: not applicable, the design stalls before release");
  }
  const long cycles = cycles_to_release(design);
  const double wind_time = static_cast<double>(cycles) / source.frequency;
  const double flight_time = trace.flight.empty() ? 0.0 : trace.flight.back().time;
  double cycle_time = wind_time;
  if (flight_time > 0.1 * wind_time) {
    cycle_time += flight_time;
  }
  return 60.0 / cycle_time;
}

}  // namespace jumpbot
