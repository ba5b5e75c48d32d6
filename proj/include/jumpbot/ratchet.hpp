#pragma once

// Double-ratchet state machine: the actuator arm's oscillation becomes
// monotone clockwise shaft rotation, which winds the string. The reverse
// direction is treated as ideally locked (pawl buckling torque is orders
// of magnitude above the sliding torque), so shaft angle never decreases.

#include "jumpbot/model.hpp"

namespace jumpbot {

enum class StrokeDirection {
  Clockwise,         // winding stroke, advances the shaft
  CounterClockwise,  // return stroke, shaft stays locked
};

enum class InputPhase {
  CwStroke,
  CcwStroke,
};

struct RatchetState {
  double shaft_angle = 0.0;  // rad, cumulative, non-decreasing
  InputPhase input_phase = InputPhase::CcwStroke;  // arm at rest = returned
  long cycle_count = 0;  // completed cw+ccw pairs
};

/// One input stroke. Clockwise advances shaft_angle by
/// stroke_angle * winding_efficiency; counter-clockwise leaves the shaft
/// stationary and completes the cycle begun by a preceding cw stroke.
RatchetState apply_stroke(const RatchetState& state, StrokeDirection direction,
                          const RatchetSpec& spec);

/// String take-up: shaft_radius * shaft_angle (single-layer wrap, constant
/// radius; efficiency is already folded into the angle updates).
double wound_length(const RatchetState& state, const RatchetSpec& spec);

/// Smallest number of full input cycles whose wound string reaches the
/// release deflection: ceil(dl_rel / (r_shaft * stroke_angle * efficiency)).
/// Throws InfeasibleError when the per-cycle take-up underflows.
long cycles_to_release(const RobotDesign& design);

/// Diagnostic: the largest tooth-pitch multiple <= angle, i.e. the position
/// the shaft could slip back to if pawl engagement were the only holdback.
/// Not applied in the wind model (reverse direction is treated as locked).
double tooth_quantize(double angle, const RatchetSpec& spec);

}  // namespace jumpbot
