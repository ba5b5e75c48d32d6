#include "jumpbot/ratchet.hpp"

#include <cmath>

#include "jumpbot/errors.hpp"
#include "jumpbot/spring.hpp"

namespace jumpbot {

RatchetState apply_stroke(const RatchetState& state, StrokeDirection direction,
                          const RatchetSpec& spec) {
  RatchetState next = state;
  if (direction == StrokeDirection::Clockwise) {
    next.shaft_angle += spec.stroke_angle * spec.winding_efficiency;
    next.input_phase = InputPhase::CwStroke;
  } else {
    if (state.input_phase == InputPhase::CwStroke) {
      next.cycle_count += 1;
    }
    next.input_phase = InputPhase::CcwStroke;
  }
  return next;
}

double wound_length(const RatchetState& state, const RatchetSpec& spec) {
  return spec.shaft_radius * state.shaft_angle;
}

long cycles_to_release(const RobotDesign& design) {
  require_valid(design);
  const double k = effective_stiffness(design.spring);
  const double target = release_deflection(k, design.release);
  const double per_cycle = design.ratchet.shaft_radius * design.ratchet.stroke_angle *
                           design.ratchet.winding_efficiency;
  const double ratio = target / per_cycle;
  if (!(per_cycle > 0.0) || !std::isfinite(ratio) || ratio >= 1e15) {
    throw InfeasibleError("cycles_to_release: per-cycle take-up underflows");
  }
  return static_cast<long>(std::ceil(ratio));
}

double tooth_quantize(double angle, const RatchetSpec& spec) {
  if (angle < 0.0) {
    throw DomainError("tooth_quantize: angle must be >= 0");
  }
  // Absorb one-ulp division noise so exact pitch multiples stay put.
  const double steps = std::floor(angle / spec.tooth_pitch + 1e-9);
  return steps * spec.tooth_pitch;
}

}  // namespace jumpbot
