#include "jumpbot/spring.hpp"

#include <cmath>

#include "jumpbot/errors.hpp"

namespace jumpbot {

namespace {

void require_geometry(const SpringSpec& spring) {
  if (!(spring.beam_length > 0.0 && spring.beam_width > 0.0 && spring.sheet_thickness > 0.0 &&
        spring.parallel_beam_count >= 1)) {
    throw SpecError("SpringSpec: beam geometry missing or non-positive");
  }
}

}  // namespace

double stiffness_from_geometry(const SpringSpec& spring) {
  require_geometry(spring);
  if (!(spring.material.youngs_modulus > 0.0)) {
    throw SpecError("SpringSpec.material: missing Young's modulus");
  }
  const double t = spring.sheet_thickness;
  const double inertia = spring.beam_width * t * t * t / 12.0;
  const double l = spring.beam_length;
  const double per_beam = 12.0 * spring.material.youngs_modulus * inertia / (l * l * l);
  return spring.parallel_beam_count * per_beam;
}

double effective_stiffness(const SpringSpec& spring) {
  if (spring.stiffness.has_value()) {
    if (!(*spring.stiffness > 0.0)) {
      throw SpecError("SpringSpec.stiffness: must be > 0 when present");
    }
    return *spring.stiffness;
  }
  return stiffness_from_geometry(spring);
}

double spring_force(double stiffness, double deflection) {
  if (!(stiffness > 0.0)) {
    throw DomainError("spring_force: stiffness must be > 0");
  }
  if (deflection < 0.0) {
    throw DomainError("spring_force: deflection must be >= 0");
  }
  return stiffness * deflection;
}

double stored_energy(double stiffness, double deflection) {
  if (!(stiffness > 0.0)) {
    throw DomainError("stored_energy: stiffness must be > 0");
  }
  if (deflection < 0.0) {
    throw DomainError("stored_energy: deflection must be >= 0");
  }
  return 0.5 * stiffness * deflection * deflection;
}

double release_deflection(double stiffness, const ReleaseSpec& release) {
  if (!(stiffness > 0.0)) {
    throw DomainError("release_deflection: stiffness must be > 0");
  }
  return release.release_force / stiffness;
}

ReleaseOutcome check_release(const SpringState& state, const ReleaseSpec& release) {
  ReleaseOutcome outcome;
  if (state.tension >= release.release_force) {
    outcome.released = true;
    outcome.deflection_at_event = state.deflection;
    outcome.stored_energy_at_event = 0.5 * state.tension * state.deflection;
  }
  return outcome;
}

double max_strain(const SpringSpec& spring, double deflection) {
  require_geometry(spring);
  if (deflection < 0.0) {
    throw DomainError("max_strain: deflection must be >= 0");
  }
  const double l = spring.beam_length;
  return 3.0 * spring.sheet_thickness * deflection / (l * l);
}

}  // namespace jumpbot
