#pragma once

// Planar spring: stiffness from beam geometry, force/energy at a given
// deflection, peak-strain estimate, and the magnet snap-release threshold.

#include "jumpbot/model.hpp"

namespace jumpbot {

struct SpringState {
  double deflection = 0.0;  // m
  double tension = 0.0;     // N, string force at the center tap
};

struct ReleaseOutcome {
  bool released = false;
  double deflection_at_event = 0.0;    // m
  double stored_energy_at_event = 0.0;  // J
};

/// Stiffness of `parallel_beam_count` fixed-guided beams under a transverse
/// tip load: k = count * 12 E I / l^3 with I = w t^3 / 12. Diagnostic when
/// SpringSpec.stiffness is set explicitly.
double stiffness_from_geometry(const SpringSpec& spring);

/// Explicit stiffness when present, geometry-derived otherwise.
double effective_stiffness(const SpringSpec& spring);

/// Linear spring law F = k * deflection.
double spring_force(double stiffness, double deflection);

/// Elastic energy 1/2 * k * deflection^2.
double stored_energy(double stiffness, double deflection);

/// Deflection at which string tension reaches the magnet release force.
double release_deflection(double stiffness, const ReleaseSpec& release);

/// Snap check: released iff tension >= release_force. On release the event
/// records the deflection and the stored energy (1/2 * tension * deflection).
ReleaseOutcome check_release(const SpringState& state, const ReleaseSpec& release);

/// Peak surface strain of a fixed-guided beam at the given tip deflection,
/// eps = 3 t d / l^2. Compared against material.yield_strain in reports.
double max_strain(const SpringSpec& spring, double deflection);

}  // namespace jumpbot
