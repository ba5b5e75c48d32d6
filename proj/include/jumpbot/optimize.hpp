#pragma once

// Constrained design-space search over robot/drive parameters. The cycle
// simulation contains discrete events (ratchet steps, stall, snap release),
// so the search is derivative-free: a coarse grid scan followed by compass
// pattern refinement from the best grid point, ranking feasibility first.

#include <string>
#include <vector>

#include "jumpbot/model.hpp"
#include "jumpbot/units.hpp"

namespace jumpbot {

/// A design plus the drive exciting it; the unit every evaluation consumes.
struct DesignPoint {
  RobotDesign design;
  DriveSource drive;
};

// ---------------------------------------------------------------------------
// Field paths: dotted names addressing the numeric fields of a DesignPoint
// ("actuator.moment_arm_length", "ratchet.shaft_radius", "drive.amplitude").

std::vector<std::string> known_field_paths();
bool is_known_field_path(const std::string& path);
double get_field(const DesignPoint& point, const std::string& path);
void set_field(DesignPoint& point, const std::string& path, double value);
units::Dimension field_dimension(const std::string& path);

// ---------------------------------------------------------------------------

enum class Objective {
  ApexHeight,
  JumpRate,
};

enum class VariableScale {
  Linear,
  Logarithmic,
};

struct DesignVariable {
  std::string path;
  double lower = 0.0;
  double upper = 0.0;  // lower == upper is a degenerate single-point bound
  VariableScale scale = VariableScale::Linear;
};

/// Static + simulated report for one design point: objective values and
/// constraint slacks.
struct DesignReport {
  bool released = false;
  double apex = 0.0;                // m (0 on stall)
  double jump_rate = 0.0;           // per minute (0 on stall)
  double stall_deflection = 0.0;    // m, meaningful when !released
  double release_deflection = 0.0;  // m
  double stored_energy = 0.0;       // J at the release deflection
  double torque_margin = 0.0;       // N*m, available(drive) - required at release
  double required_amplitude = 0.0;  // V, stall threshold of the design
  double strain_margin = 0.0;       // yield_strain - strain at release
  double total_mass = 0.0;          // kg
};

struct OptimizationProblem {
  std::vector<DesignVariable> variables;
  Objective objective = Objective::ApexHeight;
  RobotDesign baseline;
  DriveSource drive;
  // Constraint budgets: release reached, required drive amplitude within
  // budget, strain within yield, mass within budget.
  double amplitude_budget = 0.0;  // V
  double mass_budget = 0.0;       // kg
  // Optional linear arm-mass coupling (kg per m of arm beyond baseline);
  // 0 disables it.
  double arm_mass_per_length = 0.0;
  int grid_points = 7;        // per variable, coarse stage
  int evaluation_budget = 2000;
};

struct HistoryEntry {
  std::vector<double> values;  // one per variable, natural units
  double objective = 0.0;
  bool feasible = false;
  double violation = 0.0;  // summed relative constraint violation
};

struct OptimizationResult {
  RobotDesign best_design;
  DriveSource best_drive;
  double best_objective = 0.0;
  bool feasible = false;  // false when every evaluated point violated a constraint
  long evaluations = 0;
  std::vector<HistoryEntry> history;
};

/// Problem with budgets defaulted from the baseline: amplitude budget =
/// drive amplitude, mass budget = baseline total mass.
OptimizationProblem make_problem(RobotDesign baseline, DriveSource drive,
                                 std::vector<DesignVariable> variables,
                                 Objective objective = Objective::ApexHeight);

/// Simulates one design under the drive and reports objectives and slacks.
DesignReport evaluate_design(const RobotDesign& design, const DriveSource& drive);

/// Grid scan then compass search. Deterministic for a given problem; the
/// seed is accepted for interface stability (both stages are deterministic,
/// so it does not influence the result). Never evaluates more than
/// `evaluation_budget` points. When no feasible point exists the best
/// infeasible point is returned with `feasible = false`.
OptimizationResult optimize(const OptimizationProblem& problem, unsigned seed);

}  // namespace jumpbot
