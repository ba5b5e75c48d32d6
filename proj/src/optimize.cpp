#include "jumpbot/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "jumpbot/actuator.hpp"
#include "jumpbot/dynamics.hpp"
#include "jumpbot/errors.hpp"
#include "jumpbot/ratchet.hpp"
#include "jumpbot/spring.hpp"

namespace jumpbot {

namespace {

using units::Dimension;

struct FieldAccessor {
  const char* path;
  Dimension dim;
  double (*get)(const DesignPoint&);
  void (*set)(DesignPoint&, double);
};

const FieldAccessor kFields[] = {
    {"spring.stiffness", Dimension::Stiffness,
     [](const DesignPoint& p) { return effective_stiffness(p.design.spring); },
     [](DesignPoint& p, double v) { p.design.spring.stiffness = v; }},
    {"spring.beam_length", Dimension::Length,
     [](const DesignPoint& p) { return p.design.spring.beam_length; },
     [](DesignPoint& p, double v) { p.design.spring.beam_length = v; }},
    {"spring.beam_width", Dimension::Length,
     [](const DesignPoint& p) { return p.design.spring.beam_width; },
     [](DesignPoint& p, double v) { p.design.spring.beam_width = v; }},
    {"spring.sheet_thickness", Dimension::Length,
     [](const DesignPoint& p) { return p.design.spring.sheet_thickness; },
     [](DesignPoint& p, double v) { p.design.spring.sheet_thickness = v; }},
    {"spring.max_deflection_rated", Dimension::Length,
     [](const DesignPoint& p) { return p.design.spring.max_deflection_rated; },
     [](DesignPoint& p, double v) { p.design.spring.max_deflection_rated = v; }},
    {"spring.material.youngs_modulus", Dimension::Pressure,
     [](const DesignPoint& p) { return p.design.spring.material.youngs_modulus; },
     [](DesignPoint& p, double v) { p.design.spring.material.youngs_modulus = v; }},
    {"spring.material.yield_strain", Dimension::Dimensionless,
     [](const DesignPoint& p) { return p.design.spring.material.yield_strain; },
     [](DesignPoint& p, double v) { p.design.spring.material.yield_strain = v; }},
    {"release.release_force", Dimension::Force,
     [](const DesignPoint& p) { return p.design.release.release_force; },
     [](DesignPoint& p, double v) { p.design.release.release_force = v; }},
    {"ratchet.shaft_radius", Dimension::Length,
     [](const DesignPoint& p) { return p.design.ratchet.shaft_radius; },
     [](DesignPoint& p, double v) { p.design.ratchet.shaft_radius = v; }},
    {"ratchet.tooth_pitch", Dimension::Angle,
     [](const DesignPoint& p) { return p.design.ratchet.tooth_pitch; },
     [](DesignPoint& p, double v) { p.design.ratchet.tooth_pitch = v; }},
    {"ratchet.tooth_height", Dimension::Length,
     [](const DesignPoint& p) { return p.design.ratchet.tooth_height; },
     [](DesignPoint& p, double v) { p.design.ratchet.tooth_height = v; }},
    {"ratchet.stroke_angle", Dimension::Angle,
     [](const DesignPoint& p) { return p.design.ratchet.stroke_angle; },
     [](DesignPoint& p, double v) { p.design.ratchet.stroke_angle = v; }},
    {"ratchet.winding_efficiency", Dimension::Dimensionless,
     [](const DesignPoint& p) { return p.design.ratchet.winding_efficiency; },
     [](DesignPoint& p, double v) { p.design.ratchet.winding_efficiency = v; }},
    {"ratchet.friction_coefficient", Dimension::Dimensionless,
     [](const DesignPoint& p) { return p.design.ratchet.friction_coefficient; },
     [](DesignPoint& p, double v) { p.design.ratchet.friction_coefficient = v; }},
    {"actuator.moment_arm_length", Dimension::Length,
     [](const DesignPoint& p) { return p.design.actuator.moment_arm_length; },
     [](DesignPoint& p, double v) { p.design.actuator.moment_arm_length = v; }},
    {"actuator.coil.turns", Dimension::Dimensionless,
     [](const DesignPoint& p) { return static_cast<double>(p.design.actuator.coil.turns); },
     [](DesignPoint& p, double v) {
       p.design.actuator.coil.turns = static_cast<int>(std::lround(v));
     }},
    {"actuator.coil.mean_radius", Dimension::Length,
     [](const DesignPoint& p) { return p.design.actuator.coil.mean_radius; },
     [](DesignPoint& p, double v) { p.design.actuator.coil.mean_radius = v; }},
    {"actuator.coil.resistance", Dimension::Resistance,
     [](const DesignPoint& p) { return effective_resistance(p.design.actuator.coil); },
     [](DesignPoint& p, double v) { p.design.actuator.coil.resistance = v; }},
    {"actuator.coil.wire_diameter", Dimension::Length,
     [](const DesignPoint& p) { return p.design.actuator.coil.wire_diameter; },
     [](DesignPoint& p, double v) { p.design.actuator.coil.wire_diameter = v; }},
    {"actuator.coil.avg_field", Dimension::MagneticField,
     [](const DesignPoint& p) { return p.design.actuator.coil.avg_field; },
     [](DesignPoint& p, double v) { p.design.actuator.coil.avg_field = v; }},
    {"body.drag_coefficient", Dimension::Dimensionless,
     [](const DesignPoint& p) { return p.design.body.drag_coefficient; },
     [](DesignPoint& p, double v) { p.design.body.drag_coefficient = v; }},
    {"body.reference_area", Dimension::Area,
     [](const DesignPoint& p) { return p.design.body.reference_area; },
     [](DesignPoint& p, double v) { p.design.body.reference_area = v; }},
    {"body.air_density", Dimension::Density,
     [](const DesignPoint& p) { return p.design.body.air_density; },
     [](DesignPoint& p, double v) { p.design.body.air_density = v; }},
    {"body.gravity", Dimension::Acceleration,
     [](const DesignPoint& p) { return p.design.body.gravity; },
     [](DesignPoint& p, double v) { p.design.body.gravity = v; }},
    {"body.launch_efficiency", Dimension::Dimensionless,
     [](const DesignPoint& p) { return p.design.body.launch_efficiency; },
     [](DesignPoint& p, double v) { p.design.body.launch_efficiency = v; }},
    {"drive.amplitude", Dimension::Voltage,
     [](const DesignPoint& p) { return p.drive.amplitude; },
     [](DesignPoint& p, double v) { p.drive.amplitude = v; }},
    {"drive.frequency", Dimension::Frequency,
     [](const DesignPoint& p) { return p.drive.frequency; },
     [](DesignPoint& p, double v) { p.drive.frequency = v; }},
};

const FieldAccessor* find_field(const std::string& path) {
  for (const FieldAccessor& f : kFields) {
    if (path == f.path) return &f;
  }
  return nullptr;
}

const FieldAccessor& require_field(const std::string& path) {
  const FieldAccessor* f = find_field(path);
  if (f == nullptr) {
    std::string msg = "unknown field path '" + path + "', known paths:";
    for (const std::string& p : known_field_paths()) msg += "\n  " + p;
    throw SpecError(msg);
  }
  return *f;
}

}  // namespace

std::vector<std::string> known_field_paths() {
  std::vector<std::string> out;
  for (const FieldAccessor& f : kFields) out.emplace_back(f.path);
  return out;
}

bool is_known_field_path(const std::string& path) { return find_field(path) != nullptr; }

double get_field(const DesignPoint& point, const std::string& path) {
  return require_field(path).get(point);
}

void set_field(DesignPoint& point, const std::string& path, double value) {
  require_field(path).set(point, value);
}

units::Dimension field_dimension(const std::string& path) {
  return require_field(path).dim;
}

OptimizationProblem make_problem(RobotDesign baseline, DriveSource drive,
                                 std::vector<DesignVariable> variables, Objective objective) {
  OptimizationProblem problem;
  problem.variables = std::move(variables);
  problem.objective = objective;
  problem.amplitude_budget = drive.amplitude;
  problem.mass_budget = total_mass(baseline.body);
  problem.baseline = std::move(baseline);
  problem.drive = drive;
  return problem;
}

DesignReport evaluate_design(const RobotDesign& design, const DriveSource& drive) {
  require_valid(design);
  DesignReport report;

  const double k = effective_stiffness(design.spring);
  report.release_deflection = release_deflection(k, design.release);
  report.stored_energy = stored_energy(k, report.release_deflection);
  report.total_mass = total_mass(design.body);

  const double resistance = effective_resistance(design.actuator.coil);
  const double drive_current = drive.amplitude / resistance;
  const double available = available_torque(design.actuator, drive_current);
  const TorqueBudget torque = required_torque(design, report.release_deflection, available);
  report.torque_margin = available - torque.total_required;
  report.required_amplitude = stall_threshold_amplitude(design);
  report.strain_margin = design.spring.material.yield_strain -
                         max_strain(design.spring, report.release_deflection);

  const CycleTrace trace = simulate_cycle(design, drive);
  if (trace.release.has_value()) {
    report.released = true;
    report.apex = trace.apex_height;
    const long cycles = cycles_to_release(design);
    const double wind_time = static_cast<double>(cycles) / drive.frequency;
    const double flight_time = trace.flight.empty() ? 0.0 : trace.flight.back().time;
    double cycle_time = wind_time;
    if (flight_time > 0.1 * wind_time) cycle_time += flight_time;
    report.jump_rate = 60.0 / cycle_time;
  } else {
    report.stall_deflection = trace.stall->deflection;
  }
  return report;
}

namespace {

// Violation assigned to candidates that fail validation outright, keeping
// them ranked below every point that at least simulates.
constexpr double kInvalidViolation = 1e9;

struct Candidate {
  std::vector<double> u;       // internal [0,1] coordinates
  std::vector<double> values;  // natural units
  double objective = 0.0;
  bool feasible = false;
  double violation = 0.0;
};

class ProblemContext {
 public:
  explicit ProblemContext(const OptimizationProblem& problem) : problem_(problem) {
    if (problem.variables.empty()) {
      throw SpecError("OptimizationProblem: at least one variable is required");
    }
    if (!(problem.evaluation_budget >= 1)) {
      throw SpecError("OptimizationProblem: evaluation budget must be >= 1");
    }
    for (const DesignVariable& var : problem.variables) {
      require_field(var.path);
      if (!(var.lower <= var.upper) || !std::isfinite(var.lower) ||
          !std::isfinite(var.upper)) {
        throw SpecError("DesignVariable " + var.path + ": bounds must satisfy lower <= upper");
      }
      if (var.scale == VariableScale::Logarithmic && !(var.lower > 0.0)) {
        throw SpecError("DesignVariable " + var.path +
                        ": logarithmic scale requires lower > 0");
      }
    }
  }

  size_t dimensions() const { return problem_.variables.size(); }
  bool degenerate(size_t j) const {
    return problem_.variables[j].lower == problem_.variables[j].upper;
  }

  double decode(size_t j, double u) const {
    const DesignVariable& var = problem_.variables[j];
    if (var.scale == VariableScale::Logarithmic) {
      return var.lower * std::pow(var.upper / var.lower, u);
    }
    return var.lower + u * (var.upper - var.lower);
  }

  DesignPoint materialize(const std::vector<double>& u) const {
    DesignPoint point{problem_.baseline, problem_.drive};
    for (size_t j = 0; j < u.size(); ++j) {
      set_field(point, problem_.variables[j].path, decode(j, u[j]));
    }
    apply_arm_mass_coupling(point);
    return point;
  }

  Candidate evaluate(const std::vector<double>& u) {
    Candidate cand;
    cand.u = u;
    cand.values.reserve(u.size());
    for (size_t j = 0; j < u.size(); ++j) cand.values.push_back(decode(j, u[j]));
    try {
      const DesignPoint point = materialize(u);
      const DesignReport report = evaluate_design(point.design, point.drive);
      cand.objective =
          problem_.objective == Objective::ApexHeight ? report.apex : report.jump_rate;
      cand.violation = constraint_violation(point, report);
      cand.feasible = cand.violation == 0.0;
    } catch (const Error&) {
      cand.objective = 0.0;
      cand.violation = kInvalidViolation;
      cand.feasible = false;
    }
    return cand;
  }

  // Feasibility first; among infeasible, less violation; among feasible,
  // higher objective; exact ties go to the lexicographically greater point
  // so flat directions resolve toward upper bounds deterministically.
  bool better(const Candidate& a, const Candidate& b) const {
    if (a.feasible != b.feasible) return a.feasible;
    if (!a.feasible && a.violation != b.violation) return a.violation < b.violation;
    if (a.feasible && a.objective != b.objective) return a.objective > b.objective;
    return std::lexicographical_compare(b.u.begin(), b.u.end(), a.u.begin(), a.u.end());
  }

 private:
  void apply_arm_mass_coupling(DesignPoint& point) const {
    if (problem_.arm_mass_per_length == 0.0) return;
    const double delta_arm = point.design.actuator.moment_arm_length -
                             problem_.baseline.actuator.moment_arm_length;
    if (delta_arm == 0.0) return;
    const double delta_mass = problem_.arm_mass_per_length * delta_arm;
    for (MassItem& item : point.design.body.mass_items) {
      if (item.label.find("arm") != std::string::npos) {
        item.mass = std::max(0.0, item.mass + delta_mass);
        return;
      }
    }
    point.design.body.mass_items.push_back({"arm_mass_adjustment", std::max(0.0, delta_mass)});
  }

  double constraint_violation(const DesignPoint& point, const DesignReport& report) const {
    double violation = 0.0;
    if (!report.released) {
      violation += (report.release_deflection - report.stall_deflection) /
                   report.release_deflection;
    }
    if (problem_.amplitude_budget > 0.0 && report.required_amplitude > problem_.amplitude_budget) {
      violation +=
          (report.required_amplitude - problem_.amplitude_budget) / problem_.amplitude_budget;
    }
    if (report.strain_margin < 0.0) {
      violation += -report.strain_margin / point.design.spring.material.yield_strain;
    }
    if (problem_.mass_budget > 0.0 && report.total_mass > problem_.mass_budget) {
      violation += (report.total_mass - problem_.mass_budget) / problem_.mass_budget;
    }
    return violation;
  }

  const OptimizationProblem& problem_;
};

}  // namespace

OptimizationResult optimize(const OptimizationProblem& problem, unsigned /*seed*/) {
  ProblemContext ctx(problem);
  const size_t dims = ctx.dimensions();
  const long budget = problem.evaluation_budget;

  // Coarse grid, shrunk per dimension so the scan leaves room in the budget.
  int points = std::clamp(static_cast<int>(std::floor(
                              std::pow(static_cast<double>(budget), 1.0 / dims))),
                          2, std::max(2, problem.grid_points));
  std::vector<int> axis_points(dims);
  for (size_t j = 0; j < dims; ++j) axis_points[j] = ctx.degenerate(j) ? 1 : points;

  OptimizationResult result;
  Candidate best;
  bool have_best = false;
  long evaluations = 0;

  auto record = [&](const Candidate& cand) {
    result.history.push_back({cand.values, cand.objective, cand.feasible, cand.violation});
    ++evaluations;
    if (!have_best || ctx.better(cand, best)) {
      best = cand;
      have_best = true;
    }
  };

  std::vector<int> index(dims, 0);
  std::vector<double> u(dims, 0.0);
  while (evaluations < budget) {
    for (size_t j = 0; j < dims; ++j) {
      u[j] = axis_points[j] == 1 ? 0.0
                                 : static_cast<double>(index[j]) / (axis_points[j] - 1);
    }
    record(ctx.evaluate(u));

    size_t j = 0;
    for (; j < dims; ++j) {
      if (++index[j] < axis_points[j]) break;
      index[j] = 0;
    }
    if (j == dims) break;  // grid exhausted
  }

  // Compass refinement from the best grid point.
  if (have_best && evaluations < budget) {
    std::vector<double> steps(dims);
    for (size_t j = 0; j < dims; ++j) {
      steps[j] = axis_points[j] == 1 ? 0.0 : 1.0 / (axis_points[j] - 1);
    }
    constexpr double kMinStep = 1e-4;  // of each variable's range

    bool any_step_live = true;
    while (any_step_live && evaluations < budget) {
      bool improved = false;
      for (size_t j = 0; j < dims && evaluations < budget; ++j) {
        if (steps[j] == 0.0) continue;
        for (double direction : {+1.0, -1.0}) {
          std::vector<double> trial = best.u;
          trial[j] = std::clamp(trial[j] + direction * steps[j], 0.0, 1.0);
          if (trial[j] == best.u[j]) continue;
          Candidate cand = ctx.evaluate(trial);
          const bool take = ctx.better(cand, best);
          record(cand);
          if (take) {
            improved = true;
            break;
          }
          if (evaluations >= budget) break;
        }
        if (improved) break;
      }
      if (!improved) {
        any_step_live = false;
        for (double& s : steps) {
          s *= 0.5;
          if (s >= kMinStep) any_step_live = true;
        }
      }
    }
  }

  const DesignPoint best_point = ctx.materialize(best.u);
  result.best_design = best_point.design;
  result.best_drive = best_point.drive;
  result.best_objective = best.objective;
  result.feasible = best.feasible;
  result.evaluations = evaluations;
  return result;
}

}  // namespace jumpbot
