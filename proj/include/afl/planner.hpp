#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "afl/data.hpp"
#include "afl/rng.hpp"
#include "afl/uncertainty.hpp"
#include "afl/world_model.hpp"

namespace afl::planner {

struct PlannerConfig {
  int horizon = 10;
  int population = 50;
  int elites = 10;
  int iterations = 5;
  double init_std = 0.5;
  double min_std = 0.05;  // floor applied after every refit

  void validate() const;
};

// 4 x H matrix of jet activations in [0, 1].
using ActionSequence = Eigen::MatrixXd;

struct Plan {
  ActionSequence actions;
  double objective = 0.0;
  std::vector<double> iteration_best;  // best-so-far after each iteration
};

// Scores every candidate of a population; higher is better.
using BatchObjective =
    std::function<Eigen::VectorXd(std::span<const ActionSequence>)>;

// Cross-entropy method over per-step diagonal Gaussians clamped to [0, 1].
// `initial_mean` (4 x H) defaults to 0.5 everywhere.
Plan cem_optimize(const BatchObjective& objective, const PlannerConfig& config,
                  Rng& rng, const ActionSequence* initial_mean = nullptr);

struct PlanningStart {
  sim::Vec2 position = sim::Vec2::Zero();
  sim::Vec2 delta = sim::Vec2::Zero();
};

// Scores lock-step ensemble imagination of a population.
using ImaginationObjective =
    std::function<Eigen::VectorXd(const model::BatchImagination&)>;

Plan plan(std::span<const model::WorldModel> ensemble, const PlanningStart& start,
          const ImaginationObjective& objective, const sim::EnvironmentSpec& spec,
          double sensor_range, const PlannerConfig& config, Rng& rng,
          const ActionSequence* initial_mean = nullptr);

// Sum over the horizon of the measure at every imagined state. EU_JSD draws
// its standard normals once per call and shares them across candidates.
Plan plan(std::span<const model::WorldModel> ensemble, const PlanningStart& start,
          const uncertainty::UncertaintyMeasure& measure,
          const sim::EnvironmentSpec& spec, double sensor_range,
          const PlannerConfig& config, Rng& rng,
          const ActionSequence* initial_mean = nullptr);

// Negative distance of the final imagined position to `goal`.
ImaginationObjective goal_objective(const sim::Vec2& goal);

// Observation model: position corrupted by fog noise where applicable.
sim::Vec2 observe(const sim::Vec2& position, const sim::EnvironmentSpec& spec,
                  Rng& noise_rng);

// Receding-horizon control: plan, execute the first action, record, re-plan.
// Executes `steps` actions and returns steps + 1 recorded timesteps.
// `plan_rng` drives CEM and Monte-Carlo sampling, `env_rng` fog noise.
Sequence act_mpc(std::span<const model::WorldModel> ensemble,
                 const sim::EnvironmentSpec& spec, const sim::AgentState& start,
                 const uncertainty::UncertaintyMeasure& measure,
                 const PlannerConfig& config, double sensor_range, int steps,
                 Rng& plan_rng, Rng& env_rng);

}  // namespace afl::planner
