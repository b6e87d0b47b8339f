#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "afl/sim.hpp"

namespace afl {

// One recorded timestep. Pair (t, t + 1) of a sequence is a training
// transition: inputs from step t, target steps[t + 1].observed_delta.
struct TimeStep {
  sim::Vec2 position = sim::Vec2::Zero();       // observed p_t
  sim::Vec2 true_position = sim::Vec2::Zero();  // noise-free p_t
  sim::Vec2 observed_delta = sim::Vec2::Zero(); // observed delta p_t
  sim::SensoryVector sensors = sim::SensoryVector::Zero();
  sim::Action action = sim::Action::Zero();     // a_t
  bool scored = true;  // whether pair (t, t + 1) counts toward losses
};

struct Sequence {
  std::vector<TimeStep> steps;

  std::size_t length() const { return steps.size(); }
  std::size_t pairs() const { return steps.empty() ? 0 : steps.size() - 1; }
  std::size_t scored_pairs() const;
  const sim::Vec2& target(std::size_t t) const {
    return steps[t + 1].observed_delta;
  }
};

// Recomputes every step's sensory vector from its (observed) position.
// Observed positions pushed outside the borders by noise are probed at the
// nearest border point.
void attach_sensors(Sequence& seq, const sim::EnvironmentSpec& spec,
                    double range);

sim::Vec2 clamp_to_bounds(const sim::Vec2& p, const sim::EnvironmentSpec& spec);

// CSV: t,p_x,p_y,dp_x,dp_y,a_1..a_4,v_0..v_31 (observed positions).
void write_trajectory_csv(std::ostream& out, const Sequence& seq);

// Fixed-width formatting used by every CSV writer ("%.10g").
std::string format_double(double x);

}  // namespace afl
