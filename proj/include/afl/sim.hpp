#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "afl/rng.hpp"

namespace afl::sim {

using Vec2 = Eigen::Vector2d;

// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  bool contains(const Vec2& p) const {
    return p.x() >= x0 && p.x() <= x1 && p.y() >= y0 && p.y() <= y1;
  }
  // Euclidean distance from p to the closest point of the rectangle; zero
  // inside.
  double distance_to(const Vec2& p) const;
};

struct ForceField {
  Rect area;
  double acceleration = 0.0;  // signed, along +x
};

struct FogField {
  Rect area;
  double sigma = 0.0;
};

struct EnvironmentSpec {
  double width = 20.0;
  double height = 20.0;
  double agent_radius = 0.4;
  double thrust_coefficient = 0.2;
  double drag = 0.8;
  std::vector<Rect> obstacles;
  std::vector<ForceField> force_fields;
  std::vector<FogField> fog_fields;
  std::optional<Rect> eval_region;

  // Throws std::invalid_argument describing the first violated invariant.
  void validate() const;

  double diagonal() const;
  bool inside_fog(const Vec2& p) const;
  bool inside_bounds(const Vec2& p) const {
    return p.x() >= 0.0 && p.x() <= width && p.y() >= 0.0 && p.y() <= height;
  }
};

struct AgentState {
  Vec2 position = Vec2::Zero();
  Vec2 velocity = Vec2::Zero();
};

// Jet activations, one per diagonal thruster.
using Action = Eigen::Vector4d;

Action clamp_action(const Action& a);

inline constexpr int kRays = 8;
inline constexpr int kChannels = 4;
inline constexpr int kSensorSize = kRays * kChannels;

// Sensor layout: index = ray * kChannels + channel. Rays point at angles
// ray * 45 degrees, counter-clockwise from +x.
enum Channel : int {
  kWall = 0,        // borders and obstacles
  kForceLeft = 1,   // force fields with negative acceleration
  kForceRight = 2,  // force fields with positive acceleration
  kFog = 3,
};

using SensoryVector = Eigen::Matrix<double, kSensorSize, 1>;

enum class SensorMode { global, local };

std::string to_string(SensorMode mode);
SensorMode sensor_mode_from_string(const std::string& text);

struct StepResult {
  AgentState state;
  Vec2 observed_position;
};

// Advances the agent by one time step. Actions are clamped to [0, 1]^4.
// Only fog noise draws from `rng`, so true dynamics are independent of it.
StepResult step(const AgentState& state, const Action& action,
                const EnvironmentSpec& spec, Rng& rng);

// Net acceleration from the jets alone (before drag).
Vec2 jet_acceleration(const Action& action, double thrust_coefficient);

// Sum of horizontal accelerations of all force fields containing p.
double field_acceleration(const EnvironmentSpec& spec, const Vec2& p);

// Standard deviation of observation noise at p (largest containing fog).
double fog_sigma(const EnvironmentSpec& spec, const Vec2& p);

// Maximum one-step acceleration magnitude: jets plus the strongest field.
double max_acceleration(const EnvironmentSpec& spec);

// Drag-limited terminal speed a_max * drag / (1 - drag). Throws
// std::domain_error when drag == 1.
double terminal_speed(const EnvironmentSpec& spec);

// Range within which everything that can affect the next step is visible.
double local_sensor_range(const EnvironmentSpec& spec);

double sensor_range(const EnvironmentSpec& spec, SensorMode mode);

// The look-up map: per-ray proximities max(0, 1 - d / range) to the nearest
// boundary of each entity type. Throws std::out_of_range outside borders.
SensoryVector lookup_omega(const Vec2& position, const EnvironmentSpec& spec,
                           double range);

// Ray distance from `origin` along unit `dir` to the boundary of `rect`;
// zero if origin is inside, +inf if the ray misses.
double ray_rect_distance(const Vec2& origin, const Vec2& dir, const Rect& rect);

// Ray distance to the world border from a point inside it.
double ray_border_distance(const Vec2& origin, const Vec2& dir,
                           const EnvironmentSpec& spec);

const std::array<Vec2, kRays>& ray_directions();

// True when a disc of agent_radius at p lies inside the borders and overlaps
// no obstacle interior (tolerance `slack` for touching contact).
bool is_free(const EnvironmentSpec& spec, const Vec2& p, double slack = 1e-9);

// Uniformly sampled collision-free position (rejection sampling).
Vec2 sample_free_position(const EnvironmentSpec& spec, Rng& rng);

}  // namespace afl::sim
