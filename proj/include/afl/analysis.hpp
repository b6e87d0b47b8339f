#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "afl/data.hpp"
#include "afl/sim.hpp"
#include "afl/world_model.hpp"

namespace afl::analysis {

// Grids cover the environment bounds exactly. Row 0 is the top row (largest
// y), column 0 the left column, matching image orientation.
sim::Vec2 cell_center(const sim::EnvironmentSpec& spec, int rows, int cols,
                      int row, int col);

struct PcaResult {
  Eigen::VectorXd mean;
  Eigen::MatrixXd components;  // d x k, orthonormal columns
  Eigen::VectorXd variances;   // k eigenvalues, descending
  double total_variance = 0.0;
};

// Population-covariance PCA of `samples` (one sample per row). Each component
// is sign-fixed so its largest-magnitude entry is positive.
PcaResult pca(const Eigen::MatrixXd& samples, int k);

struct AffordanceMap {
  int rows = 0;
  int cols = 0;
  std::vector<model::Code> codes;       // row-major
  std::vector<Eigen::Vector3d> rgb;     // row-major, each channel in [0, 1]
  bool degenerate = false;
  std::string warning;

  const Eigen::Vector3d& color(int row, int col) const {
    return rgb[static_cast<std::size_t>(row) * cols + col];
  }
};

// Codes at cell centres, projected onto the top three principal components
// of this map's codes and min-max normalised per channel. Constant codes give
// uniform mid-gray with `degenerate` set and a warning.
AffordanceMap affordance_map(const model::WorldModel& model,
                             const sim::EnvironmentSpec& spec, int rows,
                             int cols, double sensor_range);

struct Heatmap {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;  // row-major counts, or fractions once normalised
  bool normalized = false;

  double at(int row, int col) const {
    return values[static_cast<std::size_t>(row) * cols + col];
  }
  double total() const;
  double max() const;
};

// 2D histogram. Positions outside the bounds are clamped onto the edge cells.
// Throws std::invalid_argument on empty input or a zero-sized grid.
Heatmap heatmap(std::span<const sim::Vec2> positions,
                const sim::EnvironmentSpec& spec, int rows, int cols,
                bool normalize = false);

Heatmap normalized(const Heatmap& h);

// Fraction of positions inside any fog rectangle.
double fog_fraction(std::span<const sim::Vec2> positions,
                    const sim::EnvironmentSpec& spec);

struct SpeedStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

// Quartiles with linear interpolation between order statistics.
SpeedStats quartiles(std::vector<double> values);

// Per-step speeds |p_{t+1} - p_t| from true positions.
std::vector<double> speeds(std::span<const Sequence> sequences);
SpeedStats summarize_speeds(std::span<const Sequence> sequences);

// Binary P6 image, 8-bit RGB, row-major from the top-left pixel.
using Pixel = std::array<std::uint8_t, 3>;
void write_ppm(const std::filesystem::path& path, int rows, int cols,
               std::span<const Pixel> pixels);
std::vector<Pixel> read_ppm(const std::filesystem::path& path, int& rows,
                            int& cols);

std::uint8_t to_byte(double unit);

// Writes `path` (P6) and `path` with extension .csv holding the raw values.
// Affordance sidecar: row,col,c_0..c_4,r,g,b. Heatmap sidecar: one grid row
// per line. Values use %.17g so re-parsing is exact.
void export_image(const AffordanceMap& map, const std::filesystem::path& path);
void export_image(const Heatmap& map, const std::filesystem::path& path);

AffordanceMap read_affordance_csv(const std::filesystem::path& path);
Heatmap read_heatmap_csv(const std::filesystem::path& path);

// Free cells whose local sensory vector sees an obstacle edge but no border,
// each paired with a free cell that sees only the border and has the same
// sensory vector.
struct CellPair {
  int row_a = 0, col_a = 0;  // obstacle-edge cell
  int row_b = 0, col_b = 0;  // border cell
};

std::vector<CellPair> equivalent_edge_cells(const sim::EnvironmentSpec& spec,
                                            int rows, int cols,
                                            double local_range);

// Largest per-channel RGB difference of each pair.
std::vector<double> pair_color_differences(const AffordanceMap& map,
                                           std::span<const CellPair> pairs);

}  // namespace afl::analysis
