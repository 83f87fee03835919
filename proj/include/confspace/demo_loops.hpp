#ifndef CONFSPACE_DEMO_LOOPS_HPP
#define CONFSPACE_DEMO_LOOPS_HPP

#include "confspace/covering.hpp"

#include <cstdint>
#include <vector>

namespace confspace::demo {

/// Minimum number of steps per half turn; finer than the evenly covered
/// radius of unit-spaced points.
inline constexpr std::size_t kMinSteps = 8;

/// Point k at (k, 0, ..., 0) in R^d.
Configuration line_configuration(std::size_t n, std::size_t d);

/**
 * Points i and j of the line configuration turn rigidly about their midpoint
 * in the plane of the first two axes, through `turns` half turns, sampled
 * with `steps` equal steps. One half turn exchanges the two points.
 */
PathSamples rigid_turn_loop(std::size_t n, std::size_t d, std::size_t steps, std::size_t i,
                            std::size_t j, std::size_t half_turns);

inline PathSamples swap_loop(std::size_t n, std::size_t d, std::size_t steps, std::size_t i = 0,
                             std::size_t j = 1)
{
  return rigid_turn_loop(n, d, steps, i, j, 1);
}

inline PathSamples rotation_loop(std::size_t n, std::size_t d, std::size_t steps,
                                 std::size_t i = 0, std::size_t j = 1)
{
  return rigid_turn_loop(n, d, steps, i, j, 2);
}

/// The unit constant loop at the line configuration.
PathSamples constant_loop(std::size_t n, std::size_t d, std::size_t steps);

/// Exchange of the points currently at slots `slot` and `slot + 1`.
struct BraidLetter
{
  std::size_t slot = 0;
  /// Direction of the half turn.
  bool positive = true;
  /// Unit vector orthogonal to the first axis spanning the turning plane with
  /// it; empty means the second axis.
  Eigen::VectorXd plane;
};

/**
 * Concatenated half turns starting at the line configuration; every sample
 * keeps all points at least 1 apart. An empty word gives the constant loop.
 */
PathSamples braid_loop(std::size_t n, std::size_t d, const std::vector<BraidLetter>& word,
                       std::size_t steps_per_letter);

/// A seeded random braid word of 1 to 4 letters (each in a random tilted
/// plane, random direction) realised with `steps` steps in total.
PathSamples random_braid(std::size_t n, std::size_t d, std::size_t steps, std::uint64_t seed);

} // namespace confspace::demo

#endif // CONFSPACE_DEMO_LOOPS_HPP
