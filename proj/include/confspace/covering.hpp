#ifndef CONFSPACE_COVERING_HPP
#define CONFSPACE_COVERING_HPP

#include "confspace/configuration.hpp"
#include "confspace/perm_group.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace confspace {

/// Loop closure tolerance on the quotient distance between endpoints.
inline constexpr double kClosureTolerance = 1e-9;

/// A finite sample of a path, either in X^n or (as representatives) in X^n/G.
struct PathSamples
{
  std::vector<Configuration> samples;
  bool closed = false;

  std::size_t size() const { return samples.size(); }
  const Configuration& front() const { return samples.front(); }
  const Configuration& back() const { return samples.back(); }
};

struct LiftResult
{
  PathSamples lift;
  /// For a closed input path: the g with lift end == act(g, lift start).
  std::optional<Permutation> deck;
};

struct LiftOptions
{
  double distinct_tol = kDistinctTolerance;
  double closure_tol = kClosureTolerance;
  /// Use one conservative radius (the minimum over the path) for every step
  /// instead of the radius at the current sample.
  bool global_radius = false;
};

/// delta = epsilon / 5: the quotient ball of this radius around p(x) is evenly
/// covered by the disjoint balls B(g x, delta).
double evenly_covered_radius(const PermGroup& group, const Configuration& x,
                             double tol = kDistinctTolerance);

/**
 * Lifts a quotient path through p : X^n -> X^n/G starting at `basepoint`.
 *
 * Each sample is moved onto the sheet nearest the previous lifted sample. A
 * step is accepted only if it is shorter than the evenly covered radius there,
 * which makes the choice of sheet unique; otherwise AmbiguousLift is thrown
 * and the caller must resample.
 */
LiftResult lift_path(const PermGroup& group, const PathSamples& path,
                     const Configuration& basepoint, const LiftOptions& options = {});

/// The deck element of the lift of a closed loop. Throws OpenLoop if the loop
/// does not close in the quotient.
Permutation monodromy(const PermGroup& group, const PathSamples& loop,
                      const Configuration& basepoint, const LiftOptions& options = {});

/// Monodromy based at the first sample.
Permutation monodromy(const PermGroup& group, const PathSamples& loop,
                      const LiftOptions& options = {});

/// `a` followed by `b`, dropping b's first sample. Throws EndpointMismatch
/// unless a ends where b starts in the quotient.
PathSamples concatenate(const PermGroup& group, const PathSamples& a, const PathSamples& b,
                        double tol = kClosureTolerance);

PathSamples reverse(const PathSamples& path);

/// Inserts one sample between every pair of neighbours: the midpoint of the
/// first and the orbit member of the second closest to it.
PathSamples refine_path(const PermGroup& group, const PathSamples& path);

/// Lifts, halving every step on AmbiguousLift up to `max_rounds` times.
LiftResult lift_path_resampled(const PermGroup& group, const PathSamples& path,
                               const Configuration& basepoint, std::size_t max_rounds,
                               const LiftOptions& options = {});

struct LocalIsometryReport
{
  std::size_t trials = 0;
  double radius = 0.0;
  double epsilon = 0.0;
  double max_deviation = 0.0;
};

/**
 * Samples `trials` pairs z, w uniformly from the ball B(x, radius) and records
 * the largest |d(z, w) - dbar(z, w)|. With the default radius epsilon/5 the
 * projection is an isometry on the ball and the deviation is rounding only.
 */
LocalIsometryReport verify_local_isometry(const PermGroup& group, const Configuration& x,
                                          std::size_t trials, std::uint64_t seed,
                                          std::optional<double> radius = std::nullopt);

} // namespace confspace

#endif // CONFSPACE_COVERING_HPP
