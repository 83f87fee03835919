#include "confspace/covering.hpp"

#include "confspace/errors.hpp"
#include "confspace/metric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace confspace {

std::size_t AmbiguousLift::suggested_subdivision() const
{
  if (!(radius_ > 0.0)) {
    return 2;
  }
  return static_cast<std::size_t>(std::floor(step_length_ / radius_)) + 1;
}

namespace {

// Deck identification tolerance, relative to epsilon at the basepoint.
constexpr double kDeckTolerance = 1e-6;

void check_path_shape(const PathSamples& path)
{
  if (path.size() < 2) {
    throw ShapeMismatch("a path needs at least two samples");
  }
  for (const auto& s : path.samples) {
    require_same_shape(path.front(), s, "path sample");
  }
}

} // namespace

double evenly_covered_radius(const PermGroup& group, const Configuration& x, double tol)
{
  return separation_radius(group, x, tol) / 5.0;
}

LiftResult lift_path(const PermGroup& group, const PathSamples& path,
                     const Configuration& basepoint, const LiftOptions& options)
{
  check_path_shape(path);
  require_same_shape(path.front(), basepoint, "lift_path basepoint");

  if (!is_free_point(basepoint, options.distinct_tol)) {
    throw NonFreeSample("basepoint has coincident points");
  }
  std::vector<double> radii(path.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (!is_free_point(path.samples[k], options.distinct_tol)) {
      throw NonFreeSample("sample " + std::to_string(k) + " has coincident points");
    }
    // epsilon is orbit-invariant, so the radius at the lifted sample equals
    // the radius at its representative.
    radii[k] = evenly_covered_radius(group, path.samples[k], options.distinct_tol);
  }
  if (options.global_radius) {
    std::fill(radii.begin(), radii.end(), *std::min_element(radii.begin(), radii.end()));
  }

  const double fiber_gap = quotient_distance_auto(group, basepoint, path.front()).value;
  if (fiber_gap > options.closure_tol) {
    throw BasepointNotInFiber("basepoint is " + std::to_string(fiber_gap) +
                              " away from the first sample's orbit");
  }

  LiftResult result;
  result.lift.closed = path.closed;
  result.lift.samples.reserve(path.size());
  result.lift.samples.push_back(basepoint);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const Configuration& current = result.lift.samples.back();
    const auto nearest = quotient_distance_auto(group, current, path.samples[k + 1]);
    if (!(nearest.value < radii[k])) {
      std::ostringstream msg;
      msg << "step " << k << " has length " << nearest.value
          << ", not below the evenly covered radius " << radii[k];
      throw AmbiguousLift(msg.str(), k, nearest.value, radii[k]);
    }
    result.lift.samples.push_back(act(nearest.witness, path.samples[k + 1]));
  }

  if (path.closed) {
    const double gap = quotient_distance_auto(group, path.front(), path.back()).value;
    if (gap > options.closure_tol) {
      throw OpenLoop("loop endpoints are " + std::to_string(gap) + " apart in the quotient");
    }
    const double epsilon = separation_radius(group, basepoint, options.distinct_tol);
    const Configuration& end = result.lift.back();
    for (const auto& g : group) {
      if (tuple_distance(end, act(g, basepoint)) <= kDeckTolerance * epsilon) {
        result.deck = g;
        break;
      }
    }
    if (!result.deck) {
      throw OpenLoop("lifted endpoint matches no point of the basepoint fiber");
    }
  }
  return result;
}

Permutation monodromy(const PermGroup& group, const PathSamples& loop,
                      const Configuration& basepoint, const LiftOptions& options)
{
  if (!loop.closed) {
    throw OpenLoop("monodromy needs a closed loop");
  }
  return *lift_path(group, loop, basepoint, options).deck;
}

Permutation monodromy(const PermGroup& group, const PathSamples& loop, const LiftOptions& options)
{
  check_path_shape(loop);
  return monodromy(group, loop, loop.front(), options);
}

PathSamples concatenate(const PermGroup& group, const PathSamples& a, const PathSamples& b,
                        double tol)
{
  if (a.samples.empty() || b.samples.empty()) {
    throw ShapeMismatch("cannot concatenate an empty path");
  }
  const double gap = quotient_distance_auto(group, a.back(), b.front()).value;
  if (gap > tol) {
    throw EndpointMismatch("paths meet " + std::to_string(gap) + " apart in the quotient");
  }
  PathSamples result;
  result.samples = a.samples;
  result.samples.insert(result.samples.end(), b.samples.begin() + 1, b.samples.end());
  if (result.samples.size() < 2) {
    result.samples.push_back(a.back());
  }
  result.closed = quotient_distance_auto(group, result.front(), result.back()).value <= tol;
  return result;
}

PathSamples reverse(const PathSamples& path)
{
  PathSamples result = path;
  std::reverse(result.samples.begin(), result.samples.end());
  return result;
}

PathSamples refine_path(const PermGroup& group, const PathSamples& path)
{
  check_path_shape(path);
  PathSamples result;
  result.closed = path.closed;
  result.samples.reserve(2 * path.size() - 1);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const Configuration& a = path.samples[k];
    const auto nearest = quotient_distance_auto(group, a, path.samples[k + 1]);
    const Configuration b = act(nearest.witness, path.samples[k + 1]);
    result.samples.push_back(a);
    result.samples.push_back(Configuration((a.points() + b.points()) / 2.0));
  }
  result.samples.push_back(path.back());
  return result;
}

LiftResult lift_path_resampled(const PermGroup& group, const PathSamples& path,
                               const Configuration& basepoint, std::size_t max_rounds,
                               const LiftOptions& options)
{
  PathSamples current = path;
  for (std::size_t round = 0;; ++round) {
    try {
      return lift_path(group, current, basepoint, options);
    } catch (const AmbiguousLift&) {
      if (round >= max_rounds) {
        throw;
      }
      current = refine_path(group, current);
    }
  }
}

LocalIsometryReport verify_local_isometry(const PermGroup& group, const Configuration& x,
                                          std::size_t trials, std::uint64_t seed,
                                          std::optional<double> radius)
{
  LocalIsometryReport report;
  report.epsilon = separation_radius(group, x);
  report.radius = radius.value_or(report.epsilon / 5.0);
  report.trials = trials;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const Eigen::Index dim = x.n() * x.d();

  auto sample_ball = [&]() {
    Eigen::VectorXd direction(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      direction[i] = normal(rng);
    }
    const double r = report.radius * std::pow(uniform(rng), 1.0 / static_cast<double>(dim));
    Eigen::VectorXd p = x.flat() + r * direction.normalized();
    return Configuration::from_flat(p, x.n(), x.d());
  };

  for (std::size_t t = 0; t < trials; ++t) {
    const Configuration z = sample_ball();
    const Configuration w = sample_ball();
    const double deviation =
        std::abs(tuple_distance(z, w) - quotient_distance(group, z, w).value);
    report.max_deviation = std::max(report.max_deviation, deviation);
  }
  return report;
}

} // namespace confspace
