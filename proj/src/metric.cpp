#include "confspace/metric.hpp"

#include "confspace/assignment.hpp"
#include "confspace/errors.hpp"

#include <limits>

namespace confspace {

namespace {

void require_group_arity(const PermGroup& group, const Configuration& x, const char* where)
{
  if (static_cast<Eigen::Index>(group.arity()) != x.n()) {
    throw ArityMismatch(std::string(where) + ": group acts on " + std::to_string(group.arity()) +
                        " points, configuration has " + std::to_string(x.n()));
  }
}

// Brute force beats the assignment solver for tiny symmetric groups.
constexpr std::size_t kAssignmentMinArity = 6;

} // namespace

QuotientDistanceResult quotient_distance(const PermGroup& group, const Configuration& x,
                                         const Configuration& y)
{
  require_same_shape(x, y, "quotient_distance");
  require_group_arity(group, x, "quotient_distance");

  QuotientDistanceResult best{std::numeric_limits<double>::infinity(), group.identity()};
  for (const auto& g : group) {
    const double value = tuple_distance(x, act(g, y));
    if (value < best.value) {
      best = {value, g};
    }
  }
  return best;
}

QuotientDistanceResult quotient_distance_assignment(const Configuration& x,
                                                    const Configuration& y)
{
  require_same_shape(x, y, "quotient_distance_assignment");
  const Eigen::Index n = x.n();
  Eigen::MatrixXd cost(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      cost(i, j) = (x.point(i) - y.point(j)).squaredNorm();
    }
  }
  const auto matching = solve_assignment(cost);
  std::vector<int> map(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[static_cast<std::size_t>(matching.row_to_col[i])] = static_cast<int>(i);
  }
  Permutation witness(std::move(map));
  const double value = tuple_distance(x, act(witness, y));
  return {value, std::move(witness)};
}

QuotientDistanceResult quotient_distance_auto(const PermGroup& group, const Configuration& x,
                                              const Configuration& y)
{
  if (group.arity() >= kAssignmentMinArity && group.is_full_symmetric()) {
    require_group_arity(group, x, "quotient_distance");
    return quotient_distance_assignment(x, y);
  }
  return quotient_distance(group, x, y);
}

double separation_radius(const PermGroup& group, const Configuration& x, double tol)
{
  require_group_arity(group, x, "separation_radius");
  if (group.order() < 2) {
    throw TrivialGroup("separation radius needs a non-identity group element");
  }
  double epsilon = std::numeric_limits<double>::infinity();
  for (const auto& g : group) {
    if (!g.is_identity()) {
      epsilon = std::min(epsilon, tuple_distance(x, act(g, x)));
    }
  }
  if (!(epsilon > tol)) {
    throw NonFreePoint("a non-identity element moves the configuration by only " +
                       std::to_string(epsilon));
  }
  return epsilon;
}

Configuration canonical_representative(const PermGroup& group, const Configuration& x)
{
  require_group_arity(group, x, "canonical_representative");
  Configuration best = x;
  for (const auto& g : group) {
    Configuration candidate = act(g, x);
    if (flat_less(candidate, best)) {
      best = std::move(candidate);
    }
  }
  return best;
}

std::vector<Configuration> rectify_cauchy_sequence(const PermGroup& group,
                                                   const std::vector<Configuration>& xs)
{
  std::vector<Configuration> ys;
  ys.reserve(xs.size());
  if (xs.empty()) {
    return ys;
  }
  require_group_arity(group, xs.front(), "rectify_cauchy_sequence");
  Permutation prefix = group.identity();
  ys.push_back(xs.front());
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const auto step = quotient_distance(group, xs[k], xs[k + 1]);
    prefix = compose(prefix, step.witness);
    ys.push_back(act(prefix, xs[k + 1]));
  }
  return ys;
}

} // namespace confspace
