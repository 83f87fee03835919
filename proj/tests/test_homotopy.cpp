#include "confspace/demo_loops.hpp"
#include "confspace/errors.hpp"
#include "confspace/homotopy.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace confspace;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v)
{
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index k = 0;
  for (double x : v) {
    out[k++] = x;
  }
  return out;
}

Eigen::VectorXd gaussian(std::mt19937_64& rng, Eigen::Index n)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    v[k] = normal(rng);
  }
  return v;
}

AffineSubspace random_subspace(std::mt19937_64& rng, Eigen::Index dim, Eigen::Index codim,
                               const Eigen::VectorXd& anchor)
{
  Eigen::MatrixXd dirs(dim, dim - codim);
  for (Eigen::Index c = 0; c < dirs.cols(); ++c) {
    dirs.col(c) = gaussian(rng, dim);
  }
  return AffineSubspace::from_directions(anchor, dirs);
}

/// Minimum of |offset| over a barycentric grid with `steps` subdivisions.
double grid_triangle_distance(const Eigen::VectorXd& p0, const Eigen::VectorXd& p1,
                              const Eigen::VectorXd& p2, const AffineSubspace& a, int steps)
{
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; i + j <= steps; ++j) {
      const double s = static_cast<double>(i) / steps;
      const double t = static_cast<double>(j) / steps;
      const Eigen::VectorXd q = p0 + s * (p1 - p0) + t * (p2 - p0);
      best = std::min(best, (a.normals().transpose() * (q - a.anchor())).norm());
    }
  }
  return best;
}

Polyline flatten_closed(const PathSamples& path)
{
  Polyline poly;
  poly.closed = true;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    poly.vertices.emplace_back(path.samples[k].flat());
  }
  return poly;
}

void expect_valid_trace(const ReductionTrace& trace, const CollisionSet& set)
{
  EXPECT_LE(trace.final.size(), 2u);
  std::size_t count = trace.initial.size();
  for (const auto& e : trace.steps) {
    EXPECT_GT(e.clearance_after, 0.0);
    EXPECT_NEAR(e.clearance_after, polyline_clearance(e.polyline_after, set), 1e-15);
    if (e.kind == ReductionEventKind::TriangleCollapse ||
        e.kind == ReductionEventKind::CollinearMerge) {
      EXPECT_LT(e.polyline_after.size(), count);
    }
    count = e.polyline_after.size();
  }
}

} // namespace

TEST(CollisionSubspace, Examples)
{
  const auto l01 = collision_subspace(0, 1, 2, 3);
  EXPECT_EQ(l01.ambient_dim(), 6);
  EXPECT_EQ(l01.codimension(), 3);
  EXPECT_EQ(l01.dimension(), 3);

  const auto p = vec({0, 0, 0, 1, 0, 0});
  const auto swapped = vec({1, 0, 0, 0, 0, 0});
  EXPECT_NEAR(subspace_distance(p, l01), 1.0 / std::sqrt(2.0), 1e-15);
  // The straight segment between the two orderings passes through x_0 = x_1.
  EXPECT_NEAR(segment_distance(p, swapped, l01), 0.0, 1e-15);

  EXPECT_THROW(collision_subspace(0, 1, 2, 2), DimensionTooLow);
  EXPECT_THROW(collision_subspace(1, 1, 2, 3), BadIndices);
  EXPECT_THROW(collision_subspace(0, 2, 2, 3), BadIndices);
  EXPECT_EQ(collision_set(4, 3).size(), 6u);
}

TEST(AffineSubspace, FromDirections)
{
  Eigen::MatrixXd dirs(4, 1);
  dirs << 1, 0, 0, 0;
  const auto a = AffineSubspace::from_directions(Eigen::VectorXd::Zero(4), dirs);
  EXPECT_EQ(a.codimension(), 3);
  EXPECT_NEAR(subspace_distance(vec({5, 1, 2, 2}), a), 3.0, 1e-14);

  Eigen::MatrixXd two(4, 2);
  two << 1, 0, 0, 1, 0, 0, 0, 0;
  EXPECT_THROW(AffineSubspace::from_directions(Eigen::VectorXd::Zero(4), two), DimensionTooLow);
  // Rank-deficient spanning sets are fine.
  Eigen::MatrixXd repeated(4, 2);
  repeated << 1, 2, 0, 0, 0, 0, 0, 0;
  EXPECT_EQ(AffineSubspace::from_directions(Eigen::VectorXd::Zero(4), repeated).dimension(), 1);
  EXPECT_THROW(subspace_distance(vec({1, 2}), a), DimensionMismatch);
}

TEST(TriangleDistance, MatchesGridOracle)
{
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index dim = 6 + trial % 7;
    const auto p0 = gaussian(rng, dim);
    const auto p1 = gaussian(rng, dim);
    const auto p2 = gaussian(rng, dim);
    const auto a = random_subspace(rng, dim, 3, 0.3 * gaussian(rng, dim));
    const double exact = triangle_distance(p0, p1, p2, a);
    const double grid = grid_triangle_distance(p0, p1, p2, a, 200);
    const double spacing = ((p1 - p0).norm() + (p2 - p0).norm()) / 200.0;
    EXPECT_LE(exact, grid + 1e-12);
    EXPECT_LE(grid - exact, spacing);
    EXPECT_LE(exact, segment_distance(p0, p1, a) + 1e-15);
  }
}

TEST(PerturbationDirection, ShiftRaisesDistanceExactly)
{
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index dim = 6 + trial % 7;
    const auto p0 = gaussian(rng, dim);
    const auto p1 = gaussian(rng, dim);
    const auto p2 = gaussian(rng, dim);
    // Anchor inside the triangle, so the triangle meets the subspace.
    const auto a = random_subspace(rng, dim, 3, (p0 + p1 + p2) / 3.0);
    EXPECT_LT(triangle_distance(p0, p1, p2, a), 1e-12);

    const auto t = perturbation_direction(p0, p1, p2, a);
    EXPECT_NEAR(t.norm(), 1.0, 1e-12);
    EXPECT_LT(std::abs(t.dot(p1 - p0)), 1e-10 * (p1 - p0).norm());
    EXPECT_LT(std::abs(t.dot(p2 - p0)), 1e-10 * (p2 - p0).norm());
    EXPECT_LT((a.basis().transpose() * t).norm(), 1e-10);
    for (double lambda : {1e-3, 0.1, 1.0}) {
      const Eigen::VectorXd s = lambda * t;
      EXPECT_NEAR(triangle_distance(Eigen::VectorXd(p0 + s), Eigen::VectorXd(p1 + s),
                                    Eigen::VectorXd(p2 + s), a),
                  lambda, 1e-10);
    }
  }
  const auto l = collision_subspace(0, 1, 2, 3);
  EXPECT_THROW(perturbation_direction(vec({0, 0, 0, 1, 0, 0}), vec({0, 0, 0, 2, 0, 0}),
                                      vec({0, 0, 0, 3, 0, 0}), l),
               DegenerateTriangle);
}

TEST(AvoidTriangle, ClearsIntersectingTriangle)
{
  const auto set = collision_set(2, 3);
  const auto p0 = vec({0, 0, 0, 1, 0, 0});
  const auto p1 = vec({1, 0, 0, 0, 0, 0});
  const auto p2 = vec({0, 1, 0, 1, 1, 0});
  ASSERT_LT(triangle_clearance(p0, p1, p2, set), 1e-12);
  const auto r = avoid_triangle(p0, p1, p2, set, 0.2);
  EXPECT_GT(triangle_clearance(r.vertices[0], r.vertices[1], r.vertices[2], set), 0.0);
  EXPECT_LT(r.shift.norm(), 0.2);
  EXPECT_EQ(r.moves, 1u);
  EXPECT_EQ(r.vertices[1], p1 + r.shift);

  const auto clear = avoid_triangle(p0, p0 + vec({0, 0, 0.1, 0, 0, 0}), p2, set, 0.2);
  EXPECT_EQ(clear.moves, 0u);
  EXPECT_THROW(avoid_triangle(p0, p1, p2, set, 0.0), PerturbationFailed);
}

TEST(Polygonalize, KeepsEndpointsAndClearance)
{
  const auto set = collision_set(2, 3);
  auto loop = demo::rotation_loop(2, 3, 64);
  loop.samples.back() = loop.front();
  const auto poly = polygonalize(loop, set);
  EXPECT_TRUE(poly.closed);
  EXPECT_GE(poly.size(), 3u);
  EXPECT_LT(poly.size(), loop.size());
  EXPECT_EQ(poly.vertices.front(), Eigen::VectorXd(loop.front().flat()));
  EXPECT_GT(polyline_clearance(poly, set), 0.0);

  PathSamples open = loop;
  open.samples.back() = loop.samples[1];
  EXPECT_THROW(polygonalize(open, set), NotAClosedLoop);

  std::vector<Eigen::VectorXd> bad{vec({0, 0, 0, 1, 0, 0}), vec({1, 0, 0, 0, 0, 0})};
  EXPECT_THROW(polygonalize(bad, false, set), SampleOnCollisionSet);
}

TEST(ContractLoop, RotationLoopContracts)
{
  const auto set = collision_set(2, 3);
  auto loop = demo::rotation_loop(2, 3, 64);
  loop.samples.back() = loop.front();
  const auto poly = polygonalize(loop, set);
  const auto trace = contract_loop(poly, set);
  expect_valid_trace(trace, set);
  EXPECT_GT(trace.collapse_count(), 0u);
}

TEST(ContractLoop, SquareAroundCollisionSet)
{
  // A loop in X^3 in which point 0 circles point 1 in a plane.
  const auto set = collision_set(3, 3);
  Polyline sq;
  sq.closed = true;
  const double c[4][2] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  for (const auto& xy : c) {
    sq.vertices.push_back(vec({xy[0], xy[1], 0, 0, 0, 0, 5, 0, 0}));
  }
  const auto trace = contract_loop(sq, set);
  expect_valid_trace(trace, set);
  EXPECT_EQ(trace.collapse_count(), 2u);
}

TEST(ContractLoop, CollinearVerticesMerge)
{
  const auto set = collision_set(2, 3);
  Polyline tri;
  tri.closed = true;
  tri.vertices = {vec({0, 0, 0, 3, 0, 0}), vec({1, 0, 0, 3, 0, 0}), vec({2, 0, 0, 3, 0, 0}),
                  vec({1, 1, 0, 3, 0, 0})};
  const auto trace = contract_loop(tri, set);
  expect_valid_trace(trace, set);
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_EQ(trace.steps.front().kind, ReductionEventKind::CollinearMerge);
  EXPECT_EQ(std::string(to_string(trace.steps.front().kind)), "collinear_merge");

  Polyline open = tri;
  open.closed = false;
  EXPECT_THROW(contract_loop(open, set), NotAClosedLoop);
}
