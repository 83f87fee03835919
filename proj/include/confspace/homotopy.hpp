#ifndef CONFSPACE_HOMOTOPY_HPP
#define CONFSPACE_HOMOTOPY_HPP

#include "confspace/affine_subspace.hpp"
#include "confspace/covering.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace confspace {

/// A finite union of affine subspaces of codimension >= 3 in R^N, e.g. the
/// collision set of X^n.
struct CollisionSet
{
  Eigen::Index ambient_dim = 0;
  std::vector<AffineSubspace> subspaces;

  std::size_t size() const { return subspaces.size(); }
};

/// L_ij = {x in (R^d)^n : x_i = x_j}, codimension d in R^{nd}. d < 3 throws
/// DimensionTooLow.
AffineSubspace collision_subspace(std::size_t i, std::size_t j, std::size_t n, std::size_t d);

/// All L_ij with i < j.
CollisionSet collision_set(std::size_t n, std::size_t d);

/// Minimum distance from a point to the set.
double clearance(const Eigen::VectorXd& p, const CollisionSet& set);

double segment_clearance(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                         const CollisionSet& set);

double triangle_clearance(const Eigen::VectorXd& p0, const Eigen::VectorXd& p1,
                          const Eigen::VectorXd& p2, const CollisionSet& set);

struct Polyline
{
  std::vector<Eigen::VectorXd> vertices;
  /// A closed polyline has the implicit segment back to vertices.front().
  bool closed = false;

  std::size_t size() const { return vertices.size(); }
  std::size_t segment_count() const;
};

/// Minimum segment distance over every segment of the polyline (the point
/// distance for a single vertex).
double polyline_clearance(const Polyline& polyline, const CollisionSet& set);

struct TriangleAvoidance
{
  std::array<Eigen::VectorXd, 3> vertices;
  /// Common translation applied to all three vertices; its norm is below the
  /// requested radius.
  Eigen::VectorXd shift;
  std::size_t moves = 0;
};

/**
 * Translates a triangle by less than `radius` so that it misses every
 * subspace of the set, clearing one intersecting subspace at a time along its
 * perturbation direction. Each move starts at radius / 2 and is halved until
 * it clears its target without touching any subspace that was clear before.
 * The result is re-verified with triangle_distance; PerturbationFailed is
 * thrown when a move would drop below 1e-12 * radius.
 */
TriangleAvoidance avoid_triangle(const Eigen::VectorXd& p0, const Eigen::VectorXd& p1,
                                 const Eigen::VectorXd& p2, const CollisionSet& set,
                                 double radius);

/**
 * Replaces a densely sampled path (piecewise linear through the samples) by a
 * homotopic chain of chords whose vertices are a subsequence of the samples.
 *
 * From each anchor the chord is pushed to the farthest sample such that it and
 * every sample in between lie in the open ball around the anchor of radius
 * equal to the anchor's clearance; that ball is convex and misses the set, so
 * the straight-line homotopy between sub-path and chord stays off it.
 * Throws SampleOnCollisionSet if a sample or an input segment touches the set.
 */
Polyline polygonalize(const std::vector<Eigen::VectorXd>& samples, bool closed,
                      const CollisionSet& set);

/// Flattens the configurations and polygonalizes. A closed path must end
/// exactly where it starts.
Polyline polygonalize(const PathSamples& path, const CollisionSet& set);

enum class ReductionEventKind
{
  VertexPerturbation,
  TriangleCollapse,
  CollinearMerge,
};

const char* to_string(ReductionEventKind kind);

struct ReductionEvent
{
  ReductionEventKind kind;
  /// VertexPerturbation: {vertex}. TriangleCollapse: {0, 1, 2}, the middle
  /// one deleted. CollinearMerge: {prev, middle, next}, the middle deleted.
  std::vector<std::size_t> indices;
  /// VertexPerturbation: {before, after}. Otherwise the triple's vertices.
  std::vector<Eigen::VectorXd> points;
  Polyline polyline_after;
  double clearance_after = 0.0;
};

struct ReductionTrace
{
  Polyline initial;
  std::vector<ReductionEvent> steps;
  Polyline final;

  std::size_t collapse_count() const;
};

/**
 * Contracts a closed polyline in the complement of the set to a
 * back-and-forth chain s_AB s_BA, certifying that it is null-homotopic.
 *
 * Each round merges collinear consecutive triples, then perturbs the first
 * three vertices within half the polyline's clearance so that their triangle
 * misses the set, and drops the middle one. The basepoint is allowed to move;
 * every move is recorded.
 */
ReductionTrace contract_loop(const Polyline& loop, const CollisionSet& set);

} // namespace confspace

#endif // CONFSPACE_HOMOTOPY_HPP
