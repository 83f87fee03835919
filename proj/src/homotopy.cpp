#include "confspace/homotopy.hpp"

#include "confspace/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace confspace {

namespace {

// Consecutive polyline vertices closer than this are merged.
constexpr double kVertexMergeLength = 1e-12;
// A middle vertex closer than this times the chord length to the chord line
// makes the triple collinear.
constexpr double kCollinearRatio = 1e-9;
// Smallest admissible move in avoid_triangle, relative to the radius.
constexpr double kMinMoveRatio = 1e-12;

bool clears(const Eigen::VectorXd& p0, const Eigen::VectorXd& p1, const Eigen::VectorXd& p2,
            const AffineSubspace& a)
{
  return triangle_distance(p0, p1, p2, a) > intersection_tolerance(p0, p1, p2);
}

double distance_to_line(const Eigen::VectorXd& p, const Eigen::VectorXd& a,
                        const Eigen::VectorXd& b)
{
  const Eigen::VectorXd dir = b - a;
  const double len2 = dir.squaredNorm();
  if (len2 == 0.0) {
    return (p - a).norm();
  }
  const Eigen::VectorXd rel = p - a;
  return (rel - (rel.dot(dir) / len2) * dir).norm();
}

void drop_repeated_vertices(Polyline& poly)
{
  auto& v = poly.vertices;
  std::vector<Eigen::VectorXd> kept;
  kept.reserve(v.size());
  for (auto& p : v) {
    if (kept.empty() || (p - kept.back()).norm() > kVertexMergeLength) {
      kept.push_back(std::move(p));
    }
  }
  while (poly.closed && kept.size() > 1 && (kept.back() - kept.front()).norm() <= kVertexMergeLength) {
    kept.pop_back();
  }
  v = std::move(kept);
}

} // namespace

AffineSubspace collision_subspace(std::size_t i, std::size_t j, std::size_t n, std::size_t d)
{
  if (!(i < j && j < n)) {
    throw BadIndices("collision subspace needs 0 <= i < j < n, got i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " n=" + std::to_string(n));
  }
  if (d < 3) {
    throw DimensionTooLow("collision subspaces have codimension d = " + std::to_string(d) +
                          "; at least 3 is required");
  }
  const auto dim = static_cast<Eigen::Index>(n * d);
  const auto bd = static_cast<Eigen::Index>(d);
  const double h = 1.0 / std::sqrt(2.0);

  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(dim, dim - bd);
  Eigen::MatrixXd normals = Eigen::MatrixXd::Zero(dim, bd);
  Eigen::Index col = 0;
  for (std::size_t block = 0; block < n; ++block) {
    if (block == i || block == j) {
      continue;
    }
    for (Eigen::Index k = 0; k < bd; ++k) {
      basis(static_cast<Eigen::Index>(block) * bd + k, col++) = 1.0;
    }
  }
  const auto bi = static_cast<Eigen::Index>(i) * bd;
  const auto bj = static_cast<Eigen::Index>(j) * bd;
  for (Eigen::Index k = 0; k < bd; ++k) {
    basis(bi + k, col) = h;
    basis(bj + k, col) = h;
    ++col;
    normals(bi + k, k) = h;
    normals(bj + k, k) = -h;
  }
  return AffineSubspace::from_orthonormal(Eigen::VectorXd::Zero(dim), basis, normals);
}

CollisionSet collision_set(std::size_t n, std::size_t d)
{
  CollisionSet set;
  set.ambient_dim = static_cast<Eigen::Index>(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      set.subspaces.push_back(collision_subspace(i, j, n, d));
    }
  }
  return set;
}

double clearance(const Eigen::VectorXd& p, const CollisionSet& set)
{
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : set.subspaces) {
    best = std::min(best, subspace_distance(p, a));
  }
  return best;
}

double segment_clearance(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                         const CollisionSet& set)
{
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : set.subspaces) {
    best = std::min(best, segment_distance(p, q, a));
  }
  return best;
}

double triangle_clearance(const Eigen::VectorXd& p0, const Eigen::VectorXd& p1,
                          const Eigen::VectorXd& p2, const CollisionSet& set)
{
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : set.subspaces) {
    best = std::min(best, triangle_distance(p0, p1, p2, a));
  }
  return best;
}

std::size_t Polyline::segment_count() const
{
  if (vertices.size() < 2) {
    return 0;
  }
  return closed ? vertices.size() : vertices.size() - 1;
}

double polyline_clearance(const Polyline& polyline, const CollisionSet& set)
{
  const auto& v = polyline.vertices;
  if (v.empty()) {
    return std::numeric_limits<double>::infinity();
  }
  if (v.size() == 1) {
    return clearance(v.front(), set);
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < polyline.segment_count(); ++k) {
    best = std::min(best, segment_clearance(v[k], v[(k + 1) % v.size()], set));
  }
  return best;
}

TriangleAvoidance avoid_triangle(const Eigen::VectorXd& p0, const Eigen::VectorXd& p1,
                                 const Eigen::VectorXd& p2, const CollisionSet& set,
                                 double radius)
{
  if (!(radius > 0.0)) {
    throw PerturbationFailed("avoid_triangle needs a positive radius");
  }
  TriangleAvoidance result;
  result.shift = Eigen::VectorXd::Zero(p0.size());
  result.vertices = {p0, p1, p2};

  auto shifted = [&](const Eigen::VectorXd& shift) {
    return std::array<Eigen::VectorXd, 3>{p0 + shift, p1 + shift, p2 + shift};
  };
  auto clear_flags = [&](const std::array<Eigen::VectorXd, 3>& t) {
    std::vector<bool> flags(set.size());
    for (std::size_t k = 0; k < set.size(); ++k) {
      flags[k] = clears(t[0], t[1], t[2], set.subspaces[k]);
    }
    return flags;
  };

  // Each accepted move keeps every clear subspace clear and clears one more,
  // so at most set.size() moves happen.
  std::vector<bool> clear = clear_flags(result.vertices);
  for (;;) {
    const auto target = std::find(clear.begin(), clear.end(), false);
    if (target == clear.end()) {
      break;
    }
    const auto k = static_cast<std::size_t>(target - clear.begin());
    const auto& v = result.vertices;
    const Eigen::VectorXd t = perturbation_direction(v[0], v[1], v[2], set.subspaces[k]);

    bool moved = false;
    for (double lambda = radius / 2.0; lambda >= kMinMoveRatio * radius; lambda /= 2.0) {
      const Eigen::VectorXd shift = result.shift + lambda * t;
      if (!(shift.norm() < radius)) {
        continue;
      }
      const auto candidate = shifted(shift);
      const auto flags = clear_flags(candidate);
      bool keeps = flags[k];
      for (std::size_t j = 0; keeps && j < set.size(); ++j) {
        keeps = !clear[j] || flags[j];
      }
      if (keeps) {
        result.shift = shift;
        result.vertices = candidate;
        clear = flags;
        ++result.moves;
        moved = true;
        break;
      }
    }
    if (!moved) {
      throw PerturbationFailed("no admissible move clears collision subspace " + std::to_string(k) +
                               " within radius " + std::to_string(radius));
    }
  }

  // Never trust the construction alone.
  const auto& v = result.vertices;
  for (const auto& a : set.subspaces) {
    if (!clears(v[0], v[1], v[2], a)) {
      throw PerturbationFailed("perturbed triangle still meets the collision set");
    }
  }
  return result;
}

Polyline polygonalize(const std::vector<Eigen::VectorXd>& samples, bool closed,
                      const CollisionSet& set)
{
  Polyline out;
  out.closed = closed;
  if (samples.empty()) {
    return out;
  }
  std::vector<double> sample_clearance(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    sample_clearance[k] = clearance(samples[k], set);
    if (!(sample_clearance[k] > intersection_tolerance(samples[k]))) {
      throw SampleOnCollisionSet("sample " + std::to_string(k) + " lies on the collision set");
    }
  }
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    if (!(segment_clearance(samples[k], samples[k + 1], set) >
          intersection_tolerance(samples[k], samples[k + 1]))) {
      throw SampleOnCollisionSet("input segment " + std::to_string(k) +
                                 " crosses the collision set");
    }
  }

  const std::size_t last = samples.size() - 1;
  std::size_t anchor = 0;
  out.vertices.push_back(samples.front());
  while (anchor < last) {
    std::size_t reach = anchor + 1;
    for (std::size_t j = anchor + 2; j <= last; ++j) {
      if (!((samples[j] - samples[anchor]).norm() < sample_clearance[anchor])) {
        break;
      }
      reach = j;
    }
    if (reach > anchor + 1 && !(segment_clearance(samples[anchor], samples[reach], set) >
                                intersection_tolerance(samples[anchor], samples[reach]))) {
      reach = anchor + 1;
    }
    out.vertices.push_back(samples[reach]);
    anchor = reach;
  }
  drop_repeated_vertices(out);
  return out;
}

Polyline polygonalize(const PathSamples& path, const CollisionSet& set)
{
  std::vector<Eigen::VectorXd> flat;
  flat.reserve(path.size());
  for (const auto& s : path.samples) {
    flat.emplace_back(s.flat());
  }
  if (path.closed && !flat.empty() && flat.front() != flat.back()) {
    throw NotAClosedLoop("closed path must end exactly at its first sample");
  }
  return polygonalize(flat, path.closed, set);
}

const char* to_string(ReductionEventKind kind)
{
  switch (kind) {
  case ReductionEventKind::VertexPerturbation:
    return "vertex_perturbation";
  case ReductionEventKind::TriangleCollapse:
    return "triangle_collapse";
  case ReductionEventKind::CollinearMerge:
    return "collinear_merge";
  }
  return "unknown";
}

std::size_t ReductionTrace::collapse_count() const
{
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const auto& e) {
    return e.kind == ReductionEventKind::TriangleCollapse;
  }));
}

ReductionTrace contract_loop(const Polyline& loop, const CollisionSet& set)
{
  if (!loop.closed) {
    throw NotAClosedLoop("contract_loop needs a closed polyline");
  }
  ReductionTrace trace;
  trace.initial = loop;
  Polyline current = loop;
  drop_repeated_vertices(current);
  if (!(polyline_clearance(current, set) > 0.0)) {
    throw SampleOnCollisionSet("loop touches the collision set");
  }

  auto record = [&](ReductionEvent event) {
    event.polyline_after = current;
    event.clearance_after = polyline_clearance(current, set);
    if (!(event.clearance_after > 0.0)) {
      throw PerturbationFailed("intermediate polyline touches the collision set");
    }
    trace.steps.push_back(std::move(event));
  };

  auto merge_collinear = [&]() {
    bool merged = true;
    while (merged && current.size() > 2) {
      merged = false;
      auto& v = current.vertices;
      const std::size_t m = v.size();
      // Vertex 0 stays put so the basepoint only moves through collapses.
      for (std::size_t mid = 1; mid < m; ++mid) {
        const std::size_t prev = mid - 1;
        const std::size_t next = (mid + 1) % m;
        const double chord = (v[next] - v[prev]).norm();
        const bool flat = distance_to_line(v[mid], v[prev], v[next]) < kCollinearRatio * chord ||
                          chord <= kVertexMergeLength;
        if (!flat) {
          continue;
        }
        bool safe = true;
        for (const auto& a : set.subspaces) {
          safe = safe && clears(v[prev], v[mid], v[next], a);
        }
        if (!safe) {
          continue;
        }
        ReductionEvent event{ReductionEventKind::CollinearMerge, {prev, mid, next},
                             {v[prev], v[mid], v[next]}, {}, 0.0};
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(mid));
        drop_repeated_vertices(current);
        record(std::move(event));
        merged = true;
        break;
      }
    }
  };

  for (;;) {
    merge_collinear();
    if (current.size() <= 2) {
      break;
    }
    auto& v = current.vertices;
    const double r = polyline_clearance(current, set);
    const auto avoidance = avoid_triangle(v[0], v[1], v[2], set, r / 2.0);
    const auto& p = avoidance.vertices;
    for (std::size_t k = 0; k < 3; ++k) {
      if (p[k] != v[k]) {
        ReductionEvent moved{ReductionEventKind::VertexPerturbation, {k}, {v[k], p[k]}, {}, 0.0};
        v[k] = p[k];
        record(std::move(moved));
      }
    }
    ReductionEvent collapse{ReductionEventKind::TriangleCollapse, {0, 1, 2}, {p[0], p[1], p[2]},
                            {}, 0.0};
    v.erase(v.begin() + 1);
    drop_repeated_vertices(current);
    record(std::move(collapse));
  }
  trace.final = current;
  return trace;
}

} // namespace confspace
