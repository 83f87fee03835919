#ifndef CONFSPACE_CONFIGURATION_HPP
#define CONFSPACE_CONFIGURATION_HPP

#include "confspace/errors.hpp"
#include "confspace/permutation.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace confspace {

/// Default distinctness tolerance, in configuration length units.
inline constexpr double kDistinctTolerance = 1e-9;

/**
 * An ordered tuple of n points in R^d, i.e. an element of (R^d)^n.
 *
 * Points are the rows of a row-major n x d matrix, so the storage is exactly
 * the flattened vector in R^{nd} (point 0's coordinates first).
 */
template <typename Scalar_>
class BasicConfiguration
{
public:
  using Scalar = Scalar_;
  using Points = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using FlatMap = Eigen::Map<Vector>;
  using ConstFlatMap = Eigen::Map<const Vector>;

  BasicConfiguration() = default;

  BasicConfiguration(Eigen::Index n, Eigen::Index d) : points_(Points::Zero(n, d))
  {
    if (d < 1) {
      throw ShapeMismatch("configuration dimension must be at least 1");
    }
  }

  explicit BasicConfiguration(Points points) : points_(std::move(points))
  {
    if (points_.rows() > 0 && points_.cols() < 1) {
      throw ShapeMismatch("configuration dimension must be at least 1");
    }
  }

  /// Reinterprets a flat vector of length n*d.
  static BasicConfiguration from_flat(const Vector& flat, Eigen::Index n, Eigen::Index d)
  {
    if (flat.size() != n * d) {
      throw ShapeMismatch("flat vector of length " + std::to_string(flat.size()) +
                          " cannot hold " + std::to_string(n) + " points in R^" +
                          std::to_string(d));
    }
    BasicConfiguration c(n, d);
    c.flat() = flat;
    return c;
  }

  Eigen::Index n() const { return points_.rows(); }
  Eigen::Index d() const { return points_.cols(); }

  const Points& points() const { return points_; }
  Points& points() { return points_; }

  auto point(Eigen::Index i) const { return points_.row(i); }
  auto point(Eigen::Index i) { return points_.row(i); }

  ConstFlatMap flat() const { return ConstFlatMap(points_.data(), points_.size()); }
  FlatMap flat() { return FlatMap(points_.data(), points_.size()); }

  bool same_shape(const BasicConfiguration& other) const
  {
    return n() == other.n() && d() == other.d();
  }

  friend bool operator==(const BasicConfiguration& a, const BasicConfiguration& b)
  {
    return a.same_shape(b) && a.points_ == b.points_;
  }

private:
  Points points_;
};

using Configuration = BasicConfiguration<double>;

template <typename Scalar>
void require_same_shape(const BasicConfiguration<Scalar>& x, const BasicConfiguration<Scalar>& y,
                        const char* where)
{
  if (!x.same_shape(y)) {
    throw ShapeMismatch(std::string(where) + ": shapes " + std::to_string(x.n()) + "x" +
                        std::to_string(x.d()) + " and " + std::to_string(y.n()) + "x" +
                        std::to_string(y.d()) + " differ");
  }
}

/// Left action: y_{p(i)} = x_i, so act(compose(p, q), x) == act(p, act(q, x)).
template <typename Scalar>
BasicConfiguration<Scalar> act(const Permutation& p, const BasicConfiguration<Scalar>& x)
{
  if (static_cast<Eigen::Index>(p.size()) != x.n()) {
    throw ArityMismatch("act: permutation of arity " + std::to_string(p.size()) +
                        " on configuration of " + std::to_string(x.n()) + " points");
  }
  BasicConfiguration<Scalar> y(x.n(), x.d());
  for (Eigen::Index i = 0; i < x.n(); ++i) {
    y.point(p[static_cast<std::size_t>(i)]) = x.point(i);
  }
  return y;
}

/// Euclidean distance of the flattened tuples in R^{nd}.
template <typename Scalar>
Scalar tuple_distance(const BasicConfiguration<Scalar>& x, const BasicConfiguration<Scalar>& y)
{
  require_same_shape(x, y, "tuple_distance");
  return (x.flat() - y.flat()).norm();
}

template <typename Scalar>
Scalar min_pairwise_distance(const BasicConfiguration<Scalar>& x)
{
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (Eigen::Index i = 0; i < x.n(); ++i) {
    for (Eigen::Index j = i + 1; j < x.n(); ++j) {
      best = std::min(best, (x.point(i) - x.point(j)).norm());
    }
  }
  return best;
}

/// True iff the points are pairwise more than `tol` apart, i.e. x lies in X^n
/// and only the identity permutation fixes it.
template <typename Scalar>
bool is_free_point(const BasicConfiguration<Scalar>& x, Scalar tol = Scalar(kDistinctTolerance))
{
  return min_pairwise_distance(x) > tol;
}

/// Lexicographic order on the flattened coordinates, exact comparison.
template <typename Scalar>
bool flat_less(const BasicConfiguration<Scalar>& a, const BasicConfiguration<Scalar>& b)
{
  const auto fa = a.flat();
  const auto fb = b.flat();
  return std::lexicographical_compare(fa.data(), fa.data() + fa.size(), fb.data(),
                                      fb.data() + fb.size());
}

} // namespace confspace

#endif // CONFSPACE_CONFIGURATION_HPP
