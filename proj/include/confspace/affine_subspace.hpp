#ifndef CONFSPACE_AFFINE_SUBSPACE_HPP
#define CONFSPACE_AFFINE_SUBSPACE_HPP

#include "confspace/errors.hpp"

#include <Eigen/Core>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace confspace {

/**
 * An affine subspace anchor + W of R^N with codimension at least 3.
 *
 * Both an orthonormal basis of the directing subspace W and one of its
 * orthogonal complement are kept; every distance below works in the
 * complement coordinates, so its cost scales with the codimension.
 */
template <typename Scalar_>
class BasicAffineSubspace
{
public:
  using Scalar = Scalar_;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  static constexpr Eigen::Index kMinCodimension = 3;

  BasicAffineSubspace() = default;

  /// Spans `directions` (columns, any rank) through `anchor`. Throws
  /// DimensionTooLow when the codimension would be below 3.
  static BasicAffineSubspace from_directions(const Vector& anchor, const Matrix& directions)
  {
    const Eigen::Index dim = anchor.size();
    if (directions.rows() != dim && directions.cols() != 0) {
      throw DimensionMismatch("direction vectors must live in R^" + std::to_string(dim));
    }
    BasicAffineSubspace a;
    a.anchor_ = anchor;
    if (directions.cols() == 0) {
      a.basis_ = Matrix(dim, 0);
      a.normals_ = Matrix::Identity(dim, dim);
    } else {
      Eigen::ColPivHouseholderQR<Matrix> qr(directions);
      qr.setThreshold(Scalar(1e-12));
      const Eigen::Index rank = qr.rank();
      const Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
      a.basis_ = q.leftCols(rank);
      a.normals_ = q.rightCols(dim - rank);
    }
    if (a.codimension() < kMinCodimension) {
      throw DimensionTooLow("affine subspace of codimension " + std::to_string(a.codimension()) +
                            " in R^" + std::to_string(dim) + "; at least 3 is required");
    }
    return a;
  }

  /// Takes both bases as given; together they must form an orthonormal basis
  /// of R^N (checked to 1e-12).
  static BasicAffineSubspace from_orthonormal(const Vector& anchor, const Matrix& basis,
                                              const Matrix& normals)
  {
    const Eigen::Index dim = anchor.size();
    if (basis.rows() != dim || normals.rows() != dim || basis.cols() + normals.cols() != dim) {
      throw DimensionMismatch("bases do not split R^" + std::to_string(dim));
    }
    Matrix all(dim, dim);
    all << basis, normals;
    if (!(all.transpose() * all).isIdentity(Scalar(1e-12))) {
      throw DimensionMismatch("subspace bases are not orthonormal");
    }
    BasicAffineSubspace a;
    a.anchor_ = anchor;
    a.basis_ = basis;
    a.normals_ = normals;
    if (a.codimension() < kMinCodimension) {
      throw DimensionTooLow("affine subspace of codimension " + std::to_string(a.codimension()) +
                            " in R^" + std::to_string(dim) + "; at least 3 is required");
    }
    return a;
  }

  Eigen::Index ambient_dim() const { return anchor_.size(); }
  Eigen::Index dimension() const { return basis_.cols(); }
  Eigen::Index codimension() const { return normals_.cols(); }

  const Vector& anchor() const { return anchor_; }
  /// Orthonormal columns spanning W.
  const Matrix& basis() const { return basis_; }
  /// Orthonormal columns spanning the orthogonal complement of W.
  const Matrix& normals() const { return normals_; }

  /// Complement coordinates of p - anchor.
  template <typename Derived>
  Vector offset(const Eigen::MatrixBase<Derived>& p) const
  {
    check_dim(p.size());
    return normals_.transpose() * (p - anchor_);
  }

  /// Complement coordinates of a direction vector.
  template <typename Derived>
  Vector normal_part(const Eigen::MatrixBase<Derived>& v) const
  {
    check_dim(v.size());
    return normals_.transpose() * v;
  }

  void check_dim(Eigen::Index size) const
  {
    if (size != ambient_dim()) {
      throw DimensionMismatch("point of dimension " + std::to_string(size) +
                              " against a subspace of R^" + std::to_string(ambient_dim()));
    }
  }

private:
  Vector anchor_;
  Matrix basis_;
  Matrix normals_;
};

using AffineSubspace = BasicAffineSubspace<double>;

namespace detail {

/// min over s in [0, 1] of |r + s u|.
template <typename Vector>
typename Vector::Scalar clamped_line_min(const Vector& r, const Vector& u)
{
  using Scalar = typename Vector::Scalar;
  const Scalar uu = u.squaredNorm();
  Scalar s = Scalar(0);
  if (uu > Scalar(0)) {
    s = std::clamp(-r.dot(u) / uu, Scalar(0), Scalar(1));
  }
  return (r + s * u).norm();
}

} // namespace detail

template <typename Scalar, typename Derived>
Scalar subspace_distance(const Eigen::MatrixBase<Derived>& p, const BasicAffineSubspace<Scalar>& a)
{
  return a.offset(p).norm();
}

/// Distance from the closed segment [p, q] to the subspace: a convex quadratic
/// in one variable, minimised at its clamped critical point.
template <typename Scalar, typename D1, typename D2>
Scalar segment_distance(const Eigen::MatrixBase<D1>& p, const Eigen::MatrixBase<D2>& q,
                        const BasicAffineSubspace<Scalar>& a)
{
  a.check_dim(q.size());
  return detail::clamped_line_min(a.offset(p), a.normal_part(q - p));
}

/**
 * Distance from the closed triangle conv(p0, p1, p2) to the subspace.
 *
 * |r0 + s u + t v|^2 is a convex quadratic on the simplex s, t >= 0,
 * s + t <= 1. Its minimum is at the unconstrained critical point when that is
 * feasible and on an edge otherwise; with a singular Hessian some minimiser
 * lies on the boundary, so the edges suffice.
 */
template <typename Scalar, typename D0, typename D1, typename D2>
Scalar triangle_distance(const Eigen::MatrixBase<D0>& p0, const Eigen::MatrixBase<D1>& p1,
                         const Eigen::MatrixBase<D2>& p2, const BasicAffineSubspace<Scalar>& a)
{
  using Vector = typename BasicAffineSubspace<Scalar>::Vector;
  a.check_dim(p1.size());
  a.check_dim(p2.size());
  const Vector r0 = a.offset(p0);
  const Vector u = a.normal_part(p1 - p0);
  const Vector v = a.normal_part(p2 - p0);

  Scalar best = std::min({detail::clamped_line_min(r0, u), detail::clamped_line_min(r0, v),
                          detail::clamped_line_min(Vector(r0 + u), Vector(v - u))});

  const Scalar uu = u.squaredNorm();
  const Scalar uv = u.dot(v);
  const Scalar vv = v.squaredNorm();
  const Scalar det = uu * vv - uv * uv;
  if (det > Scalar(1e-14) * uu * vv) {
    const Scalar ru = r0.dot(u);
    const Scalar rv = r0.dot(v);
    const Scalar s = (-ru * vv + rv * uv) / det;
    const Scalar t = (-rv * uu + ru * uv) / det;
    if (s >= Scalar(0) && t >= Scalar(0) && s + t <= Scalar(1)) {
      best = std::min(best, (r0 + s * u + t * v).norm());
    }
  }
  return best;
}

/// Relative sine below which a triangle counts as collinear.
inline constexpr double kDegenerateSine = 1e-12;

/**
 * A unit vector orthogonal both to the plane of the triangle and to the
 * directing subspace W. With dim W <= N - 3 such a vector always exists, and
 * translating the triangle along it by any lambda > 0 moves every point of a
 * triangle meeting the subspace off it:
 * d(Q + lambda t)^2 = lambda^2 + d(Q)^2.
 */
template <typename Scalar, typename D0, typename D1, typename D2>
typename BasicAffineSubspace<Scalar>::Vector
perturbation_direction(const Eigen::MatrixBase<D0>& p0, const Eigen::MatrixBase<D1>& p1,
                       const Eigen::MatrixBase<D2>& p2, const BasicAffineSubspace<Scalar>& a)
{
  using Vector = typename BasicAffineSubspace<Scalar>::Vector;
  using Matrix = typename BasicAffineSubspace<Scalar>::Matrix;
  a.check_dim(p0.size());
  a.check_dim(p1.size());
  a.check_dim(p2.size());
  const Vector u = p1 - p0;
  const Vector v = p2 - p0;
  Matrix edges(u.size(), 2);
  edges << u, v;
  const auto sigma = Eigen::JacobiSVD<Matrix>(edges).singularValues();
  if (!(sigma[0] > Scalar(0)) || !(sigma[1] > Scalar(kDegenerateSine) * sigma[0])) {
    throw DegenerateTriangle("triangle vertices are collinear");
  }

  // t = normals * c with c orthogonal to the complement parts of u and v.
  Matrix constraints(2, a.codimension());
  constraints.row(0) = a.normal_part(u).transpose();
  constraints.row(1) = a.normal_part(v).transpose();
  Eigen::JacobiSVD<Matrix> svd(constraints, Eigen::ComputeFullV);
  const Vector c = svd.matrixV().col(a.codimension() - 1);
  Vector t = a.normals() * c;
  t.normalize();
  return t;
}

/// A segment or triangle meets a subspace iff its distance is at most
/// 1e-10 * (1 + largest vertex norm).
template <typename... Vectors>
double intersection_tolerance(const Vectors&... vertices)
{
  double scale = 0.0;
  ((scale = std::max(scale, static_cast<double>(vertices.norm()))), ...);
  return 1e-10 * (1.0 + scale);
}

} // namespace confspace

#endif // CONFSPACE_AFFINE_SUBSPACE_HPP
