#ifndef CONFSPACE_ASSIGNMENT_HPP
#define CONFSPACE_ASSIGNMENT_HPP

#include "confspace/errors.hpp"

#include <Eigen/Core>

#include <limits>
#include <vector>

namespace confspace {

template <typename Scalar>
struct Assignment
{
  /// row_to_col[i] is the column matched with row i.
  std::vector<int> row_to_col;
  Scalar cost = Scalar(0);
};

/**
 * Minimum-cost perfect matching on a square cost matrix.
 *
 * Shortest augmenting path with row/column potentials (the O(n^3) form of the
 * Hungarian method). Rows are inserted in index order and ties are resolved by
 * the lowest column index, so the output is deterministic. The returned cost is
 * re-summed from the matrix entries of the matching, not read off the dual.
 */
template <typename Derived>
Assignment<typename Derived::Scalar> solve_assignment(const Eigen::MatrixBase<Derived>& cost)
{
  using Scalar = typename Derived::Scalar;
  if (cost.rows() != cost.cols()) {
    throw ShapeMismatch("assignment cost matrix must be square");
  }
  const Eigen::Index n = cost.rows();
  const Scalar inf = std::numeric_limits<Scalar>::infinity();

  // 1-based bookkeeping; column 0 is the virtual root of each search.
  std::vector<Scalar> row_pot(n + 1, Scalar(0));
  std::vector<Scalar> col_pot(n + 1, Scalar(0));
  std::vector<Eigen::Index> col_owner(n + 1, 0);
  std::vector<Eigen::Index> way(n + 1, 0);

  for (Eigen::Index row = 1; row <= n; ++row) {
    col_owner[0] = row;
    Eigen::Index col0 = 0;
    std::vector<Scalar> min_slack(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const Eigen::Index r0 = col_owner[col0];
      Scalar delta = inf;
      Eigen::Index col1 = 0;
      for (Eigen::Index j = 1; j <= n; ++j) {
        if (used[j]) {
          continue;
        }
        const Scalar reduced = cost(r0 - 1, j - 1) - row_pot[r0] - col_pot[j];
        if (reduced < min_slack[j]) {
          min_slack[j] = reduced;
          way[j] = col0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          col1 = j;
        }
      }
      for (Eigen::Index j = 0; j <= n; ++j) {
        if (used[j]) {
          row_pot[col_owner[j]] += delta;
          col_pot[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col0 = col1;
    } while (col_owner[col0] != 0);
    do {
      const Eigen::Index col1 = way[col0];
      col_owner[col0] = col_owner[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  Assignment<Scalar> result;
  result.row_to_col.assign(static_cast<std::size_t>(n), -1);
  for (Eigen::Index j = 1; j <= n; ++j) {
    result.row_to_col[static_cast<std::size_t>(col_owner[j] - 1)] = static_cast<int>(j - 1);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    result.cost += cost(i, result.row_to_col[static_cast<std::size_t>(i)]);
  }
  return result;
}

} // namespace confspace

#endif // CONFSPACE_ASSIGNMENT_HPP
