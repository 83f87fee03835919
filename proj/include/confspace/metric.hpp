#ifndef CONFSPACE_METRIC_HPP
#define CONFSPACE_METRIC_HPP

#include "confspace/configuration.hpp"
#include "confspace/perm_group.hpp"

#include <vector>

namespace confspace {

/// Quotient distance together with the group element realising it:
/// value == tuple_distance(x, act(witness, y)).
struct QuotientDistanceResult
{
  double value = 0.0;
  Permutation witness;
};

/// min over g in G of tuple_distance(x, act(g, y)); ties go to the first
/// element in group order.
QuotientDistanceResult quotient_distance(const PermGroup& group, const Configuration& x,
                                         const Configuration& y);

/**
 * The quotient distance for the full symmetric group, without enumerating it.
 *
 * Solves the assignment problem on C(i, j) = |x_i - y_j|^2; the matching
 * pairing x_i with y_j becomes the witness g with g(j) = i.
 */
QuotientDistanceResult quotient_distance_assignment(const Configuration& x,
                                                    const Configuration& y);

/// quotient_distance, routed through the assignment solver when `group` is a
/// full symmetric group too large to enumerate cheaply.
QuotientDistanceResult quotient_distance_auto(const PermGroup& group, const Configuration& x,
                                              const Configuration& y);

/**
 * epsilon(x) = min over g != 1 of d(x, g x).
 *
 * Throws TrivialGroup when G has no non-identity element and NonFreePoint when
 * the result does not exceed `tol` (some non-identity element nearly fixes x).
 * epsilon is constant on orbits.
 */
double separation_radius(const PermGroup& group, const Configuration& x,
                         double tol = kDistinctTolerance);

/// Lexicographically smallest flattened member of the orbit of x. Exact
/// comparison, so two members of one orbit give bitwise-equal results.
Configuration canonical_representative(const PermGroup& group, const Configuration& x);

/// A point of X/G, stored as its canonical representative.
class QuotientPoint
{
public:
  QuotientPoint(const PermGroup& group, const Configuration& x)
    : rep_(canonical_representative(group, x)), group_arity_(group.arity())
  {}

  const Configuration& rep() const { return rep_; }
  std::size_t group_arity() const { return group_arity_; }

  friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;

private:
  Configuration rep_;
  std::size_t group_arity_;
};

/**
 * Turns a sequence whose projections converge in X/G into one that converges
 * upstairs: y_1 = x_1, y_n = g_1 ... g_{n-1} x_n where g_k is the
 * quotient_distance witness between x_k and x_{k+1}. Then
 * d(y_n, y_{n+1}) = dbar(x_n, x_{n+1}) and p(y_n) = p(x_n).
 */
std::vector<Configuration> rectify_cauchy_sequence(const PermGroup& group,
                                                   const std::vector<Configuration>& xs);

} // namespace confspace

#endif // CONFSPACE_METRIC_HPP
