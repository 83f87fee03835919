#ifndef CONFSPACE_VIETA_HPP
#define CONFSPACE_VIETA_HPP

#include "confspace/configuration.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace confspace {

using Complex = std::complex<double>;

/// n complex numbers; as a Configuration, n points in R^2.
using ComplexTuple = std::vector<Complex>;

/// Coefficients (c_{n-1}, ..., c_0) of z^n + c_{n-1} z^{n-1} + ... + c_0.
struct MonicCoefficients
{
  std::vector<Complex> coeffs;

  std::size_t degree() const { return coeffs.size(); }
};

/// Sorts by (real, imag), the canonical order of a root multiset.
ComplexTuple canonical_order(ComplexTuple values);

/// Expands prod (z - r_i), multiplying the linear factors in canonical root
/// order so any permutation of the input gives bitwise-identical output.
MonicCoefficients roots_to_coeffs(const ComplexTuple& roots);

/// Cauchy bound 1 + max |c_i|: every root has modulus at most this.
double root_bound(const MonicCoefficients& c);

/// p(z) by Horner's rule.
Complex evaluate_monic(const MonicCoefficients& c, Complex z);

/**
 * All n roots, with multiplicity, by Weierstrass (Durand-Kerner) simultaneous
 * iteration started on the circle of radius 0.8 * root_bound(c) with angular
 * offset 0.4 rad. Converged once every update is below tol * max(1, |z|).
 * Throws NoConvergence, with the residuals, after max_iter sweeps.
 * The result is in canonical order.
 */
ComplexTuple coeffs_to_roots(const MonicCoefficients& c, double tol = 1e-12,
                             std::size_t max_iter = 1000);

Configuration to_configuration(const ComplexTuple& values);
ComplexTuple to_complex_tuple(const Configuration& x);

/// Quotient distance, for the full symmetric group acting on C^n = (R^2)^n,
/// between the roots and the roots recovered from their coefficients.
double vieta_roundtrip_error(const ComplexTuple& roots);

} // namespace confspace

#endif // CONFSPACE_VIETA_HPP
