#include "confspace/vieta.hpp"

#include "confspace/errors.hpp"
#include "confspace/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace confspace {

ComplexTuple canonical_order(ComplexTuple values)
{
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) {
      return a.real() < b.real();
    }
    return a.imag() < b.imag();
  });
  return values;
}

MonicCoefficients roots_to_coeffs(const ComplexTuple& roots)
{
  const ComplexTuple sorted = canonical_order(roots);
  // poly[k] is the coefficient of z^k; leading 1 kept explicitly while expanding.
  std::vector<Complex> poly{Complex(1.0, 0.0)};
  for (const Complex& r : sorted) {
    std::vector<Complex> next(poly.size() + 1, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= r * poly[k];
    }
    poly = std::move(next);
  }
  MonicCoefficients c;
  c.coeffs.reserve(sorted.size());
  for (std::size_t k = sorted.size(); k-- > 0;) {
    c.coeffs.push_back(poly[k]);
  }
  return c;
}

double root_bound(const MonicCoefficients& c)
{
  double largest = 0.0;
  for (const Complex& ci : c.coeffs) {
    largest = std::max(largest, std::abs(ci));
  }
  return 1.0 + largest;
}

Complex evaluate_monic(const MonicCoefficients& c, Complex z)
{
  Complex acc(1.0, 0.0);
  for (const Complex& ci : c.coeffs) {
    acc = acc * z + ci;
  }
  return acc;
}

ComplexTuple coeffs_to_roots(const MonicCoefficients& c, double tol, std::size_t max_iter)
{
  const std::size_t n = c.degree();
  if (n == 0) {
    return {};
  }
  if (n == 1) {
    return {-c.coeffs.front()};
  }

  const double radius = 0.8 * root_bound(c);
  ComplexTuple z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(n) +
                         0.4;
    z[k] = std::polar(radius, angle);
  }

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex denom(1.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) {
          denom *= z[i] - z[j];
        }
      }
      if (denom == Complex(0.0, 0.0)) {
        // Two iterates collided; nudge off the coincidence.
        z[i] += Complex(tol, tol);
        worst = std::numeric_limits<double>::infinity();
        continue;
      }
      const Complex update = evaluate_monic(c, z[i]) / denom;
      if (!std::isfinite(update.real()) || !std::isfinite(update.imag())) {
        throw NoConvergence("root finder produced a non-finite update");
      }
      z[i] -= update;
      worst = std::max(worst, std::abs(update) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < tol) {
      return canonical_order(std::move(z));
    }
  }

  std::ostringstream msg;
  msg << "root finder did not converge in " << max_iter << " iterations; residuals:";
  for (const Complex& zi : z) {
    msg << ' ' << std::abs(evaluate_monic(c, zi));
  }
  throw NoConvergence(msg.str());
}

Configuration to_configuration(const ComplexTuple& values)
{
  Configuration x(static_cast<Eigen::Index>(values.size()), 2);
  for (std::size_t k = 0; k < values.size(); ++k) {
    x.point(static_cast<Eigen::Index>(k)) << values[k].real(), values[k].imag();
  }
  return x;
}

ComplexTuple to_complex_tuple(const Configuration& x)
{
  if (x.d() != 2) {
    throw ShapeMismatch("complex tuples are configurations in R^2");
  }
  ComplexTuple values(static_cast<std::size_t>(x.n()));
  for (Eigen::Index k = 0; k < x.n(); ++k) {
    values[static_cast<std::size_t>(k)] = Complex(x.point(k)[0], x.point(k)[1]);
  }
  return values;
}

double vieta_roundtrip_error(const ComplexTuple& roots)
{
  if (roots.empty()) {
    return 0.0;
  }
  const ComplexTuple recovered = coeffs_to_roots(roots_to_coeffs(roots));
  return quotient_distance_assignment(to_configuration(roots), to_configuration(recovered)).value;
}

} // namespace confspace
