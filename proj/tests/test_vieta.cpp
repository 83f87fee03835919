#include "confspace/errors.hpp"
#include "confspace/vieta.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace confspace;

namespace {

ComplexTuple random_roots(std::mt19937_64& rng, std::size_t n, double separation)
{
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  ComplexTuple roots;
  while (roots.size() < n) {
    const Complex z(unit(rng), unit(rng));
    if (std::abs(z) >= 1.0) {
      continue;
    }
    const bool far = std::all_of(roots.begin(), roots.end(),
                                 [&](const Complex& w) { return std::abs(z - w) >= separation; });
    if (far) {
      roots.push_back(z);
    }
  }
  return roots;
}

} // namespace

TEST(Vieta, RootsToCoefficientsExamples)
{
  EXPECT_TRUE(roots_to_coeffs({}).coeffs.empty());
  const auto c = roots_to_coeffs({1.0, 2.0, 3.0});
  ASSERT_EQ(c.degree(), 3u);
  EXPECT_EQ(c.coeffs[0], Complex(-6.0));
  EXPECT_EQ(c.coeffs[1], Complex(11.0));
  EXPECT_EQ(c.coeffs[2], Complex(-6.0));
  // (z - i)(z + i) = z^2 + 1
  const auto unit = roots_to_coeffs({Complex(0, 1), Complex(0, -1)});
  EXPECT_NEAR(std::abs(unit.coeffs[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(unit.coeffs[1] - Complex(1.0)), 0.0, 1e-15);
}

TEST(Vieta, CoefficientsArePermutationInvariantBitwise)
{
  std::mt19937_64 rng(4);
  auto roots = random_roots(rng, 6, 0.05);
  const auto reference = roots_to_coeffs(roots);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(roots.begin(), roots.end(), rng);
    EXPECT_EQ(roots_to_coeffs(roots).coeffs, reference.coeffs);
  }
}

TEST(Vieta, RootBoundAndEvaluation)
{
  const auto c = roots_to_coeffs({1.0, 2.0, 3.0});
  EXPECT_EQ(root_bound(c), 12.0);
  EXPECT_EQ(evaluate_monic(c, 2.0), Complex(0.0));
  EXPECT_EQ(evaluate_monic(c, 0.0), Complex(-6.0));
}

TEST(Vieta, CoefficientsToRootsExamples)
{
  const auto roots = coeffs_to_roots(MonicCoefficients{{-6.0, 11.0, -6.0}});
  ASSERT_EQ(roots.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(std::abs(roots[k] - Complex(static_cast<double>(k + 1))), 0.0, 1e-12);
  }
  EXPECT_EQ(coeffs_to_roots(MonicCoefficients{{Complex(2.0, -1.0)}}),
            ComplexTuple{Complex(-2.0, 1.0)});
  EXPECT_TRUE(coeffs_to_roots(MonicCoefficients{}).empty());
  EXPECT_THROW(coeffs_to_roots(MonicCoefficients{{0.0, 0.0, 1.0}}, 1e-12, 1), NoConvergence);
}

TEST(Vieta, CanonicalOrder)
{
  const auto sorted = canonical_order({Complex(1, 0), Complex(0, 2), Complex(0, -1)});
  EXPECT_EQ(sorted, (ComplexTuple{Complex(0, -1), Complex(0, 2), Complex(1, 0)}));
}

TEST(Vieta, RoundtripProperty)
{
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
    const auto roots = random_roots(rng, n, 0.1);
    EXPECT_LT(vieta_roundtrip_error(roots), 1e-6);
    const auto c = roots_to_coeffs(roots);
    for (const auto& z : coeffs_to_roots(c)) {
      EXPECT_LE(std::abs(z), root_bound(c) + 1e-9);
      EXPECT_LT(std::abs(evaluate_monic(c, z)), 1e-8 * root_bound(c));
    }
  }
}

TEST(Vieta, ConfigurationConversion)
{
  const ComplexTuple values{Complex(1, 2), Complex(-3, 0.5)};
  const auto x = to_configuration(values);
  EXPECT_EQ(x.n(), 2);
  EXPECT_EQ(x.d(), 2);
  EXPECT_EQ(x.point(1)[1], 0.5);
  EXPECT_EQ(to_complex_tuple(x), values);
  EXPECT_THROW(to_complex_tuple(Configuration(2, 3)), ShapeMismatch);
}
