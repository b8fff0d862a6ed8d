#include "branchtool/polynomial.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace branchtool;

namespace {

IntPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<BigInt> c;
  for (long v : ascending) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

// (z - r) for integer r.
IntPolynomial linear(long r) { return poly({-r, 1}); }

}  // namespace

TEST(IntPolynomial, TrimAndDegree) {
  EXPECT_EQ(poly({}).degree(), -1);
  EXPECT_EQ(poly({0, 0}).degree(), -1);
  EXPECT_TRUE(poly({0}).is_zero());
  EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(poly({1, 2}).coefficient(5), 0);
}

TEST(IntPolynomial, Arithmetic) {
  const IntPolynomial a = poly({1, 1});
  const IntPolynomial b = poly({-1, 1});
  EXPECT_EQ(a * b, poly({-1, 0, 1}));
  EXPECT_EQ(a + b, poly({0, 2}));
  EXPECT_EQ(a - a, poly({}));
  EXPECT_EQ(BigInt(3) * a, poly({3, 3}));
  EXPECT_EQ(monomial(5, 3), poly({0, 0, 0, 5}));
  EXPECT_EQ(poly({1, 2, 3}).derivative(), poly({2, 6}));
}

TEST(IntPolynomial, ContentAndPrimitivePart) {
  const IntPolynomial p = poly({-6, 4, -2});
  EXPECT_EQ(p.content(), 2);
  EXPECT_EQ(p.primitive_part(), poly({3, -2, 1}));
}

TEST(IntPolynomial, Evaluate) {
  const IntPolynomial p = poly({-1, -1, 1});  // z^2 - z - 1
  EXPECT_EQ(p.evaluate(BigInt(3)), 5);
  EXPECT_NEAR(p.evaluate(std::numbers::phi), 0.0, 1e-12);
  const auto z = p.evaluate(std::complex<long double>(0, 1));
  EXPECT_NEAR(static_cast<double>(z.real()), -2.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(z.imag()), -1.0, 1e-15);
}

TEST(IntPolynomial, DivisionAndGcd) {
  const IntPolynomial a = linear(1) * linear(2) * linear(3);
  const IntPolynomial b = linear(2) * linear(5);
  EXPECT_EQ(gcd(a, b), linear(2));
  EXPECT_EQ(exact_quotient(a, linear(3)), linear(1) * linear(2));
  EXPECT_THROW(exact_quotient(a, linear(7)), std::domain_error);
  EXPECT_TRUE(pseudo_remainder(a, linear(1)).is_zero());
  EXPECT_EQ(gcd(poly({}), poly({})), poly({}));
  EXPECT_EQ(gcd(BigInt(4) * a, poly({})), a);
  EXPECT_EQ(gcd(linear(1), linear(4)), poly({1}));
}

TEST(IntPolynomial, GcdOfRandomProducts) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial common = poly({1});
    IntPolynomial a = poly({1});
    IntPolynomial b = poly({1});
    for (int k = 0; k < 3; ++k) {
      common = common * linear(static_cast<long>(rng() % 7) - 3);
      a = a * linear(10 + static_cast<long>(rng() % 5));
      b = b * linear(20 + static_cast<long>(rng() % 5));
    }
    EXPECT_EQ(gcd(a * common, b * common), common.primitive_part());
  }
}

TEST(SquareFree, Decomposition) {
  // (z-1)^3 (z+2)^2 z
  const IntPolynomial p = linear(1) * linear(1) * linear(1) * linear(-2) * linear(-2) * linear(0);
  const auto parts = square_free_decomposition(p);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], std::make_pair(linear(0), 1));
  EXPECT_EQ(parts[1], std::make_pair(linear(-2), 2));
  EXPECT_EQ(parts[2], std::make_pair(linear(1), 3));
}

TEST(Roots, GoldenRatio) {
  const auto roots = polynomial_roots(poly({-1, -1, 1}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0].real(), std::numbers::phi, 1e-14);
  EXPECT_NEAR(roots[1].real(), 1.0 - std::numbers::phi, 1e-14);
  EXPECT_NEAR(roots[0].imag(), 0.0, 1e-14);
}

TEST(Roots, RootsOfUnityOrderedByArgument) {
  const auto roots = polynomial_roots(poly({-1, 0, 0, 0, 0, 1}));
  ASSERT_EQ(roots.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / 5.0;
    EXPECT_NEAR(roots[k].real(), std::cos(angle), 1e-12);
    EXPECT_NEAR(roots[k].imag(), std::sin(angle), 1e-12);
  }
}

TEST(Roots, RepeatedRootsKeepMultiplicity) {
  const IntPolynomial p = linear(2) * linear(2) * linear(2) * poly({0, 0, 1});
  const auto roots = polynomial_roots(p);
  ASSERT_EQ(roots.size(), 5u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(std::abs(roots[k] - 2.0), 0.0, 1e-12);
  EXPECT_EQ(roots[3], std::complex<double>(0, 0));
  EXPECT_EQ(roots[4], std::complex<double>(0, 0));
}

TEST(Roots, DeterministicForSeed) {
  const IntPolynomial p = poly({-2, 0, 0, 1, 3, -1, 1});
  EXPECT_EQ(polynomial_roots(p), polynomial_roots(p));
  for (const auto& r : polynomial_roots(p)) {
    EXPECT_LT(std::abs(p.evaluate(std::complex<long double>(r.real(), r.imag()))), 1e-9L);
  }
}

TEST(Roots, ConstantHasNoRoots) {
  EXPECT_TRUE(polynomial_roots(poly({7})).empty());
}
