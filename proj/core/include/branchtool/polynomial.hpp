#pragma once

#include "branchtool/bigint.hpp"

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace branchtool {

/// Univariate polynomial with exact integer coefficients, stored in ascending
/// order with no trailing zeros (the zero polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of z^k, zero past the degree.
  BigInt coefficient(std::size_t k) const;
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;

  BigInt evaluate(const BigInt& z) const;
  double evaluate(double z) const;
  std::complex<long double> evaluate(std::complex<long double> z) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Monomial c * z^k.
IntPolynomial monomial(const BigInt& c, std::size_t k);

/// Pseudo-remainder of a by b (b non-zero).
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// a / b where b divides a over the rationals and b is primitive; the quotient
/// is then integral. Throws std::domain_error if b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
/// gcd(0, 0) is the zero polynomial.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Yun's square-free factorisation: pairs (factor, multiplicity) with
/// pairwise coprime square-free primitive factors of positive degree.
std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p);

struct RootOptions {
  std::uint64_t seed = 0x5eed;
  int max_iterations = 2000;
  int max_restarts = 8;
  long double tolerance = 1e-16L;
};

/// All complex roots of a square-free polynomial (Aberth-Ehrlich iteration,
/// random restarts on stagnation). Throws NonConvergence.
std::vector<std::complex<double>> square_free_roots(const IntPolynomial& p,
                                                    const RootOptions& options = {});

/// All roots with multiplicity: exact square-free split, then square_free_roots
/// on each factor. Sorted by (modulus descending, argument ascending).
std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p,
                                                   const RootOptions& options = {});

}  // namespace branchtool
