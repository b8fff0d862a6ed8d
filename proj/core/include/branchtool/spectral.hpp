#pragma once

#include "branchtool/graph.hpp"
#include "branchtool/matrix.hpp"
#include "branchtool/polynomial.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace branchtool {

/// Perron eigenvalue and vectors of one SCC block.
///
/// `left` satisfies left * B = rho * left, `right` satisfies B * right =
/// rho * right; both are positive and scaled so that right . left == 1.
/// Trivial (acyclic singleton) blocks have rho == 0 and empty vectors.
struct PerronData {
  double rho = 0.0;
  std::vector<double> left;
  std::vector<double> right;
  bool normalized = false;
  std::size_t iterations = 0;
  /// max(|left B - rho left|_inf, |B right - rho right|_inf), relative to rho.
  double residual = 0.0;
};

struct PerronOptions {
  double tolerance = 1e-12;
  std::size_t max_iterations = 100'000;
};

/// Power iteration on B + I (primitive whenever B is irreducible), so periodic
/// blocks converge too; rho = rho(B + I) - 1. Throws NonConvergence when the
/// iteration cap is hit, which signals a reducible block.
PerronData perron(const AdjacencyMatrix& block, bool irreducible, const PerronOptions& options = {});

/// det(z I - A) with exact integer coefficients (Faddeev-LeVerrier).
IntPolynomial characteristic_polynomial(const AdjacencyMatrix& matrix);

struct SpectrumEstimate {
  std::vector<std::complex<double>> eigenvalues;  // with multiplicity
  std::string method;
  IntPolynomial characteristic;
};

inline constexpr std::size_t kSmallSpectrumLimit = 16;

/// All eigenvalues of a block of size <= 16. Throws std::invalid_argument for
/// larger blocks and NonConvergence if root finding fails.
SpectrumEstimate spectrum_small(const AdjacencyMatrix& block, std::uint64_t seed = 0x5eed);

/// Number of eigenvalues with |lambda| within rel_tol of rho.
std::size_t peripheral_count(const SpectrumEstimate& spectrum, double rho, double rel_tol = 1e-6);

/// (1/k) sum_{l=0..k} rho^-l B^l. Throws std::invalid_argument if rho == 0
/// or k == 0.
Matrix<double> cesaro_average(const AdjacencyMatrix& block, const PerronData& pd, std::size_t k);

/// Limit of the Cesaro average: entry (i, j) = right[i] * left[j].
Matrix<double> perron_projector(const PerronData& pd);

/// max_{ij} |a(i,j) - b(i,j)|.
double max_abs_difference(const Matrix<double>& a, const Matrix<double>& b);

/// G_d(z) with sum_l l^d z^l = G_d(z) / (1 - z)^(d+1).
struct GdPolynomial {
  int d = 0;
  IntPolynomial polynomial;

  double evaluate(double z) const { return polynomial.evaluate(z); }
};

/// Recurrence G_0 = 1, G_{d+1} = z(1-z) G_d' + (d+1) z G_d. Valid for 0 <= d <= 20;
/// throws std::invalid_argument otherwise.
GdPolynomial gd_polynomial(int d);

inline constexpr std::size_t kExactTieLimit = 64;

/// Decides whether two SCC blocks share the same Perron eigenvalue: the
/// floating values must agree to rel_tol, and (for blocks up to 64 nodes)
/// rho must be a root of the exact gcd of the characteristic polynomials.
bool perron_values_equal(const AdjacencyMatrix& a, double rho_a, const AdjacencyMatrix& b,
                         double rho_b, double rel_tol = 1e-9);

}  // namespace branchtool
