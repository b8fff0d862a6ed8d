#include "branchtool/spectral.hpp"

#include "branchtool/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace branchtool {

namespace {

// One power-iteration pass on (B + I), either as x (B + I) or (B + I) x.
struct PowerResult {
  std::vector<double> vector;  // positive, sum 1
  std::size_t iterations = 0;
  bool converged = false;
};

PowerResult shifted_power_iteration(const AdjacencyMatrix& b, bool transpose,
                                    const PerronOptions& options) {
  const std::size_t n = b.rows();
  std::vector<double> x(n, 1.0 / static_cast<double>(n)), y(n);
  PowerResult result;
  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    std::copy(x.begin(), x.end(), y.begin());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto entry = static_cast<double>(transpose ? b(j, i) : b(i, j));
        if (entry != 0.0) y[j] += x[i] * entry;
      }
    }
    const double total = std::accumulate(y.begin(), y.end(), 0.0);
    const double lambda = total;  // since sum(x) == 1
    double deviation = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      deviation = std::max(deviation, std::abs(y[i] - lambda * x[i]));
      scale = std::max(scale, lambda * x[i]);
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / total;
    result.iterations = iter;
    if (deviation <= options.tolerance * scale) {
      result.converged = true;
      break;
    }
  }
  result.vector = std::move(x);
  return result;
}

double eigen_residual(const AdjacencyMatrix& b, std::span<const double> v, double rho, bool transpose) {
  const std::size_t n = b.rows();
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += v[i] * static_cast<double>(transpose ? b(j, i) : b(i, j));
    }
    worst = std::max(worst, std::abs(acc - rho * v[j]));
    scale = std::max(scale, std::abs(v[j]));
  }
  return scale == 0.0 || rho == 0.0 ? worst : worst / (rho * scale);
}

}  // namespace

PerronData perron(const AdjacencyMatrix& block, bool irreducible, const PerronOptions& options) {
  const std::size_t n = block.rows();
  if (block.cols() != n) throw std::invalid_argument("perron: block must be square");
  PerronData pd;
  if (n == 0) return pd;
  if (!irreducible && n != 1) {
    throw std::invalid_argument("perron: only a singleton block may be passed as trivial");
  }
  if (n == 1) {
    pd.rho = static_cast<double>(block(0, 0));
    if (pd.rho > 0.0) {
      pd.left = {1.0};
      pd.right = {1.0};
      pd.normalized = true;
    }
    return pd;
  }

  const PowerResult left = shifted_power_iteration(block, false, options);
  const PowerResult right = shifted_power_iteration(block, true, options);
  if (!left.converged || !right.converged) {
    throw NonConvergence("Perron power iteration did not converge in " +
                         std::to_string(options.max_iterations) +
                         " iterations; block is probably reducible");
  }
  pd.left = left.vector;
  pd.right = right.vector;
  pd.iterations = std::max(left.iterations, right.iterations);

  // Two-sided Rayleigh quotient: rho = v B w / (v . w).
  double vbw = 0.0;
  double vw = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    vw += pd.left[i] * pd.right[i];
    for (std::size_t j = 0; j < n; ++j) {
      vbw += pd.left[i] * static_cast<double>(block(i, j)) * pd.right[j];
    }
  }
  pd.rho = vbw / vw;
  for (double& w : pd.right) w /= vw;
  pd.normalized = true;
  pd.residual = std::max(eigen_residual(block, pd.left, pd.rho, false),
                         eigen_residual(block, pd.right, pd.rho, true));
  return pd;
}

IntPolynomial characteristic_polynomial(const AdjacencyMatrix& matrix) {
  const std::size_t n = matrix.rows();
  if (matrix.cols() != n) throw std::invalid_argument("characteristic_polynomial: square matrix required");
  Matrix<BigInt> a(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = matrix(i, j);
  }
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  Matrix<BigInt> m(n, n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Matrix<BigInt> next(n, n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (a(i, l) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next(i, j) += a(i, l) * m(l, j);
      }
      next(i, i) += c[n - k + 1];
    }
    m = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a(i, l) * m(l, i);
    }
    c[n - k] = -trace / static_cast<unsigned long long>(k);
  }
  return IntPolynomial(std::move(c));
}

SpectrumEstimate spectrum_small(const AdjacencyMatrix& block, std::uint64_t seed) {
  if (block.rows() > kSmallSpectrumLimit) {
    throw std::invalid_argument("spectrum_small: block of size " + std::to_string(block.rows()) +
                                " exceeds limit " + std::to_string(kSmallSpectrumLimit));
  }
  SpectrumEstimate est;
  est.method = "faddeev-leverrier+aberth";
  est.characteristic = characteristic_polynomial(block);
  RootOptions options;
  options.seed = seed;
  est.eigenvalues = polynomial_roots(est.characteristic, options);
  return est;
}

std::size_t peripheral_count(const SpectrumEstimate& spectrum, double rho, double rel_tol) {
  const double tol = rel_tol * std::max(rho, 1.0);
  return static_cast<std::size_t>(std::count_if(
      spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
      [&](const std::complex<double>& z) { return std::abs(std::abs(z) - rho) <= tol; }));
}

Matrix<double> cesaro_average(const AdjacencyMatrix& block, const PerronData& pd, std::size_t k) {
  if (pd.rho <= 0.0) throw std::invalid_argument("cesaro_average: rho must be positive");
  if (k == 0) throw std::invalid_argument("cesaro_average: k must be >= 1");
  const std::size_t n = block.rows();
  Matrix<double> power = Matrix<double>::identity(n);
  Matrix<double> sum = power;
  Matrix<double> next(n, n);
  for (std::size_t l = 1; l <= k; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) acc += power(i, m) * static_cast<double>(block(m, j));
        next(i, j) = acc / pd.rho;
      }
    }
    std::swap(power, next);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum(i, j) += power(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sum(i, j) /= static_cast<double>(k);
  }
  return sum;
}

Matrix<double> perron_projector(const PerronData& pd) {
  const std::size_t n = pd.left.size();
  Matrix<double> p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p(i, j) = pd.right[i] * pd.left[j];
  }
  return p;
}

double max_abs_difference(const Matrix<double>& a, const Matrix<double>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_difference: shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  }
  return worst;
}

GdPolynomial gd_polynomial(int d) {
  if (d < 0 || d > 20) throw std::invalid_argument("gd_polynomial: d must be in [0, 20]");
  const IntPolynomial z = monomial(1, 1);
  const IntPolynomial z_one_minus_z(std::vector<BigInt>{0, 1, -1});
  IntPolynomial g(std::vector<BigInt>{1});
  for (int k = 0; k < d; ++k) {
    g = z_one_minus_z * g.derivative() + BigInt(k + 1) * (z * g);
  }
  return GdPolynomial{d, std::move(g)};
}

bool perron_values_equal(const AdjacencyMatrix& a, double rho_a, const AdjacencyMatrix& b,
                         double rho_b, double rel_tol) {
  const double scale = std::max({std::abs(rho_a), std::abs(rho_b), 1e-300});
  if (std::abs(rho_a - rho_b) > rel_tol * scale) return false;
  if (a.rows() > kExactTieLimit || b.rows() > kExactTieLimit) return true;
  const IntPolynomial common = gcd(characteristic_polynomial(a), characteristic_polynomial(b));
  if (common.degree() < 1) return false;
  const double rho = 0.5 * (rho_a + rho_b);
  for (const auto& root : polynomial_roots(common)) {
    if (std::abs(root - std::complex<double>(rho, 0.0)) <= 1e-6 * std::max(1.0, rho)) return true;
  }
  return false;
}

}  // namespace branchtool
