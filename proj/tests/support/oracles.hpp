#pragma once

// Test-only reference computations. None of these reuse the library's
// algorithms; they exist to check them.

#include "branchtool/bigint.hpp"
#include "branchtool/graph.hpp"
#include "branchtool/matrix.hpp"

#include <complex>
#include <set>
#include <vector>

namespace branchtool::oracles {

/// Lengths of all simple cycles inside `component` (exhaustive DFS).
std::set<std::size_t> simple_cycle_lengths(const MultiGraph& graph, const std::vector<NodeId>& component);

/// gcd of simple cycle lengths, 0 if there are none.
std::size_t period_by_cycles(const MultiGraph& graph, const std::vector<NodeId>& component);

/// True if some walk from `from` to `to` of length 1..max_length exists,
/// found by boolean matrix powers.
bool walk_exists(const MultiGraph& graph, NodeId from, NodeId to, std::size_t max_length);

/// Exact A^k.
Matrix<BigInt> matrix_power(const AdjacencyMatrix& a, std::size_t k);

/// Eigenvalues from Eigen's dense non-symmetric solver.
std::vector<std::complex<double>> dense_eigenvalues(const AdjacencyMatrix& a);

/// sum_{l=0..N} l^d z^l with N large enough that the tail is below 1e-15.
double power_series_sum(int d, double z);

/// Coefficients of F_d(z) (1-z)^(d+1) truncated to degree `terms`-1, exactly.
std::vector<BigInt> truncated_series_times_binomial(int d, std::size_t terms);

inline BigInt pow_big(std::uint64_t base, std::size_t exponent) {
  BigInt r = 1;
  for (std::size_t k = 0; k < exponent; ++k) r *= base;
  return r;
}

/// F_0 = F_1 = 1, F_l = F_{l-1} + F_{l-2}.
std::vector<BigInt> fibonacci_numbers(std::size_t count);

}  // namespace branchtool::oracles
