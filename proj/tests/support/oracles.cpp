#include "support/oracles.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <functional>
#include <numeric>

namespace branchtool::oracles {

std::set<std::size_t> simple_cycle_lengths(const MultiGraph& graph, const std::vector<NodeId>& component) {
  const std::size_t n = graph.node_count();
  std::vector<bool> member(n, false);
  for (NodeId v : component) member[v.index] = true;
  const AdjacencyMatrix a = adjacency_matrix(graph);

  std::set<std::size_t> lengths;
  std::vector<bool> on_path(n, false);
  // Cycles are rooted at their smallest node so each is found from one start.
  for (NodeId start : component) {
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t depth) {
      for (std::size_t w = 0; w < n; ++w) {
        if (a(v, w) == 0 || !member[w] || w < start.index) continue;
        if (w == start.index) {
          lengths.insert(depth + 1);
        } else if (!on_path[w]) {
          on_path[w] = true;
          dfs(w, depth + 1);
          on_path[w] = false;
        }
      }
    };
    on_path[start.index] = true;
    dfs(start.index, 0);
    on_path[start.index] = false;
  }
  return lengths;
}

std::size_t period_by_cycles(const MultiGraph& graph, const std::vector<NodeId>& component) {
  std::size_t h = 0;
  for (std::size_t len : simple_cycle_lengths(graph, component)) h = std::gcd(h, len);
  return h;
}

bool walk_exists(const MultiGraph& graph, NodeId from, NodeId to, std::size_t max_length) {
  const std::size_t n = graph.node_count();
  const AdjacencyMatrix a = adjacency_matrix(graph);
  std::vector<bool> frontier(n, false);
  frontier[from.index] = true;
  for (std::size_t l = 1; l <= max_length; ++l) {
    std::vector<bool> next(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (!frontier[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j) > 0) next[j] = true;
      }
    }
    frontier = std::move(next);
    if (frontier[to.index]) return true;
  }
  return false;
}

Matrix<BigInt> matrix_power(const AdjacencyMatrix& a, std::size_t k) {
  const std::size_t n = a.rows();
  Matrix<BigInt> result = Matrix<BigInt>::identity(n);
  for (std::size_t step = 0; step < k; ++step) {
    Matrix<BigInt> next(n, n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t m = 0; m < n; ++m) {
        if (result(i, m) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next(i, j) += result(i, m) * a(m, j);
      }
    }
    result = std::move(next);
  }
  return result;
}

std::vector<std::complex<double>> dense_eigenvalues(const AdjacencyMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = static_cast<double>(a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index k = 0; k < n; ++k) out.push_back(solver.eigenvalues()(k));
  return out;
}

double power_series_sum(int d, double z) {
  long double sum = 0;
  for (std::size_t l = 0; l < 100000; ++l) {
    const long double term = std::pow(static_cast<long double>(l), d) * std::pow(static_cast<long double>(z), l);
    sum += term;
    if (l > 10 && std::fabs(term) < 1e-18L) break;
  }
  return static_cast<double>(sum);
}

std::vector<BigInt> truncated_series_times_binomial(int d, std::size_t terms) {
  std::vector<BigInt> series(terms, 0);
  for (std::size_t l = 0; l < terms; ++l) {
    BigInt p = 1;
    for (int k = 0; k < d; ++k) p *= l;
    series[l] = (d == 0) ? BigInt(1) : p;
  }
  // Multiply by (1 - z), d + 1 times.
  for (int k = 0; k <= d; ++k) {
    for (std::size_t l = terms; l-- > 1;) series[l] -= series[l - 1];
  }
  return series;
}

std::vector<BigInt> fibonacci_numbers(std::size_t count) {
  std::vector<BigInt> f(count);
  for (std::size_t l = 0; l < count; ++l) f[l] = l < 2 ? BigInt(1) : f[l - 1] + f[l - 2];
  return f;
}

}  // namespace branchtool::oracles
