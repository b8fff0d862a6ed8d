#include "branchtool/polynomial.hpp"

#include "branchtool/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace branchtool {

using cld = std::complex<long double>;

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const BigInt& c : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] / c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * k;
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::evaluate(const BigInt& z) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double IntPolynomial::evaluate(double z) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + it->convert_to<long double>();
  }
  return static_cast<double>(acc);
}

cld IntPolynomial::evaluate(cld z) const {
  cld acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + cld(it->convert_to<long double>(), 0);
  }
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) - b.coefficient(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) {
  std::vector<BigInt> out(a.coeffs_);
  for (BigInt& c : out) c *= s;
  return IntPolynomial(std::move(out));
}

IntPolynomial monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> out(k + 1, 0);
  out[k] = c;
  return IntPolynomial(std::move(out));
}

namespace {

// lc(b)^e * a = q * b + r with deg r < deg b, e = deg a - deg b + 1.
std::pair<IntPolynomial, IntPolynomial> pseudo_divide(const IntPolynomial& a,
                                                      const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
  const int db = b.degree();
  std::vector<BigInt> r = a.coefficients();
  if (a.degree() < db) return {IntPolynomial{}, a};
  const int steps = a.degree() - db + 1;
  std::vector<BigInt> q(static_cast<std::size_t>(steps), 0);
  const BigInt& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const BigInt lead = r[static_cast<std::size_t>(k)];
    // Multiply everything so far by lc(b), then cancel the top term.
    for (BigInt& c : r) c *= lb;
    for (BigInt& c : q) c *= lb;
    q[static_cast<std::size_t>(k - db)] += lead;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(k - db + j)] -= lead * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

}  // namespace

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  return pseudo_divide(a, b).second;
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return {};
  auto [q, r] = pseudo_divide(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_quotient: divisor does not divide dividend");
  if (a.degree() < b.degree()) throw std::domain_error("exact_quotient: degree mismatch");
  BigInt scale = 1;
  for (int k = 0; k < a.degree() - b.degree() + 1; ++k) scale *= b.leading();
  std::vector<BigInt> out = q.coefficients();
  for (BigInt& c : out) {
    if (c % scale != 0) throw std::domain_error("exact_quotient: non-integral quotient");
    c /= scale;
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, int>> factors;
  if (p.degree() < 1) return factors;
  const IntPolynomial f = p.primitive_part();
  const IntPolynomial df = f.derivative();
  const IntPolynomial a0 = gcd(f, df);
  IntPolynomial b = exact_quotient(f, a0);
  IntPolynomial c = exact_quotient(df, a0);
  IntPolynomial d = c - b.derivative();
  for (int multiplicity = 1; b.degree() > 0; ++multiplicity) {
    const IntPolynomial a = d.is_zero() ? b : gcd(b, d);
    if (a.degree() > 0) factors.emplace_back(a, multiplicity);
    const IntPolynomial next_b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    b = next_b;
    d = c - b.derivative();
  }
  return factors;
}

namespace {

bool aberth(const std::vector<cld>& coeffs, std::vector<cld>& z, const RootOptions& options) {
  const std::size_t n = z.size();
  std::vector<cld> dcoeffs(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) dcoeffs[k - 1] = coeffs[k] * static_cast<long double>(k);
  auto horner = [](const std::vector<cld>& c, cld x) {
    cld acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const cld pv = horner(coeffs, z[k]);
      if (pv == cld(0)) continue;
      const cld ratio = pv / horner(dcoeffs, z[k]);
      cld repulsion = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += cld(1) / (z[k] - z[j]);
      }
      const cld step = ratio / (cld(1) - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
    }
    if (worst <= options.tolerance) return true;
  }
  return false;
}

}  // namespace

std::vector<std::complex<double>> square_free_roots(const IntPolynomial& p,
                                                    const RootOptions& options) {
  const int degree = p.degree();
  if (degree < 1) return {};
  std::vector<cld> coeffs;
  coeffs.reserve(p.coefficients().size());
  const long double lead = p.leading().convert_to<long double>();
  for (const BigInt& c : p.coefficients()) coeffs.emplace_back(c.convert_to<long double>() / lead, 0);

  if (degree == 1) return {std::complex<double>(static_cast<double>(-coeffs[0].real()), 0.0)};

  // Cauchy bound on root moduli.
  long double bound = 0;
  for (int k = 0; k < degree; ++k) bound = std::max(bound, std::abs(coeffs[static_cast<std::size_t>(k)]));
  bound += 1;

  std::mt19937_64 rng(options.seed);
  const auto n = static_cast<std::size_t>(degree);
  std::vector<cld> z(n);
  for (int attempt = 0; attempt <= options.max_restarts; ++attempt) {
    for (std::size_t k = 0; k < n; ++k) {
      // Portable uniform draws from the raw engine output.
      const long double jitter = attempt == 0 ? 0.0L : static_cast<long double>(rng() >> 11) * 0x1.0p-53L;
      const long double angle = 2 * std::numbers::pi_v<long double> * (k + 0.25L + 0.5L * jitter) / n + 0.4L;
      const long double radius = bound * (0.5L + 0.25L * jitter);
      z[k] = std::polar(radius, angle);
    }
    if (aberth(coeffs, z, options)) {
      std::vector<std::complex<double>> roots;
      roots.reserve(n);
      for (cld r : z) {
        // Snap negligible imaginary parts of real roots.
        const long double im = std::abs(r.imag()) <= 1e-15L * std::max<long double>(1, std::abs(r)) ? 0 : r.imag();
        roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(im));
      }
      return roots;
    }
  }
  throw NonConvergence("polynomial root iteration did not converge after " +
                       std::to_string(options.max_restarts) + " restarts");
}

std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p, const RootOptions& options) {
  std::vector<std::complex<double>> roots;
  if (p.degree() < 1) return roots;
  // Zero roots come straight from the trailing zero coefficients.
  std::size_t zeros = 0;
  while (p.coefficients()[zeros] == 0) ++zeros;
  roots.assign(zeros, {0.0, 0.0});
  std::vector<BigInt> rest(p.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros), p.coefficients().end());
  const IntPolynomial reduced(std::move(rest));

  RootOptions local = options;
  for (const auto& [factor, multiplicity] : square_free_decomposition(reduced)) {
    const auto factor_roots = square_free_roots(factor, local);
    local.seed = local.seed * 6364136223846793005ULL + 1442695040888963407ULL;
    for (int m = 0; m < multiplicity; ++m) roots.insert(roots.end(), factor_roots.begin(), factor_roots.end());
  }

  auto key = [](const std::complex<double>& z) {
    double arg = std::arg(z);
    if (arg < -1e-12) arg += 2 * std::numbers::pi;
    if (arg < 0) arg = 0;
    return std::pair<long long, double>(-std::llround(std::abs(z) * 1e9), arg);
  };
  std::sort(roots.begin(), roots.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return roots;
}

}  // namespace branchtool
