#include "areaflow/spectral.hpp"

#include <cmath>
#include <numbers>

namespace areaflow::spectral {
namespace {

std::vector<Complex> twiddles(std::size_t n, double sign) {
  std::vector<Complex> w(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    w[k] = Complex(std::cos(angle), std::sin(angle));
  }
  return w;
}

std::vector<Complex> transform(std::span<const Complex> in, double sign) {
  const std::size_t n = in.size();
  const auto w = twiddles(n, sign);
  std::vector<Complex> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    Complex acc = 0.0;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += in[j] * w[idx];
      idx += m;
      if (idx >= n) idx -= n;
    }
    out[m] = acc;
  }
  return out;
}

}  // namespace

std::vector<Complex> forward(std::span<const Complex> f) {
  auto c = transform(f, -1.0);
  const double inv_n = 1.0 / static_cast<double>(f.size());
  for (auto& v : c) v *= inv_n;
  return c;
}

std::vector<Complex> inverse(std::span<const Complex> c) { return transform(c, +1.0); }

long wavenumber(std::size_t m, std::size_t n) {
  return m <= n / 2 ? static_cast<long>(m) : static_cast<long>(m) - static_cast<long>(n);
}

std::vector<Complex> antiderivative(std::span<const Complex> f) {
  const std::size_t n = f.size();
  auto c = forward(f);
  const Complex mean = c[0];
  std::vector<Complex> d(n, 0.0);
  for (std::size_t m = 1; m < n; ++m) {
    if (2 * m == n) continue;  // cos(n theta/2) integrates to zero at the nodes
    const double k = static_cast<double>(wavenumber(m, n));
    d[m] = c[m] / Complex(0.0, k);
  }
  auto g = inverse(d);
  const Complex g0 = g[0];
  const double spacing = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    g[j] = mean * (spacing * static_cast<double>(j)) + (g[j] - g0);
  }
  return g;
}

std::vector<Complex> derivative(std::span<const Complex> f) {
  const std::size_t n = f.size();
  auto c = forward(f);
  for (std::size_t m = 0; m < n; ++m) {
    if (2 * m == n) {
      c[m] = 0.0;
      continue;
    }
    c[m] *= Complex(0.0, static_cast<double>(wavenumber(m, n)));
  }
  return inverse(c);
}

}  // namespace areaflow::spectral
