#pragma once

// Trigonometric-interpolant helpers for periodic samples on [0, 2*pi).
// Direct O(n^2) transforms; grids here stay at a few hundred nodes.

#include <complex>
#include <span>
#include <vector>

namespace areaflow::spectral {

using Complex = std::complex<double>;

/// c_m = (1/n) sum_j f_j exp(-i m theta_j), m = 0..n-1.
std::vector<Complex> forward(std::span<const Complex> f);

/// f_j = sum_m c_m exp(i m theta_j), m = 0..n-1.
std::vector<Complex> inverse(std::span<const Complex> c);

/// Signed wavenumber of DFT index m (Nyquist index reported as +n/2).
long wavenumber(std::size_t m, std::size_t n);

/// Cumulative integral from theta = 0 to each node of the trigonometric
/// interpolant of `f`. The mean of `f` contributes a linear term, so the
/// value continued to 2*pi equals the periodic trapezoid sum.
std::vector<Complex> antiderivative(std::span<const Complex> f);

/// d/dtheta of the trigonometric interpolant, Nyquist mode dropped.
std::vector<Complex> derivative(std::span<const Complex> f);

}  // namespace areaflow::spectral
