#pragma once

// Test-only oracles, kept independent of the code paths they check:
// dense from-first-principles operator builds, brute-force tensor
// contractions, Riemann-sum quadratures, small ODE integrators.

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::Vector3cd;
using Eigen::Vector3d;
using Eigen::VectorXcd;

// Dense single-mode annihilation operator, straight from the definition
// a|n> = sqrt(n)|n-1>.
inline MatrixXcd dense_ladder(int n_max) {
  MatrixXcd a = MatrixXcd::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

// Triple/quadruple index-loop contractions (the brute-force route).
inline Complex contract3(const std::array<Complex, 27>& chi, const Vector3cd& e3c,
                         const Vector3cd& e2, const Vector3cd& e1) {
  Complex s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        s += chi[9 * i + 3 * j + k] * std::conj(e3c[i]) * e2[j] * e1[k];
  return s;
}

inline Complex contract4(const std::array<Complex, 81>& chi, const Vector3cd& e4c,
                         const Vector3cd& e3c, const Vector3cd& e2,
                         const Vector3cd& e1) {
  Complex s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          s += chi[27 * i + 9 * j + 3 * k + l] * std::conj(e4c[i]) *
               std::conj(e3c[j]) * e2[k] * e1[l];
  return s;
}

// (1/V) ∫_box e^{i q·r} d³r by midpoint Riemann sum.
inline Complex box_phase_integral(const Vector3d& q, double Lx, double Ly, double Lz,
                                  int n = 64) {
  Complex s = 0.0;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        const double x = (ix + 0.5) * Lx / n;
        const double y = (iy + 0.5) * Ly / n;
        const double z = (iz + 0.5) * Lz / n;
        s += std::exp(Complex(0.0, q.x() * x + q.y() * y + q.z() * z));
      }
  return s / double(n) / double(n) / double(n);
}

// Fixed-seed RNG helpers so every run sees the same draws.
inline std::mt19937_64 rng(unsigned seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Complex random_complex(std::mt19937_64& g, double scale = 1.0) {
  return Complex(uniform(g, -scale, scale), uniform(g, -scale, scale));
}

inline Vector3cd random_unit_polarization(std::mt19937_64& g, const Vector3d& k,
                                          bool complex_pol = false) {
  // orthonormal frame transverse to k
  Vector3d khat = k.normalized();
  Vector3d ref = std::abs(khat.z()) < 0.9 ? Vector3d(0, 0, 1) : Vector3d(1, 0, 0);
  Vector3d u = khat.cross(ref).normalized();
  Vector3d v = khat.cross(u).normalized();
  Complex cu(uniform(g, -1, 1), complex_pol ? uniform(g, -1, 1) : 0.0);
  Complex cv(uniform(g, -1, 1), complex_pol ? uniform(g, -1, 1) : 0.0);
  Vector3cd p = cu * u.cast<Complex>() + cv * v.cast<Complex>();
  return p / p.norm();
}

// 4th-order Runge-Kutta for a small complex linear ODE y' = f(t, y).
template <typename F>
inline VectorXcd rk4(F f, VectorXcd y0, double t0, double t1, int steps) {
  VectorXcd y = std::move(y0);
  const double h = (t1 - t0) / steps;
  double t = t0;
  for (int s = 0; s < steps; ++s) {
    VectorXcd k1 = f(t, y);
    VectorXcd k2 = f(t + h / 2, VectorXcd(y + h / 2 * k1));
    VectorXcd k3 = f(t + h / 2, VectorXcd(y + h / 2 * k2));
    VectorXcd k4 = f(t + h, VectorXcd(y + h * k3));
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    t += h;
  }
  return y;
}

}  // namespace oracle
