#pragma once

// Independent spectral oracles. None of these use the closed forms they are
// meant to check: the torus and product spectra come from lattice / tensor
// enumeration, the Hopf spectrum from the circle-weight decomposition of
// spherical harmonics, and fd_lambda1 from an actual sparse eigensolve.

#include <span>
#include <stdexcept>
#include <vector>

#include "cvspec/model.hpp"

namespace cvspec {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LatticeCutoff {
  int max_norm_sq = 1;  // enumerate y in Z^n with |y|^2 <= max_norm_sq
};

/// Unit square torus T^2 = R^2/Z^2 with N x N grid points (h = 1/N).
struct FDGrid {
  int N = 16;
  double t = 1.0;

  double h() const { return 1.0 / N; }
};

struct FdOptions {
  double rel_residual = 1e-10;
  int max_outer = 200;
  int max_cg = 20000;
};

struct FdResult {
  double lambda1 = 0.0;
  double rel_residual = 0.0;
  int outer_iterations = 0;
};

/// Joint spectrum of T^n -> T^{n-1}: pairs (4π²|y|², 4π²|y'|²), y' = y without
/// its last coordinate. Multiplicities count lattice vectors.
JointSpectrum torus_joint_spectrum(int n, LatticeCutoff cut);

/// Joint spectrum of B x F -> B from the base and fiber eigenvalue lists
/// (each sorted ascending, starting at 0, complete up to `cutoff`): pairs
/// (λ_k + μ_l, λ_k) with λ_k + μ_l <= cutoff.
JointSpectrum product_joint_spectrum(std::span<const double> base_spec,
                                     std::span<const double> fiber_spec,
                                     double cutoff);

/// Eigenvalues m² of the unit circle with multiplicity, for |m| <= m_max.
std::vector<double> circle_spectrum(int m_max);

/// Joint spectrum of S^1 -> S^{2n+1} -> CP^n: degree-k harmonics split by
/// circle weight m in {-k, -k+2, ..., k}, giving (k(k+2n), k(k+2n) - m²).
JointSpectrum hopf_joint_spectrum(int n, int k_max);

/// Smallest positive eigenvalue of the periodic 5-point operator
/// -wx ∂x² - wy ∂y² on the N x N grid, by inverse iteration on the
/// mean-zero subspace with conjugate-gradient inner solves.
FdResult fd_solve(int N, double wx, double wy, const FdOptions& opts = {});

/// λ_1 of the discretized Δ_{g_t} = -∂x² - t^{-2}∂y² on T^2.
double fd_lambda1(const FDGrid& grid);

}  // namespace cvspec
