#include "cvspec/oracle.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace cvspec {

namespace {

constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;

// Periodic anisotropic 5-point Laplacian, applied matrix-free.
class PeriodicStencil {
 public:
  PeriodicStencil(int N, double wx, double wy)
      : N_(N), cx_(wx * N * N), cy_(wy * N * N) {}

  void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    y.resize(x.size());
    for (int j = 0; j < N_; ++j) {
      const int jp = (j + 1) % N_;
      const int jm = (j + N_ - 1) % N_;
      for (int i = 0; i < N_; ++i) {
        const int ip = (i + 1) % N_;
        const int im = (i + N_ - 1) % N_;
        const double c = x[idx(i, j)];
        y[idx(i, j)] = cx_ * (2.0 * c - x[idx(ip, j)] - x[idx(im, j)]) +
                       cy_ * (2.0 * c - x[idx(i, jp)] - x[idx(i, jm)]);
      }
    }
  }

  int size() const { return N_ * N_; }

 private:
  int idx(int i, int j) const { return j * N_ + i; }

  int N_;
  double cx_;
  double cy_;
};

void project_mean_zero(Eigen::VectorXd& v) { v.array() -= v.mean(); }

// Solves L x = b on the mean-zero subspace, where L is SPD.
void cg_solve(const PeriodicStencil& op, const Eigen::VectorXd& b,
              Eigen::VectorXd& x, double rel_tol, int max_iter) {
  x.setZero(b.size());
  Eigen::VectorXd r = b;
  project_mean_zero(r);
  Eigen::VectorXd p = r;
  Eigen::VectorXd Ap(b.size());
  double rr = r.squaredNorm();
  const double stop = rel_tol * rel_tol * rr;
  for (int it = 0; it < max_iter && rr > stop; ++it) {
    op.apply(p, Ap);
    const double alpha = rr / p.dot(Ap);
    x.noalias() += alpha * p;
    r.noalias() -= alpha * Ap;
    const double rr_new = r.squaredNorm();
    p = r + (rr_new / rr) * p;
    rr = rr_new;
  }
  if (rr > stop * 1e6) {
    throw ConvergenceError("fd_solve: conjugate gradient stalled");
  }
  project_mean_zero(x);
}

}  // namespace

JointSpectrum torus_joint_spectrum(int n, LatticeCutoff cut) {
  if (n < 2) throw std::invalid_argument("torus_joint_spectrum: n must be >= 2");
  if (cut.max_norm_sq < 1) {
    throw std::invalid_argument("torus_joint_spectrum: max_norm_sq must be >= 1");
  }
  const int r = static_cast<int>(std::floor(std::sqrt(cut.max_norm_sq)));
  std::vector<int> y(n, -r);
  std::vector<JointEigenpair> pairs;
  // Odometer over the box [-r, r]^n, filtered by |y|^2.
  while (true) {
    long norm = 0;
    for (int v : y) norm += static_cast<long>(v) * v;
    if (norm <= cut.max_norm_sq) {
      const long last = static_cast<long>(y.back()) * y.back();
      pairs.push_back({kFourPiSq * static_cast<double>(norm),
                       kFourPiSq * static_cast<double>(norm - last), 1});
    }
    int d = 0;
    while (d < n && y[d] == r) y[d++] = -r;
    if (d == n) break;
    ++y[d];
  }
  return JointSpectrum(std::move(pairs), kFourPiSq * cut.max_norm_sq);
}

JointSpectrum product_joint_spectrum(std::span<const double> base_spec,
                                     std::span<const double> fiber_spec,
                                     double cutoff) {
  auto check = [cutoff](std::span<const double> s, const char* what) {
    if (s.empty() || s.front() != 0.0) {
      throw std::invalid_argument(std::string(what) + " spectrum must start at 0");
    }
    if (!std::is_sorted(s.begin(), s.end())) {
      throw std::invalid_argument(std::string(what) + " spectrum is not sorted");
    }
    if (s.back() < cutoff) {
      throw std::invalid_argument(std::string(what) +
                                  " spectrum does not reach the cutoff");
    }
  };
  check(base_spec, "base");
  check(fiber_spec, "fiber");
  std::vector<JointEigenpair> pairs;
  for (double lb : base_spec) {
    if (lb > cutoff) break;
    for (double lf : fiber_spec) {
      if (lb + lf > cutoff) break;
      pairs.push_back({lb + lf, lb, std::nullopt});
    }
  }
  return JointSpectrum(std::move(pairs), cutoff);
}

std::vector<double> circle_spectrum(int m_max) {
  if (m_max < 1) throw std::invalid_argument("circle_spectrum: m_max must be >= 1");
  std::vector<double> out{0.0};
  for (int m = 1; m <= m_max; ++m) {
    out.push_back(static_cast<double>(m) * m);
    out.push_back(static_cast<double>(m) * m);
  }
  return out;
}

JointSpectrum hopf_joint_spectrum(int n, int k_max) {
  if (n < 1) throw std::invalid_argument("hopf_joint_spectrum: n must be >= 1");
  if (k_max < 2) throw std::invalid_argument("hopf_joint_spectrum: k_max must be >= 2");
  std::vector<JointEigenpair> pairs;
  pairs.push_back({0.0, 0.0, 1});
  for (long k = 1; k <= k_max; ++k) {
    const long lam = k * (k + 2L * n);
    for (long m = -k; m <= k; m += 2) {
      pairs.push_back({static_cast<double>(lam), static_cast<double>(lam - m * m),
                       std::nullopt});
    }
  }
  const double cutoff = static_cast<double>(k_max) * (k_max + 2.0 * n);
  return JointSpectrum(std::move(pairs), cutoff);
}

FdResult fd_solve(int N, double wx, double wy, const FdOptions& opts) {
  if (N < 4 || N % 2 != 0) {
    throw std::invalid_argument("fd_solve: N must be even and >= 4");
  }
  if (!(wx > 0.0) || !(wy > 0.0) || !std::isfinite(wx) || !std::isfinite(wy)) {
    throw std::invalid_argument("fd_solve: weights must be positive");
  }
  const PeriodicStencil op(N, wx, wy);
  const int dim = op.size();

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::VectorXd x(dim);
  for (int i = 0; i < dim; ++i) x[i] = unif(rng);
  project_mean_zero(x);
  x.normalize();

  Eigen::VectorXd y(dim), Lx(dim);
  FdResult res;
  for (int it = 1; it <= opts.max_outer; ++it) {
    cg_solve(op, x, y, 1e-13, opts.max_cg);
    x = y.normalized();
    op.apply(x, Lx);
    const double theta = x.dot(Lx);
    res.lambda1 = theta;
    res.rel_residual = (Lx - theta * x).norm() / std::abs(theta);
    res.outer_iterations = it;
    if (res.rel_residual < opts.rel_residual) return res;
  }
  throw ConvergenceError("fd_solve: inverse iteration did not converge (N=" +
                         std::to_string(N) + ", residual " +
                         std::to_string(res.rel_residual) + ")");
}

double fd_lambda1(const FDGrid& grid) {
  if (!(grid.t > 0.0)) throw std::invalid_argument("fd_lambda1: t must be positive");
  return fd_solve(grid.N, 1.0, 1.0 / (grid.t * grid.t)).lambda1;
}

}  // namespace cvspec
