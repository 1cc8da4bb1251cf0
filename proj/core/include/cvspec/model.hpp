#pragma once

// Domain types for a Riemannian submersion with totally geodesic fibers and
// the spectral law of its canonical variation g_t (vertical directions scaled
// by t^2). Everything here is purely parametric: a geometry is a handful of
// dimensions and curvature constants, and the spectrum of Δ on (M, g_t) is
// recovered from joint eigenpairs (λ, a) of Δ^M and the horizontal Laplacian.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvspec {

/// Thrown when a truncated spectrum cannot certify its own minimum.
class InsufficientCutoff : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SubmersionGeometry {
  std::string name;
  int n = 0;              // dim M
  int p = 0;              // dim B
  double c_tilde = 0.0;   // Ric^M >= c_tilde g
  double c = 0.0;         // Ric^F = c g_F; zero when p == n - 1
  std::optional<double> beta1;      // first positive eigenvalue of the base
  std::optional<double> a_norm_sq;  // |A|^2
  std::optional<double> s_base;     // S^B
  std::optional<double> s_fiber;    // S^F
  std::optional<double> vol_m;      // Vol(M, g)
  bool einstein = false;            // Ric^M = c_tilde g exactly

  /// Normalizes (c := 0 when p == n - 1) and checks the structural
  /// invariants. Throws std::invalid_argument on violation.
  static SubmersionGeometry validated(SubmersionGeometry g);

  int fiber_dim() const { return n - p; }

  /// n >= 3, c_tilde > 0 and 0 <= c < c_tilde: the curvature hypotheses under
  /// which the lower bound and the stability threshold hold.
  bool satisfies_main_hypotheses() const;

  /// Fiber scalar curvature, falling back to (n - p) c.
  double fiber_scalar() const;

  /// Base scalar curvature, falling back to the Einstein identity
  /// n c_tilde = -|A|^2 + S^B + S^F. nullopt when neither is available.
  std::optional<double> base_scalar() const;

  bool operator==(const SubmersionGeometry&) const = default;
};

/// Throws std::invalid_argument unless g satisfies the main hypotheses.
void require_main_hypotheses(const SubmersionGeometry& g);

struct JointEigenpair {
  double lambda = 0.0;  // eigenvalue of Δ^M at t = 1
  double a = 0.0;       // eigenvalue of Δ_h on the same eigenfunction
  std::optional<int> mult;

  bool is_constant() const { return lambda == 0.0 && a == 0.0; }
  bool operator==(const JointEigenpair&) const = default;
};

/// Finite, sorted, duplicate-free list of joint eigenpairs. Every pair with
/// lambda <= cutoff() is present.
class JointSpectrum {
 public:
  JointSpectrum() = default;
  JointSpectrum(std::vector<JointEigenpair> pairs, double cutoff);

  std::span<const JointEigenpair> pairs() const { return pairs_; }
  double cutoff() const { return cutoff_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

 private:
  std::vector<JointEigenpair> pairs_;
  double cutoff_ = 0.0;
};

/// One affine-in-t^{-2} branch A + B t^{-2}.
struct AffineBranch {
  double A = 0.0;
  double B = 0.0;

  double operator()(double t) const { return A + B / (t * t); }
  bool operator==(const AffineBranch&) const = default;
};

/// min_i branches[i](t). Throws on an empty list or t <= 0.
double min_branch(std::span<const AffineBranch> branches, double t);

/// Eigenvalue of Δ_{g_t} on a joint eigenfunction: t^{-2} λ + (1 - t^{-2}) a.
double variation_eigenvalue(const JointEigenpair& pair, double t);

/// First positive eigenvalue of Δ_{g_t}, the minimum of variation_eigenvalue
/// over all non-constant pairs. Throws InsufficientCutoff when a pair beyond
/// the cutoff could still undercut the retained minimum.
double lambda1_of_t(const JointSpectrum& spec, double t);

/// All non-constant pairs attaining lambda1_of_t(spec, t) within rel_tol.
std::vector<JointEigenpair> lambda1_achievers(const JointSpectrum& spec,
                                              double t,
                                              double rel_tol = 1e-12);

/// Vol(M, g_t) = vol t^{n-p}.
double volume_of_t(double vol, int n, int p, double t);

/// Λ_1 = λ_1 Vol^{2/n}.
double scale_invariant_lambda1(double lambda1, double vol, int n);

}  // namespace cvspec
