#pragma once

#include <finsler3/geometry.hpp>

#include <memory>
#include <string>
#include <vector>

namespace finsler3 {

/// A Finsler structure on a single chart: a positively 1-homogeneous,
/// smooth, strongly convex gauge F(p, y) on the slit tangent bundle.
///
/// Implementations provide the raw evaluator; energy, fiber gradients and
/// the fundamental tensor are derived here so every metric in the zoo is
/// treated uniformly (all derivatives are finite differences).
class FinslerMetric {
 public:
  virtual ~FinslerMetric() = default;

  /// F(p, y) for y off the singular locus. Must be positive.
  virtual double value(const Vec3& p, const Vec3& y) const = 0;

  /// Chart box on which base-point evaluations are valid.
  virtual Box3 domain() const = 0;

  virtual std::string name() const = 0;

  /// True where F is not differentiable. The zero section is always singular.
  virtual bool is_singular(const Vec3& p, const Vec3& y) const {
    (void)p;
    return y.norm() < 1e-14;
  }

  /// E(p, y) = F^2 / 2, the energy; positively 2-homogeneous in y.
  double energy(const Vec3& p, const Vec3& y) const;

  /// dE/dy by central differences.
  Vec3 energy_fiber_gradient(const Vec3& p, const Vec3& y, const DiffScheme& scheme) const;

  /// dE/dx (base derivatives at frozen fiber coordinates).
  Vec3 energy_base_gradient(const Vec3& p, const Vec3& y, const DiffScheme& scheme) const;

  /// Fundamental tensor g_ij(p, y): the fiber Hessian of the energy,
  /// symmetric by construction. Positive definiteness is the caller's
  /// check (see spd_check / verify_axioms).
  Mat3 metric_tensor(const Vec3& p, const Vec3& y, const DiffScheme& scheme) const;

 protected:
  void require_regular(const Vec3& p, const Vec3& y) const;
};

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

struct AxiomReport {
  double max_homogeneity_residual = 0.0;  // relative, over t in a fixed set
  double min_hessian_eigenvalue = 0.0;
  double max_euler_residual = 0.0;            // |y.dE/dy - 2E| / (1+|E|)
  double derivative_stability_ratio = 0.0;    // step-refinement change of g
  bool homogeneous = false;
  bool strongly_convex = false;
  bool derivatives_stable = false;
  std::vector<std::string> violations;

  bool passed() const { return homogeneous && strongly_convex && derivatives_stable; }
};

/// Samples a deterministic plan of (p, y) pairs over the metric's domain and
/// checks positive homogeneity, strong convexity and derivative stability
/// under step refinement.
AxiomReport verify_axioms(const FinslerMetric& metric, const DiffScheme& scheme,
                          int base_points_per_axis = 2, int directions = 26);

/// Deterministic spread of fiber directions (axes, diagonals, spiral fill).
std::vector<Vec3> direction_plan(int count);

}  // namespace finsler3
