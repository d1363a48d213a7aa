#pragma once

#include <finsler3/fields.hpp>
#include <finsler3/finsler_metric.hpp>

#include <memory>
#include <string>

namespace finsler3 {

// ---------------------------------------------------------------------------
// Minkowski norms (fiber-only gauges)
// ---------------------------------------------------------------------------

/// Strongly convex norm on R^3, the building block for locally Minkowski and
/// group-invariant metrics.
class MinkowskiNorm {
 public:
  virtual ~MinkowskiNorm() = default;
  virtual double value(const Vec3& y) const = 0;
  virtual std::string name() const = 0;
};

class EuclideanNorm final : public MinkowskiNorm {
 public:
  double value(const Vec3& y) const override { return y.norm(); }
  std::string name() const override { return "euclidean"; }
};

/// F^2 = |y|^2 + eps * sqrt(sum y_i^4). Octahedrally symmetric and
/// non-quadratic; strongly convex for moderate eps.
class QuarticNorm final : public MinkowskiNorm {
 public:
  explicit QuarticNorm(double eps) : eps_(eps) {}
  double value(const Vec3& y) const override {
    const double q = y.array().pow(4).sum();
    return std::sqrt(y.squaredNorm() + eps_ * std::sqrt(q));
  }
  std::string name() const override { return "quartic"; }
  double eps() const { return eps_; }

 private:
  double eps_;
};

// ---------------------------------------------------------------------------
// Chart metrics
// ---------------------------------------------------------------------------

/// F(p, y) = |y|; the flat reference case.
class EuclideanMetric final : public FinslerMetric {
 public:
  explicit EuclideanMetric(const Box3& box = default_box());
  double value(const Vec3& p, const Vec3& y) const override;
  Box3 domain() const override { return box_; }
  std::string name() const override { return "euclidean"; }
  static Box3 default_box() { return Box3(Vec3(-1, -1, -1), Vec3(1, 1, 1)); }

 private:
  Box3 box_;
};

/// F(p, y) = sqrt(a_p(y, y)) for an SPD matrix field a.
class RiemannianMetric final : public FinslerMetric {
 public:
  RiemannianMetric(std::shared_ptr<const MatrixField> a, const Box3& box);
  double value(const Vec3& p, const Vec3& y) const override;
  Box3 domain() const override { return box_; }
  std::string name() const override { return "riemannian"; }
  const MatrixField& input_field() const { return *a_; }

 private:
  std::shared_ptr<const MatrixField> a_;
  Box3 box_;
};

/// Base-independent metric F(p, y) = N(y) for a Minkowski norm N.
class LocallyMinkowskiMetric final : public FinslerMetric {
 public:
  LocallyMinkowskiMetric(std::shared_ptr<const MinkowskiNorm> norm, const Box3& box);
  double value(const Vec3& p, const Vec3& y) const override;
  Box3 domain() const override { return box_; }
  std::string name() const override;

 private:
  std::shared_ptr<const MinkowskiNorm> norm_;
  Box3 box_;
};

/// Randers-type norm F = |y| + b . y with |b| < 1.
class RandersMetric final : public FinslerMetric {
 public:
  RandersMetric(const Vec3& drift, const Box3& box = EuclideanMetric::default_box());
  double value(const Vec3& p, const Vec3& y) const override;
  Box3 domain() const override { return box_; }
  std::string name() const override { return "randers"; }

 private:
  Vec3 drift_;
  Box3 box_;
};

/// Gauge of the trifocal body {w : |w + beta_p| + |w| + |w - beta_p| <= c}.
/// The focal points 0 and +-beta_p must be interior, i.e. c > 2 |beta_p|.
class TrifocalMetric final : public FinslerMetric {
 public:
  TrifocalMetric(std::shared_ptr<const VectorField> focus, double c, const Box3& box);
  double value(const Vec3& p, const Vec3& y) const override;
  Box3 domain() const override { return box_; }
  std::string name() const override { return "trifocal"; }

  /// Sum of the three focal distances at w.
  double body_function(const Vec3& p, const Vec3& w) const;

 private:
  std::shared_ptr<const VectorField> focus_;
  double c_;
  Box3 box_;
};

// ---------------------------------------------------------------------------
// Left-invariant metric on SU(2)
// ---------------------------------------------------------------------------

/// Chart on the unit quaternions near the identity: q(x) = (w, x) with
/// w = sqrt(1 - |x|^2). `maurer_cartan(x)` maps chart velocities to Lie
/// algebra components (basis i, j, k), i.e. the matrix A with
/// A y = Im( q(x)^{-1} * dq_x(y) ).
namespace su2 {

Mat3 maurer_cartan(const Vec3& x);
Mat3 maurer_cartan_derivative(const Vec3& x, int direction);
constexpr double kChartRadius = 0.8;  // |x| must stay below 1; keep margin

}  // namespace su2

/// F(p, y) = r * N(A(p) y): the left-invariant extension of a Minkowski norm
/// from the Lie algebra, in the quaternion chart. Its length is preserved by
/// the parallel transport that keeps the invariant frame constant.
class Su2LeftInvariantMetric final : public FinslerMetric {
 public:
  Su2LeftInvariantMetric(std::shared_ptr<const MinkowskiNorm> norm, double scale,
                         const Box3& box = default_box());
  double value(const Vec3& p, const Vec3& y) const override;
  Box3 domain() const override { return box_; }
  std::string name() const override;
  double scale() const { return scale_; }

  static Box3 default_box() {
    return Box3(Vec3(-0.35, -0.35, -0.35), Vec3(0.35, 0.35, 0.35));
  }

 private:
  std::shared_ptr<const MinkowskiNorm> norm_;
  double scale_;
  Box3 box_;
};

/// Quartic norm with a base-dependent amplitude; the drift in eps destroys
/// compatibility with every linear connection, which makes this the negative
/// control for the consistency checks.
class QuarticDriftMetric final : public FinslerMetric {
 public:
  QuarticDriftMetric(double eps0, double amplitude,
                     const Box3& box = EuclideanMetric::default_box());
  double value(const Vec3& p, const Vec3& y) const override;
  Box3 domain() const override { return box_; }
  std::string name() const override { return "quartic-xdep"; }

 private:
  double eps0_;
  double amplitude_;
  Box3 box_;
};

/// lambda * F for a wrapped metric; used for scaling invariance checks.
class ScaledMetric final : public FinslerMetric {
 public:
  ScaledMetric(std::shared_ptr<const FinslerMetric> base, double lambda);
  double value(const Vec3& p, const Vec3& y) const override;
  Box3 domain() const override { return base_->domain(); }
  std::string name() const override;
  bool is_singular(const Vec3& p, const Vec3& y) const override {
    return base_->is_singular(p, y);
  }

 private:
  std::shared_ptr<const FinslerMetric> base_;
  double lambda_;
};

// ---------------------------------------------------------------------------
// Vector field zoo (Killing candidates, focal fields)
// ---------------------------------------------------------------------------

std::shared_ptr<VectorField> constant_field(const Vec3& v);
std::shared_ptr<VectorField> rotation_field();              // (-u2, u1, 0)
std::shared_ptr<VectorField> linear_field(const Mat3& a);   // p -> A p
/// Left-invariant extension of an algebra element through the SU(2) chart;
/// in the round picture this is a Hopf-type unit field.
std::shared_ptr<VectorField> su2_left_invariant_field(const Vec3& axis);

}  // namespace finsler3
