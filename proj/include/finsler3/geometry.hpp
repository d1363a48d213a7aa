#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace finsler3 {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Box3 = Eigen::AlignedBox3d;

/// Step sizes and stencil order for all numerical differentiation.
/// Steps are relative: the effective step at x is h * (1 + |x|).
/// The fiber step is larger than the base step because fiber derivatives are
/// taken to second order, where rounding error grows like eps / h^2.
struct DiffScheme {
  double h_base = 1e-4;   // derivatives in the base point
  double h_fiber = 1e-3;  // derivatives in the fiber (tangent) variable
  int order = 4;          // central stencil order, 2 or 4

  double base_step(const Vec3& x) const { return h_base * (1.0 + x.norm()); }
  double fiber_step(const Vec3& y) const { return h_fiber * (1.0 + y.norm()); }

  void validate() const {
    if (!(h_base > 0.0) || !(h_fiber > 0.0))
      throw std::invalid_argument("DiffScheme: steps must be positive");
    if (order != 2 && order != 4)
      throw std::invalid_argument("DiffScheme: stencil order must be 2 or 4");
  }
};

// ---------------------------------------------------------------------------
// Deterministic summation
// ---------------------------------------------------------------------------

/// Pairwise (cascade) summation; fixed association order makes accumulation
/// reproducible and keeps the error growth at O(log n).
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(std::span<const double>(v));
}

// ---------------------------------------------------------------------------
// Central finite-difference stencils
// ---------------------------------------------------------------------------

/// First derivative of f at offset 0. `f` is evaluated at the given offsets.
template <class F>
double fd_d1(F&& f, double h, int order) {
  if (order == 2) return (f(h) - f(-h)) / (2.0 * h);
  return (-f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h);
}

/// Second derivative of f at offset 0.
template <class F>
double fd_d2(F&& f, double h, int order) {
  if (order == 2) return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
  return (-f(2.0 * h) + 16.0 * f(h) - 30.0 * f(0.0) + 16.0 * f(-h) - f(-2.0 * h)) /
         (12.0 * h * h);
}

/// Mixed second derivative d2f/(da db) of f(a, b) at (0, 0), built as the
/// composition of two first-derivative stencils of the same order.
template <class F>
double fd_d11(F&& f, double ha, double hb, int order) {
  auto da = [&](double b) {
    return fd_d1([&](double a) { return f(a, b); }, ha, order);
  };
  return fd_d1(da, hb, order);
}

/// Gradient of a scalar field on R^3 (single absolute step h).
template <class Field>
Vec3 fd_gradient(Field&& phi, const Vec3& x, double h, int order) {
  Vec3 g;
  for (int i = 0; i < 3; ++i) {
    g[i] = fd_d1(
        [&](double t) {
          Vec3 q = x;
          q[i] += t;
          return phi(q);
        },
        h, order);
  }
  return g;
}

/// Hessian of a scalar field on R^3. Product stencils make the result
/// symmetric by construction; it is mirrored from the upper triangle.
template <class Field>
Mat3 fd_hessian(Field&& phi, const Vec3& x, double h, int order) {
  Mat3 hess;
  for (int i = 0; i < 3; ++i) {
    hess(i, i) = fd_d2(
        [&](double t) {
          Vec3 q = x;
          q[i] += t;
          return phi(q);
        },
        h, order);
    for (int j = i + 1; j < 3; ++j) {
      const double m = fd_d11(
          [&](double a, double b) {
            Vec3 q = x;
            q[i] += a;
            q[j] += b;
            return phi(q);
          },
          h, h, order);
      hess(i, j) = m;
      hess(j, i) = m;
    }
  }
  return hess;
}

/// Hessian of a scalar field, step chosen from the scheme (fiber convention).
template <class Field>
Mat3 hessian(Field&& phi, const Vec3& point, const DiffScheme& scheme) {
  scheme.validate();
  return fd_hessian(std::forward<Field>(phi), point, scheme.fiber_step(point),
                    scheme.order);
}

// ---------------------------------------------------------------------------
// Positive definiteness
// ---------------------------------------------------------------------------

struct SpdInfo {
  bool positive_definite = false;
  double min_eigenvalue = 0.0;
};

/// Eigenvalue test for symmetric positive definiteness. The smallest
/// eigenvalue is reported so callers can apply their own tolerances.
inline SpdInfo spd_check(const Mat3& m) {
  Eigen::SelfAdjointEigenSolver<Mat3> es(m, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  return {min_eig > 0.0, min_eig};
}

// ---------------------------------------------------------------------------
// Metric cross product
// ---------------------------------------------------------------------------

/// Cross product associated with an SPD inner product gamma, normalized by
/// the Riemannian volume form: gamma(a x b, z) = sqrt(det gamma) det[a|b|z].
/// The factorization is precomputed so repeated products against the same
/// metric stay cheap.
class MetricCross {
 public:
  explicit MetricCross(const Mat3& gamma) : llt_(gamma) {
    if (llt_.info() != Eigen::Success)
      throw std::invalid_argument("MetricCross: metric is not positive definite");
    const Mat3 l = llt_.matrixL();
    sqrt_det_ = l(0, 0) * l(1, 1) * l(2, 2);
  }

  Vec3 cross(const Vec3& a, const Vec3& b) const {
    return llt_.solve(sqrt_det_ * a.cross(b));
  }

  double sqrt_det() const { return sqrt_det_; }

 private:
  Eigen::LLT<Mat3> llt_;
  double sqrt_det_ = 0.0;
};

/// One-shot form of MetricCross::cross.
inline Vec3 metric_cross(const Mat3& gamma, const Vec3& a, const Vec3& b) {
  return MetricCross(gamma).cross(a, b);
}

/// Max-norm of X x (Y x Z) - (gamma(X,Z) Y - gamma(X,Y) Z); vanishes for the
/// volume-normalized product, so it doubles as a self-test of metric_cross.
inline double triple_product_residual(const Mat3& gamma, const Vec3& x, const Vec3& y,
                                      const Vec3& z) {
  const MetricCross cp(gamma);
  const Vec3 lhs = cp.cross(x, cp.cross(y, z));
  const Vec3 rhs = x.dot(gamma * z) * y - x.dot(gamma * y) * z;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace finsler3
