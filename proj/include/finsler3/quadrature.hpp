#pragma once

#include <finsler3/finsler_metric.hpp>
#include <finsler3/geometry.hpp>

#include <functional>
#include <vector>

namespace finsler3 {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
  static GaussLegendre build(int n);
};

/// Product quadrature rule on the parameter sphere: Gauss-Legendre in
/// cos(theta) times a uniform midpoint grid in phi. Weights sum to 4*pi and
/// the poles are never sampled.
class SphericalRule {
 public:
  struct Node {
    Vec3 u;          // unit direction
    double weight;   // w_theta * w_phi (quadrature weight for dcos(theta) dphi)
    double sin_theta;
    Vec3 u_theta;    // d u / d theta
    Vec3 u_phi;      // d u / d phi
  };

  static SphericalRule product_gauss(int n_theta, int n_phi);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  double weight_sum() const;

 private:
  int n_theta_ = 0;
  int n_phi_ = 0;
  std::vector<Node> nodes_;
};

/// Radial projection onto the indicatrix: u / F(p, u). Exact by homogeneity.
Vec3 indicatrix_point(const FinslerMetric& metric, const Vec3& p, const Vec3& u);

/// Value of the induced area form at v on tangent vectors (t1, t2):
/// sqrt(det g(v)) * det[v | t1 | t2]. Assumes F(p, v) = 1.
double mu_density(const FinslerMetric& metric, const Vec3& p, const Vec3& v,
                  const Vec3& t1, const Vec3& t2, const DiffScheme& scheme);

/// One quadrature node transported onto the indicatrix at p.
struct IndicatrixSample {
  Vec3 u;          // parameter-sphere direction
  Vec3 v;          // indicatrix point u / F(p, u)
  Mat3 g;          // fundamental tensor at v
  double sqrt_det_g;
  double density;  // full weight: w * mu(dv/dtheta, dv/dphi) / sin(theta)
};

/// All nodes of a rule evaluated on the indicatrix of F at p. Construction
/// is the expensive step; integration against any number of integrands is a
/// deterministic pairwise-summed dot product afterwards.
class IndicatrixSampleSet {
 public:
  IndicatrixSampleSet(const FinslerMetric& metric, const Vec3& p,
                      const SphericalRule& rule, const DiffScheme& scheme,
                      const Mat3& orientation = Mat3::Identity());

  const std::vector<IndicatrixSample>& samples() const { return samples_; }
  const Vec3& point() const { return p_; }
  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }

  /// Total induced area of the indicatrix.
  double area() const;

  /// Integral of a scalar node functional against the induced area form.
  double integrate(const std::function<double(const IndicatrixSample&)>& f) const;

 private:
  Vec3 p_;
  int n_theta_ = 0;
  int n_phi_ = 0;
  std::vector<IndicatrixSample> samples_;
};

/// Surface integral of phi(v) over the indicatrix of F at p.
double integrate_over_indicatrix(const FinslerMetric& metric, const Vec3& p,
                                 const std::function<double(const Vec3&)>& phi,
                                 const SphericalRule& rule, const DiffScheme& scheme);

}  // namespace finsler3
