#include <finsler3/quadrature.hpp>

#include <cmath>
#include <sstream>

namespace finsler3 {

GaussLegendre GaussLegendre::build(int n) {
  if (n < 1) throw std::invalid_argument("GaussLegendre: need at least one node");
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  // Newton iteration on P_n with the Chebyshev-like initial guess; the
  // recurrence also yields P_n' for the weight formula.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[i] = x;
    gl.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return gl;
}

SphericalRule SphericalRule::product_gauss(int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 4)
    throw std::invalid_argument("SphericalRule: rule too coarse (need n_theta >= 2, n_phi >= 4)");
  SphericalRule rule;
  rule.n_theta_ = n_theta;
  rule.n_phi_ = n_phi;
  rule.nodes_.reserve(static_cast<std::size_t>(n_theta) * n_phi);

  const GaussLegendre gl = GaussLegendre::build(n_theta);
  const double w_phi = 2.0 * M_PI / n_phi;
  for (int a = 0; a < n_theta; ++a) {
    const double cos_t = gl.nodes[a];
    const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
    for (int b = 0; b < n_phi; ++b) {
      const double phi = 2.0 * M_PI * (b + 0.5) / n_phi;
      const double cp = std::cos(phi), sp = std::sin(phi);
      Node node;
      node.u = Vec3(sin_t * cp, sin_t * sp, cos_t);
      node.u_theta = Vec3(cos_t * cp, cos_t * sp, -sin_t);
      node.u_phi = Vec3(-sin_t * sp, sin_t * cp, 0.0);
      node.sin_theta = sin_t;
      node.weight = gl.weights[a] * w_phi;
      rule.nodes_.push_back(node);
    }
  }
  return rule;
}

double SphericalRule::weight_sum() const {
  std::vector<double> w;
  w.reserve(nodes_.size());
  for (const Node& n : nodes_) w.push_back(n.weight);
  return pairwise_sum(w);
}

Vec3 indicatrix_point(const FinslerMetric& metric, const Vec3& p, const Vec3& u) {
  return u / metric.value(p, u);
}

double mu_density(const FinslerMetric& metric, const Vec3& p, const Vec3& v,
                  const Vec3& t1, const Vec3& t2, const DiffScheme& scheme) {
  const Mat3 g = metric.metric_tensor(p, v, scheme);
  const double det = g.determinant();
  if (!(det > 0.0)) {
    std::ostringstream msg;
    msg << "mu_density: fundamental tensor degenerate at v = [" << v.transpose()
        << "] (det = " << det << ")";
    throw std::runtime_error(msg.str());
  }
  return std::sqrt(det) * v.dot(t1.cross(t2));
}

IndicatrixSampleSet::IndicatrixSampleSet(const FinslerMetric& metric, const Vec3& p,
                                         const SphericalRule& rule,
                                         const DiffScheme& scheme,
                                         const Mat3& orientation)
    : p_(p), n_theta_(rule.n_theta()), n_phi_(rule.n_phi()) {
  scheme.validate();
  samples_.reserve(rule.nodes().size());
  std::size_t index = 0;
  for (const SphericalRule::Node& node : rule.nodes()) {
    const Vec3 u = orientation * node.u;
    const Vec3 u_theta = orientation * node.u_theta;
    const Vec3 u_phi = orientation * node.u_phi;

    IndicatrixSample s;
    s.u = u;
    const double f = metric.value(p_, u);
    if (!(f > 0.0)) {
      std::ostringstream msg;
      msg << metric.name() << ": nonpositive value " << f << " at node " << index
          << ", u = [" << u.transpose() << "]";
      throw std::runtime_error(msg.str());
    }
    s.v = u / f;
    s.g = metric.metric_tensor(p_, s.v, scheme);
    const double det = s.g.determinant();
    if (!(det > 0.0)) {
      std::ostringstream msg;
      msg << metric.name() << ": fundamental tensor degenerate at node " << index
          << ", v = [" << s.v.transpose() << "] (det = " << det << ")";
      throw std::runtime_error(msg.str());
    }
    s.sqrt_det_g = std::sqrt(det);

    // Tangents of the indicatrix parametrization v = u / F(p, u) by the chain
    // rule; dF contracts through the Euler identity dF(u) = g(v) v at F(v)=1,
    // which reuses the Hessian already computed for this node.
    const Vec3 grad_f = s.g * s.v;  // 0-homogeneous, so valid at u as well
    const Vec3 v_theta = u_theta / f - s.v * (grad_f.dot(u_theta) / f);
    const Vec3 v_phi = u_phi / f - s.v * (grad_f.dot(u_phi) / f);

    const double mu = s.sqrt_det_g * s.v.dot(v_theta.cross(v_phi));
    s.density = node.weight * mu / node.sin_theta;
    samples_.push_back(s);
    ++index;
  }
}

double IndicatrixSampleSet::area() const {
  std::vector<double> terms;
  terms.reserve(samples_.size());
  for (const IndicatrixSample& s : samples_) terms.push_back(s.density);
  return pairwise_sum(terms);
}

double IndicatrixSampleSet::integrate(
    const std::function<double(const IndicatrixSample&)>& f) const {
  std::vector<double> terms;
  terms.reserve(samples_.size());
  for (const IndicatrixSample& s : samples_) terms.push_back(s.density * f(s));
  return pairwise_sum(terms);
}

double integrate_over_indicatrix(const FinslerMetric& metric, const Vec3& p,
                                 const std::function<double(const Vec3&)>& phi,
                                 const SphericalRule& rule, const DiffScheme& scheme) {
  const IndicatrixSampleSet set(metric, p, rule, scheme);
  return set.integrate([&](const IndicatrixSample& s) { return phi(s.v); });
}

}  // namespace finsler3
