#include <finsler3/finsler_metric.hpp>

#include <cmath>
#include <sstream>

namespace finsler3 {

void FinslerMetric::require_regular(const Vec3& p, const Vec3& y) const {
  if (is_singular(p, y)) {
    std::ostringstream msg;
    msg << name() << ": evaluation on the singular locus at y = [" << y.transpose()
        << "]";
    throw std::domain_error(msg.str());
  }
}

double FinslerMetric::energy(const Vec3& p, const Vec3& y) const {
  require_regular(p, y);
  const double f = value(p, y);
  return 0.5 * f * f;
}

Vec3 FinslerMetric::energy_fiber_gradient(const Vec3& p, const Vec3& y,
                                          const DiffScheme& scheme) const {
  require_regular(p, y);
  return fd_gradient([&](const Vec3& q) { return energy(p, q); }, y,
                     scheme.fiber_step(y), scheme.order);
}

Vec3 FinslerMetric::energy_base_gradient(const Vec3& p, const Vec3& y,
                                         const DiffScheme& scheme) const {
  require_regular(p, y);
  return fd_gradient([&](const Vec3& q) { return energy(q, y); }, p,
                     scheme.base_step(p), scheme.order);
}

Mat3 FinslerMetric::metric_tensor(const Vec3& p, const Vec3& y,
                                  const DiffScheme& scheme) const {
  require_regular(p, y);
  return fd_hessian([&](const Vec3& q) { return energy(p, q); }, y,
                    scheme.fiber_step(y), scheme.order);
}

std::vector<Vec3> direction_plan(int count) {
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<std::size_t>(count));
  // Axes and cube diagonals first: they hit the symmetry loci where
  // convexity failures of perturbed norms show up soonest.
  const double s = 1.0 / std::sqrt(3.0);
  const Vec3 seed[] = {{1, 0, 0},  {0, 1, 0},  {0, 0, 1},  {-1, 0, 0}, {0, -1, 0},
                       {0, 0, -1}, {s, s, s},  {s, s, -s}, {s, -s, s}, {-s, s, s},
                       {s, -s, -s}, {-s, s, -s}, {-s, -s, s}, {-s, -s, -s}};
  for (const Vec3& u : seed) {
    if (static_cast<int>(dirs.size()) >= count) return dirs;
    dirs.push_back(u);
  }
  // Fibonacci spiral for the remainder.
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  const int rest = count - static_cast<int>(dirs.size());
  for (int k = 0; k < rest; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / rest;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * M_PI * std::fmod(k / golden, 1.0);
    dirs.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return dirs;
}

namespace {

std::vector<Vec3> lattice_points(const Box3& box, int per_axis) {
  std::vector<Vec3> pts;
  const Vec3 lo = box.min(), hi = box.max();
  for (int i = 0; i < per_axis; ++i)
    for (int j = 0; j < per_axis; ++j)
      for (int k = 0; k < per_axis; ++k) {
        auto coord = [&](int idx, int n) {
          return per_axis == 1 ? 0.5 : (idx + 0.5) / n;
        };
        const Vec3 t(coord(i, per_axis), coord(j, per_axis), coord(k, per_axis));
        pts.emplace_back(lo + t.cwiseProduct(hi - lo));
      }
  return pts;
}

}  // namespace

AxiomReport verify_axioms(const FinslerMetric& metric, const DiffScheme& scheme,
                          int base_points_per_axis, int directions) {
  scheme.validate();
  AxiomReport report;
  report.min_hessian_eigenvalue = std::numeric_limits<double>::infinity();
  report.homogeneous = true;
  report.strongly_convex = true;
  report.derivatives_stable = true;

  const auto points = lattice_points(metric.domain(), base_points_per_axis);
  const auto dirs = direction_plan(directions);
  const double scales[] = {0.5, 1.0, 2.0, 3.7};

  DiffScheme fine = scheme;
  fine.h_fiber = scheme.h_fiber / 2.0;

  for (const Vec3& p : points) {
    for (const Vec3& u : dirs) {
      // (F2) positive homogeneity, relative residual.
      const double base = metric.value(p, u);
      for (double t : scales) {
        const double lhs = metric.value(p, t * u);
        const double res = std::abs(lhs - t * base) / std::max(1.0, t * base);
        report.max_homogeneity_residual = std::max(report.max_homogeneity_residual, res);
      }

      // (F3) strong convexity of the energy Hessian.
      const Mat3 g = metric.metric_tensor(p, u, scheme);
      const SpdInfo spd = spd_check(g);
      report.min_hessian_eigenvalue =
          std::min(report.min_hessian_eigenvalue, spd.min_eigenvalue);

      // Euler identity for the 2-homogeneous energy: y . dE/dy = 2E.
      const Vec3 grad = metric.energy_fiber_gradient(p, u, scheme);
      const double e = metric.energy(p, u);
      report.max_euler_residual =
          std::max(report.max_euler_residual,
                   std::abs(u.dot(grad) - 2.0 * e) / (1.0 + std::abs(e)));

      // (F1) proxy: the fundamental tensor should be stable when the
      // finite-difference step is halved.
      const Mat3 g_fine = metric.metric_tensor(p, u, fine);
      const double change =
          (g - g_fine).cwiseAbs().maxCoeff() / std::max(1.0, g.cwiseAbs().maxCoeff());
      report.derivative_stability_ratio =
          std::max(report.derivative_stability_ratio, change);
    }
  }

  if (report.max_homogeneity_residual > 1e-10) {
    report.homogeneous = false;
    report.violations.push_back("positive homogeneity residual above 1e-10");
  }
  if (!(report.min_hessian_eigenvalue > 0.0)) {
    report.strongly_convex = false;
    report.violations.push_back("fundamental tensor not positive definite");
  }
  if (report.derivative_stability_ratio > 1e-5) {
    report.derivatives_stable = false;
    report.violations.push_back("fiber derivatives unstable under step refinement");
  }
  return report;
}

}  // namespace finsler3
