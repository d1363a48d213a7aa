#include <finsler3/metrics_zoo.hpp>

#include <cmath>
#include <sstream>

namespace finsler3 {

namespace {

Mat3 skew(const Vec3& x) {
  Mat3 m;
  m << 0, -x.z(), x.y(), x.z(), 0, -x.x(), -x.y(), x.x(), 0;
  return m;
}

}  // namespace

// --- Euclidean --------------------------------------------------------------

EuclideanMetric::EuclideanMetric(const Box3& box) : box_(box) {}

double EuclideanMetric::value(const Vec3& p, const Vec3& y) const {
  require_regular(p, y);
  return y.norm();
}

// --- Riemannian -------------------------------------------------------------

RiemannianMetric::RiemannianMetric(std::shared_ptr<const MatrixField> a, const Box3& box)
    : a_(std::move(a)), box_(box) {
  if (!a_) throw std::invalid_argument("RiemannianMetric: null input field");
}

double RiemannianMetric::value(const Vec3& p, const Vec3& y) const {
  require_regular(p, y);
  const double q = y.dot(a_->value(p) * y);
  if (!(q > 0.0)) {
    std::ostringstream msg;
    msg << "riemannian: input field not positive definite at p = [" << p.transpose()
        << "]";
    throw std::domain_error(msg.str());
  }
  return std::sqrt(q);
}

// --- Locally Minkowski ------------------------------------------------------

LocallyMinkowskiMetric::LocallyMinkowskiMetric(std::shared_ptr<const MinkowskiNorm> norm,
                                               const Box3& box)
    : norm_(std::move(norm)), box_(box) {
  if (!norm_) throw std::invalid_argument("LocallyMinkowskiMetric: null norm");
}

double LocallyMinkowskiMetric::value(const Vec3& p, const Vec3& y) const {
  require_regular(p, y);
  return norm_->value(y);
}

std::string LocallyMinkowskiMetric::name() const {
  return "minkowski-" + norm_->name();
}

// --- Randers ----------------------------------------------------------------

RandersMetric::RandersMetric(const Vec3& drift, const Box3& box)
    : drift_(drift), box_(box) {
  if (drift_.norm() >= 1.0)
    throw std::invalid_argument("randers: |drift| must be < 1 for convexity");
}

double RandersMetric::value(const Vec3& p, const Vec3& y) const {
  require_regular(p, y);
  return y.norm() + drift_.dot(y);
}

// --- Trifocal ---------------------------------------------------------------

TrifocalMetric::TrifocalMetric(std::shared_ptr<const VectorField> focus, double c,
                               const Box3& box)
    : focus_(std::move(focus)), c_(c), box_(box) {
  if (!focus_) throw std::invalid_argument("trifocal: null focal field");
  if (!(c_ > 0.0)) throw std::invalid_argument("trifocal: constant must be positive");
}

double TrifocalMetric::body_function(const Vec3& p, const Vec3& w) const {
  const Vec3 beta = focus_->value(p);
  return (w + beta).norm() + w.norm() + (w - beta).norm();
}

double TrifocalMetric::value(const Vec3& p, const Vec3& y) const {
  require_regular(p, y);
  const Vec3 beta = focus_->value(p);
  const double b = beta.norm();
  if (!(c_ > 2.0 * b)) {
    std::ostringstream msg;
    msg << "trifocal: constant " << c_ << " does not keep the focal points interior "
        << "(need c > 2|beta| = " << 2.0 * b << ") at p = [" << p.transpose() << "]";
    throw std::invalid_argument(msg.str());
  }

  // Solve Phi(s * yhat) = c for s > 0 on the ray through yhat = y/|y|; the
  // gauge is then |y| / s. level(s) is convex with level(0) = 2b < c, so the
  // crossing is unique and level is increasing at it.
  const double y_norm = y.norm();
  const Vec3 yhat = y / y_norm;
  auto level = [&](double s) {
    return (s * yhat + beta).norm() + s + (s * yhat - beta).norm() - c_;
  };
  auto level_slope = [&](double s) {
    const Vec3 a = s * yhat + beta;
    const Vec3 d = s * yhat - beta;
    const double na = a.norm(), nd = d.norm();
    if (na < 1e-14 || nd < 1e-14) return std::numeric_limits<double>::quiet_NaN();
    return yhat.dot(a) / na + 1.0 + yhat.dot(d) / nd;
  };

  // 3s - 2b <= Phi(s yhat) <= 3s + 2b brackets the root.
  double lo = std::max(0.0, (c_ - 2.0 * b) / 3.0);
  double hi = (c_ + 2.0 * b) / 3.0;
  if (level(lo) > 0.0) lo = 0.0;  // guard against rounding at the bound
  double s = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double g = level(s);
    if (std::abs(g) < 1e-14 * std::max(1.0, c_)) break;
    if (g > 0.0)
      hi = s;
    else
      lo = s;
    const double slope = level_slope(s);
    double next = s - g / slope;
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::abs(next - s) < 1e-16 * std::max(1.0, s)) {
      s = next;
      break;
    }
    s = next;
  }
  if (!(s > 0.0) || !std::isfinite(s))
    throw std::runtime_error("trifocal: gauge root iteration failed");
  return y_norm / s;
}

// --- SU(2) chart ------------------------------------------------------------

namespace su2 {

Mat3 maurer_cartan(const Vec3& x) {
  const double n2 = x.squaredNorm();
  if (n2 >= 1.0)
    throw std::domain_error("su2 chart: point outside the unit ball");
  const double w = std::sqrt(1.0 - n2);
  return w * Mat3::Identity() + (x * x.transpose()) / w - skew(x);
}

Mat3 maurer_cartan_derivative(const Vec3& x, int direction) {
  const double n2 = x.squaredNorm();
  if (n2 >= 1.0)
    throw std::domain_error("su2 chart: point outside the unit ball");
  const double w = std::sqrt(1.0 - n2);
  const Vec3 e = Vec3::Unit(direction);
  const double xi = x[direction];
  Mat3 d = (-xi / w) * Mat3::Identity();
  d += (e * x.transpose() + x * e.transpose()) / w;
  d += (xi / (w * w * w)) * (x * x.transpose());
  d -= skew(e);
  return d;
}

}  // namespace su2

Su2LeftInvariantMetric::Su2LeftInvariantMetric(std::shared_ptr<const MinkowskiNorm> norm,
                                               double scale, const Box3& box)
    : norm_(std::move(norm)), scale_(scale), box_(box) {
  if (!norm_) throw std::invalid_argument("su2: null norm");
  if (!(scale_ > 0.0)) throw std::invalid_argument("su2: scale must be positive");
  const double reach = box_.min().norm() > box_.max().norm() ? box_.min().norm()
                                                             : box_.max().norm();
  if (reach >= su2::kChartRadius)
    throw std::invalid_argument("su2: chart box exceeds the valid chart radius");
}

double Su2LeftInvariantMetric::value(const Vec3& p, const Vec3& y) const {
  require_regular(p, y);
  if (p.norm() >= su2::kChartRadius) {
    std::ostringstream msg;
    msg << "su2: base point outside chart, |p| = " << p.norm();
    throw std::domain_error(msg.str());
  }
  return scale_ * norm_->value(su2::maurer_cartan(p) * y);
}

std::string Su2LeftInvariantMetric::name() const { return "su2-" + norm_->name(); }

// --- Negative control -------------------------------------------------------

QuarticDriftMetric::QuarticDriftMetric(double eps0, double amplitude, const Box3& box)
    : eps0_(eps0), amplitude_(amplitude), box_(box) {
  if (!(eps0_ > 0.0)) throw std::invalid_argument("quartic-xdep: eps0 must be positive");
  if (std::abs(amplitude_) > 1.0)
    throw std::invalid_argument("quartic-xdep: |amplitude| must be <= 1");
}

double QuarticDriftMetric::value(const Vec3& p, const Vec3& y) const {
  require_regular(p, y);
  const double eps = eps0_ * (1.0 + amplitude_ * std::sin(p.x()));
  const double q = y.array().pow(4).sum();
  return std::sqrt(y.squaredNorm() + eps * std::sqrt(q));
}

// --- Scaled wrapper ---------------------------------------------------------

ScaledMetric::ScaledMetric(std::shared_ptr<const FinslerMetric> base, double lambda)
    : base_(std::move(base)), lambda_(lambda) {
  if (!base_) throw std::invalid_argument("scaled: null base metric");
  if (!(lambda_ > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
}

double ScaledMetric::value(const Vec3& p, const Vec3& y) const {
  return lambda_ * base_->value(p, y);
}

std::string ScaledMetric::name() const {
  return "scaled-" + base_->name();
}

// --- Vector field zoo -------------------------------------------------------

std::shared_ptr<VectorField> constant_field(const Vec3& v) {
  return std::make_shared<AnalyticVectorField>([v](const Vec3&) { return v; });
}

std::shared_ptr<VectorField> rotation_field() {
  return std::make_shared<AnalyticVectorField>(
      [](const Vec3& p) { return Vec3(-p.y(), p.x(), 0.0); });
}

std::shared_ptr<VectorField> linear_field(const Mat3& a) {
  return std::make_shared<AnalyticVectorField>([a](const Vec3& p) -> Vec3 { return a * p; });
}

std::shared_ptr<VectorField> su2_left_invariant_field(const Vec3& axis) {
  return std::make_shared<AnalyticVectorField>([axis](const Vec3& p) -> Vec3 {
    return su2::maurer_cartan(p).inverse() * axis;
  });
}

}  // namespace finsler3
