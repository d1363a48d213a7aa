#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <finsler3/geometry.hpp>

#include "support.hpp"

using namespace finsler3;
using testsupport::make_rng;
using testsupport::rand_spd;
using testsupport::rand_vec;
using testsupport::urand;

TEST_CASE("metric cross product, identity metric") {
  const Mat3 id = Mat3::Identity();
  CHECK((metric_cross(id, Vec3(1, 0, 0), Vec3(0, 1, 0)) - Vec3(0, 0, 1)).norm() ==
        doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("metric cross product, stretched metric") {
  // gamma = diag(4,1,1): sqrt(det) = 2 and raising leaves e3 fixed,
  // so e1 x e2 = (0,0,2).
  const Mat3 gamma = Vec3(4, 1, 1).asDiagonal();
  const Vec3 c = metric_cross(gamma, Vec3(1, 0, 0), Vec3(0, 1, 0));
  CHECK(c.x() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(c.y() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(c.z() == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("metric cross product, equal arguments vanish") {
  auto rng = make_rng();
  for (int k = 0; k < 50; ++k) {
    const Mat3 gamma = rand_spd(rng);
    const Vec3 a = rand_vec(rng);
    CHECK(metric_cross(gamma, a, a).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("metric cross product rejects indefinite metrics") {
  Mat3 bad = Vec3(1, 1, -1).asDiagonal();
  CHECK_THROWS_AS(metric_cross(bad, Vec3(1, 0, 0), Vec3(0, 1, 0)),
                  std::invalid_argument);
}

TEST_CASE("cross product is bilinear and anti-symmetric") {
  auto rng = make_rng(7);
  for (int k = 0; k < 100; ++k) {
    const Mat3 gamma = rand_spd(rng);
    const MetricCross cp(gamma);
    const Vec3 a = rand_vec(rng), b = rand_vec(rng), c = rand_vec(rng);
    const double s = urand(rng, -2.0, 2.0);
    CHECK((cp.cross(a, b) + cp.cross(b, a)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((cp.cross(s * a + c, b) - s * cp.cross(a, b) - cp.cross(c, b))
              .cwiseAbs()
              .maxCoeff() <= 1e-11);
  }
}

TEST_CASE("cross product is gamma-orthogonal to its arguments") {
  auto rng = make_rng(11);
  for (int k = 0; k < 100; ++k) {
    const Mat3 gamma = rand_spd(rng);
    const MetricCross cp(gamma);
    const Vec3 a = rand_vec(rng), b = rand_vec(rng);
    const Vec3 c = cp.cross(a, b);
    CHECK(std::abs(c.dot(gamma * a)) <= 1e-12);
    CHECK(std::abs(c.dot(gamma * b)) <= 1e-12);
  }
}

TEST_CASE("vector triple product identity") {
  const Mat3 id = Mat3::Identity();
  auto rng = make_rng(13);
  for (int k = 0; k < 100; ++k) {
    const Vec3 x = rand_vec(rng), y = rand_vec(rng), z = rand_vec(rng);
    CHECK(triple_product_residual(id, x, y, z) <= 1e-12);
    CHECK(triple_product_residual(rand_spd(rng), rand_vec(rng), rand_vec(rng),
                                  rand_vec(rng)) <= 1e-10);
  }
  const Vec3 e1(1, 0, 0);
  CHECK(triple_product_residual(id, e1, e1, e1) == 0.0);
}

TEST_CASE("cross product satisfies the Jacobi identity") {
  auto rng = make_rng(17);
  for (int k = 0; k < 100; ++k) {
    const Mat3 gamma = rand_spd(rng);
    const MetricCross cp(gamma);
    const Vec3 x = rand_vec(rng), y = rand_vec(rng), z = rand_vec(rng);
    const Vec3 sum = cp.cross(cp.cross(x, y), z) + cp.cross(cp.cross(z, x), y) +
                     cp.cross(cp.cross(y, z), x);
    CHECK(sum.cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("spd_check") {
  auto [ok1, eig1] = spd_check(Mat3::Identity());
  CHECK(ok1);
  CHECK(eig1 == doctest::Approx(1.0));

  auto [ok2, eig2] = spd_check(Vec3(1, 1, -1).asDiagonal());
  CHECK_FALSE(ok2);
  CHECK(eig2 == doctest::Approx(-1.0));

  auto [ok3, eig3] = spd_check(Vec3(4, 1, 1).asDiagonal());
  CHECK(ok3);
  CHECK(eig3 == doctest::Approx(1.0));
}

TEST_CASE("hessian of simple quadratics") {
  const DiffScheme scheme;
  auto norm2 = [](const Vec3& y) { return 0.5 * y.squaredNorm(); };
  CHECK((hessian(norm2, Vec3(0.3, -0.2, 0.9), scheme) - Mat3::Identity())
            .cwiseAbs()
            .maxCoeff() <= 1e-9);

  auto axis = [](const Vec3& y) { return 2.0 * y.x() * y.x(); };
  const Mat3 expect = Vec3(4, 0, 0).asDiagonal();
  CHECK((hessian(axis, Vec3(1, 1, 1), scheme) - expect).cwiseAbs().maxCoeff() <=
        1e-9);
}

TEST_CASE("hessian of quadratic forms is exact for both stencil orders") {
  auto rng = make_rng(23);
  for (int order : {2, 4}) {
    DiffScheme scheme;
    scheme.order = order;
    for (int k = 0; k < 20; ++k) {
      Mat3 q = rand_spd(rng);
      auto form = [&](const Vec3& y) { return 0.5 * y.dot(q * y); };
      const Mat3 h = hessian(form, rand_vec(rng), scheme);
      CHECK((h - q).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
}

TEST_CASE("hessian of a quartic-perturbed energy matches an independent stencil") {
  const double eps = 0.1;
  auto field = [&](const Vec3& y) {
    const double q = y.array().pow(4).sum();
    return 0.5 * (y.squaredNorm() + eps * std::sqrt(q));
  };
  const Vec3 point(1, 0, 0);
  const DiffScheme scheme;
  const Mat3 h = hessian(field, point, scheme);

  // Independent oracle: Richardson extrapolation of second-order stencils at
  // steps h and h/2 (fourth-order accurate, different code path).
  const double h0 = 2e-4;
  DiffScheme o2;
  o2.order = 2;
  const Mat3 coarse = fd_hessian(field, point, h0, 2);
  const Mat3 fine = fd_hessian(field, point, h0 / 2.0, 2);
  const Mat3 oracle = (4.0 * fine - coarse) / 3.0;
  CHECK((h - oracle).cwiseAbs().maxCoeff() <= 1e-6);

  // Closed form at an axis point: diag(1+eps, 1, 1).
  const Mat3 closed = Vec3(1.0 + eps, 1.0, 1.0).asDiagonal();
  CHECK((h - closed).cwiseAbs().maxCoeff() <= 1e-7);
}

TEST_CASE("hessian propagates field evaluation failures") {
  auto field = [](const Vec3& y) -> double {
    if (y.x() > 1.0) throw std::runtime_error("outside");
    return y.squaredNorm();
  };
  CHECK_THROWS_AS(hessian(field, Vec3(1.0, 0, 0), DiffScheme{}),
                  std::runtime_error);
}

TEST_CASE("diff scheme validation") {
  DiffScheme bad;
  bad.order = 3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.order = 4;
  bad.h_base = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("pairwise summation is deterministic and accurate") {
  std::vector<double> v;
  auto rng = make_rng(29);
  long double ref = 0.0L;
  for (int k = 0; k < 4097; ++k) {
    const double x = urand(rng, -1.0, 1.0);
    v.push_back(x);
    ref += x;
  }
  const double s1 = pairwise_sum(v);
  const double s2 = pairwise_sum(v);
  CHECK(s1 == s2);
  CHECK(std::abs(s1 - static_cast<double>(ref)) <= 1e-12);
}
