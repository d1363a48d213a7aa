#pragma once

#include <finsler3/geometry.hpp>

#include <functional>
#include <memory>
#include <utility>

namespace finsler3 {

/// Symmetric 3x3 tensor field over the chart (metric fields live here).
class MatrixField {
 public:
  virtual ~MatrixField() = default;
  virtual Mat3 value(const Vec3& p) const = 0;

  /// Step recommendation for differentiating this field. Zero means "use the
  /// caller's scheme step"; fields whose values carry quadrature noise
  /// override this with a coarser step.
  virtual double preferred_base_step(const Vec3& p) const {
    (void)p;
    return 0.0;
  }
};

class AnalyticMatrixField final : public MatrixField {
 public:
  explicit AnalyticMatrixField(std::function<Mat3(const Vec3&)> fn)
      : fn_(std::move(fn)) {}
  Mat3 value(const Vec3& p) const override { return fn_(p); }

 private:
  std::function<Mat3(const Vec3&)> fn_;
};

class ConstantMatrixField final : public MatrixField {
 public:
  explicit ConstantMatrixField(const Mat3& m) : m_(m) {}
  Mat3 value(const Vec3&) const override { return m_; }

 private:
  Mat3 m_;
};

/// Vector field over the chart (Killing candidates, focal fields).
class VectorField {
 public:
  virtual ~VectorField() = default;
  virtual Vec3 value(const Vec3& p) const = 0;
};

class AnalyticVectorField final : public VectorField {
 public:
  explicit AnalyticVectorField(std::function<Vec3(const Vec3&)> fn)
      : fn_(std::move(fn)) {}
  Vec3 value(const Vec3& p) const override { return fn_(p); }

 private:
  std::function<Vec3(const Vec3&)> fn_;
};

/// Scalar field; also models constants (for torsion scalars).
class ScalarField {
 public:
  ScalarField() : constant_(0.0) {}
  /*implicit*/ ScalarField(double c) : constant_(c) {}
  explicit ScalarField(std::function<double(const Vec3&)> fn) : fn_(std::move(fn)) {}

  double operator()(const Vec3& p) const { return fn_ ? fn_(p) : constant_; }
  bool is_constant() const { return !fn_; }
  double constant_value() const { return constant_; }

 private:
  std::function<double(const Vec3&)> fn_;
  double constant_ = 0.0;
};

/// Effective differentiation step for a matrix field at p.
inline double field_step(const MatrixField& field, const Vec3& p,
                         const DiffScheme& scheme) {
  const double preferred = field.preferred_base_step(p);
  return preferred > 0.0 ? preferred : scheme.base_step(p);
}

}  // namespace finsler3
