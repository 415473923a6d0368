#pragma once

// Zero-level contouring of residual functions by marching squares with
// bisection-refined edge crossings.

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "isoptic/isoptics.hpp"
#include "isoptic/kernels.hpp"

namespace isoptic {

struct Viewport {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  int nx = 1024, ny = 1024;  // grid nodes per axis
};

inline constexpr int kMinResolution = 16;
inline constexpr int kDefaultResolution = 1024;

void validate(const Viewport& vp);

struct TracedPoint {
  double x = 0, y = 0, residual = 0;
};

using Polyline = std::vector<TracedPoint>;

struct TracedCurve {
  // Closed branches repeat their first vertex at the end.
  std::vector<Polyline> branches;
  double residual_max = 0.0;
  bool clipped = false;

  std::size_t vertex_count() const;
};

class ScalarField {
 public:
  virtual ~ScalarField() = default;
  virtual double value(double x, double y) const = 0;
  /// out[i] = value(x0 + i * dx, y)
  virtual void row(double y, double x0, double dx, std::span<double> out) const;
};

class FunctionField final : public ScalarField {
 public:
  explicit FunctionField(std::function<double(double, double)> f) : f_(std::move(f)) {}
  double value(double x, double y) const override { return f_(x, y); }

 private:
  std::function<double(double, double)> f_;
};

class ProgramField final : public ScalarField {
 public:
  explicit ProgramField(kernels::ResidualProgram program, kernels::Isa isa = kernels::best_isa());
  double value(double x, double y) const override { return kernels::evaluate(program_, x, y); }
  void row(double y, double x0, double dx, std::span<double> out) const override;

 private:
  kernels::ResidualProgram program_;
  kernels::Isa isa_;
};

/// Returns true for points of the admissible domain.
using DomainMask = std::function<bool(double, double)>;

inline constexpr double kRefineTolerance = 1e-10;
inline constexpr int kRefineIterations = 80;
inline constexpr double kSaddleTolerance = 1e-12;

/// NaN samples mark cells to skip; cells with corners on both sides of the
/// mask set clipped.
TracedCurve trace(const ScalarField& field, const Viewport& vp, const DomainMask& mask = {});
TracedCurve trace(const std::function<double(double, double)>& residual, const Viewport& vp,
                  const DomainMask& mask = {});

enum class SaddleConnection {
  // Segments cut off each negative corner; the positive corners connect through the center.
  SeparateNegativeCorners,
  SeparatePositiveCorners,
};

/// Corner order: (i, j), (i+1, j), (i+1, j+1), (i, j+1); true means value >= 0.
/// Throws std::invalid_argument unless the signs alternate.
SaddleConnection saddle_disambiguate(const std::array<bool, 4>& corner_positive, double center);

/// Viewport showing the isoptic of a query: the model disk (hyperbolic),
/// [-3, 3]^2 (elliptic), or a square sized to the curve (Euclidean).
Viewport default_viewport(const IsopticQuery& query, int resolution = kDefaultResolution);

TracedCurve trace_isoptic(const IsopticQuery& query, const Viewport& vp, kernels::Isa isa = kernels::best_isa());

}  // namespace isoptic
