#pragma once

// Projective (Cayley-Klein) metric primitives for the hyperbolic and elliptic
// planes. Points and lines are coordinate triples up to a nonzero factor; the
// absolute form is diag(eps, 1, 1) with eps = -1 (hyperbolic) or +1 (elliptic).

#include <optional>
#include <string>
#include <utility>

#include "isoptic/errors.hpp"
#include "isoptic/linalg.hpp"

namespace isoptic {

template <class Tag>
class Homogeneous {
 public:
  Homogeneous(double c0, double c1, double c2) : c_{c0, c1, c2} { check(); }
  explicit Homogeneous(const Vec3& c) : c_(c) { check(); }

  double operator[](std::size_t i) const { return c_[i]; }
  const Vec3& coords() const noexcept { return c_; }

  /// Same element of the projective plane, i.e. the triples are parallel.
  bool equivalent(const Homogeneous& other, double rel_tol = 1e-12) const {
    return norm(cross(c_, other.c_)) <= rel_tol * norm(c_) * norm(other.c_);
  }
  bool operator==(const Homogeneous& other) const { return equivalent(other); }

  /// (x, y) in the chart x0 = 1, or nothing for ideal elements.
  std::optional<std::pair<double, double>> affine() const {
    if (c_[0] == 0.0) return std::nullopt;
    return std::pair{c_[1] / c_[0], c_[2] / c_[0]};
  }

  /// Representative with x0 = 1 when x0 != 0, otherwise unit length.
  Homogeneous normalized() const {
    if (c_[0] != 0.0) return Homogeneous((1.0 / c_[0]) * c_);
    return Homogeneous((1.0 / norm(c_)) * c_);
  }

 private:
  void check() const {
    if (!(std::isfinite(c_[0]) && std::isfinite(c_[1]) && std::isfinite(c_[2])))
      throw Error(ErrorKind::Validation, "homogeneous coordinates must be finite");
    if (c_[0] == 0.0 && c_[1] == 0.0 && c_[2] == 0.0)
      throw Error(ErrorKind::Validation, "homogeneous coordinates must not all vanish");
  }

  Vec3 c_;
};

struct PointTag;
struct LineTag;
using HomogeneousPoint = Homogeneous<PointTag>;
using ProjectiveLine = Homogeneous<LineTag>;

inline HomogeneousPoint chart_point(double x, double y) { return {1.0, x, y}; }

enum class GeometryKind { Euclidean, Hyperbolic, Elliptic };

enum class PointClass { Proper, Absolute, Outer };

const char* to_string(GeometryKind g) noexcept;
const char* to_string(PointClass c) noexcept;

/// Signature parameter of the absolute form; throws for Euclidean geometry.
double epsilon(GeometryKind g);

inline constexpr double kClampTolerance = 1e-12;
inline constexpr double kAbsoluteTolerance = 1e-10;

double point_form(GeometryKind g, const HomogeneousPoint& x, const HomogeneousPoint& y);
double line_form(GeometryKind g, const ProjectiveLine& u, const ProjectiveLine& v);

PointClass classify_point(GeometryKind g, const HomogeneousPoint& x);

/// Geodesic distance (curvature +-1). Elliptic distances are projective and
/// therefore never exceed pi/2.
double distance(GeometryKind g, const HomogeneousPoint& x, const HomogeneousPoint& y);

/// Angle in [0, pi] between two lines meeting in a proper point, taken with
/// both lines in their representative with u0 > 0.
double line_angle(GeometryKind g, const ProjectiveLine& u, const ProjectiveLine& v);

/// Value of the linear form u on x; zero iff the point lies on the line.
inline double incidence(const HomogeneousPoint& x, const ProjectiveLine& u) noexcept {
  return dot(x.coords(), u.coords());
}

ProjectiveLine join(const HomogeneousPoint& p, const HomogeneousPoint& q);
HomogeneousPoint meet(const ProjectiveLine& u, const ProjectiveLine& v);

/// Line of all points conjugate to p with respect to the absolute.
ProjectiveLine polar_line(GeometryKind g, const HomogeneousPoint& p);
HomogeneousPoint pole(GeometryKind g, const ProjectiveLine& u);

}  // namespace isoptic
