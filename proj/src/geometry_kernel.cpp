#include "isoptic/geometry_kernel.hpp"

#include <cmath>
#include <numbers>

namespace isoptic {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Validation: return "validation";
    case ErrorKind::UnsupportedGeometry: return "unsupported-geometry";
    case ErrorKind::ImproperFocus: return "improper-focus";
    case ErrorKind::DegenerateConic: return "degenerate-conic";
    case ErrorKind::NotOnCurve: return "not-on-curve";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::NoProperAngle: return "no-proper-angle";
    case ErrorKind::DegenerateJoin: return "degenerate-join";
    case ErrorKind::IdealPoint: return "ideal-point";
    case ErrorKind::SingularPoint: return "singular-point";
    case ErrorKind::OnCurve: return "on-curve";
    case ErrorKind::NoTangents: return "no-tangents";
    case ErrorKind::ImproperPoint: return "improper-point";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

const char* to_string(GeometryKind g) noexcept {
  switch (g) {
    case GeometryKind::Euclidean: return "euclidean";
    case GeometryKind::Hyperbolic: return "hyperbolic";
    case GeometryKind::Elliptic: return "elliptic";
  }
  return "unknown";
}

const char* to_string(PointClass c) noexcept {
  switch (c) {
    case PointClass::Proper: return "proper";
    case PointClass::Absolute: return "absolute";
    case PointClass::Outer: return "outer";
  }
  return "unknown";
}

double epsilon(GeometryKind g) {
  switch (g) {
    case GeometryKind::Hyperbolic: return -1.0;
    case GeometryKind::Elliptic: return 1.0;
    case GeometryKind::Euclidean: break;
  }
  throw Error(ErrorKind::UnsupportedGeometry, "the projective metric is undefined for Euclidean geometry");
}

namespace {

double signature_form(double eps, const Vec3& a, const Vec3& b) noexcept {
  return eps * a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Maps a cosine-like ratio into [lo, hi], tolerating rounding just outside.
double clamp_ratio(double value, double lo, double hi, const char* what) {
  if (value < lo) {
    if (value < lo - kClampTolerance) throw Error(ErrorKind::Domain, std::string(what) + " argument out of range");
    return lo;
  }
  if (value > hi) {
    if (value > hi + kClampTolerance) throw Error(ErrorKind::Domain, std::string(what) + " argument out of range");
    return hi;
  }
  return value;
}

}  // namespace

double point_form(GeometryKind g, const HomogeneousPoint& x, const HomogeneousPoint& y) {
  return signature_form(epsilon(g), x.coords(), y.coords());
}

double line_form(GeometryKind g, const ProjectiveLine& u, const ProjectiveLine& v) {
  return signature_form(epsilon(g), u.coords(), v.coords());
}

PointClass classify_point(GeometryKind g, const HomogeneousPoint& x) {
  const double eps = epsilon(g);
  if (eps > 0) return PointClass::Proper;
  const double q = signature_form(eps, x.coords(), x.coords());
  if (std::abs(q) <= kAbsoluteTolerance * dot(x.coords(), x.coords())) return PointClass::Absolute;
  return q < 0 ? PointClass::Proper : PointClass::Outer;
}

double distance(GeometryKind g, const HomogeneousPoint& x, const HomogeneousPoint& y) {
  if (classify_point(g, x) != PointClass::Proper || classify_point(g, y) != PointClass::Proper)
    throw Error(ErrorKind::Domain, "distance is defined for proper points only");
  const double eps = epsilon(g);
  const double xx = signature_form(eps, x.coords(), x.coords());
  const double yy = signature_form(eps, y.coords(), y.coords());
  // |<x,y>| makes the result independent of the sign of the representatives.
  const double ratio = std::abs(signature_form(eps, x.coords(), y.coords())) / std::sqrt(xx * yy);
  if (eps < 0) return std::acosh(clamp_ratio(ratio, 1.0, INFINITY, "arcosh"));
  return std::acos(clamp_ratio(ratio, 0.0, 1.0, "arccos"));
}

namespace {

// Sign that brings a line to the representative with u0 > 0 (or, for lines
// through the origin, the first nonzero coordinate positive).
double orientation(const ProjectiveLine& u) {
  for (std::size_t i = 0; i < 3; ++i)
    if (u[i] != 0.0) return u[i] > 0.0 ? 1.0 : -1.0;
  return 1.0;
}

}  // namespace

double line_angle(GeometryKind g, const ProjectiveLine& u, const ProjectiveLine& v) {
  const double eps = epsilon(g);
  const double uu = signature_form(eps, u.coords(), u.coords());
  const double vv = signature_form(eps, v.coords(), v.coords());
  const double uv = orientation(u) * orientation(v) * signature_form(eps, u.coords(), v.coords());
  if (eps < 0 && !(uu * vv - uv * uv > 0.0))
    throw Error(ErrorKind::NoProperAngle, "lines do not meet in a proper point");
  const double c = (eps < 0 ? -uv : uv) / std::sqrt(uu * vv);
  return std::acos(clamp_ratio(c, -1.0, 1.0, "arccos"));
}

ProjectiveLine join(const HomogeneousPoint& p, const HomogeneousPoint& q) {
  const Vec3 l = cross(p.coords(), q.coords());
  if (norm(l) <= 1e-12 * norm(p.coords()) * norm(q.coords()))
    throw Error(ErrorKind::DegenerateJoin, "cannot join coincident points");
  return ProjectiveLine(l);
}

HomogeneousPoint meet(const ProjectiveLine& u, const ProjectiveLine& v) {
  const Vec3 p = cross(u.coords(), v.coords());
  if (norm(p) <= 1e-12 * norm(u.coords()) * norm(v.coords()))
    throw Error(ErrorKind::DegenerateJoin, "cannot intersect coincident lines");
  return HomogeneousPoint(p);
}

ProjectiveLine polar_line(GeometryKind g, const HomogeneousPoint& p) {
  const double eps = epsilon(g);
  return ProjectiveLine(eps * p[0], p[1], p[2]);
}

HomogeneousPoint pole(GeometryKind g, const ProjectiveLine& u) {
  const double eps = epsilon(g);
  return HomogeneousPoint(eps * u[0], u[1], u[2]);
}

}  // namespace isoptic
