#include "isoptic/tangents.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace isoptic {

namespace {

constexpr double kDiscriminantTolerance = 1e-12;

// Two points spanning the line: cross products with the two coordinate axes
// least aligned with the line's dominant coefficient.
std::pair<Vec3, Vec3> line_basis(const Vec3& l) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(l[i]) > std::abs(l[k])) k = i;
  Vec3 e1{}, e2{};
  e1[(k + 1) % 3] = 1.0;
  e2[(k + 2) % 3] = 1.0;
  return {cross(l, e1), cross(l, e2)};
}

auto lexicographic_key(const HomogeneousPoint& p) {
  if (const auto xy = p.affine()) return std::tuple{0, xy->first, xy->second};
  Vec3 c = p.normalized().coords();
  if (c[1] < 0 || (c[1] == 0 && c[2] < 0)) c = -1.0 * c;
  return std::tuple{1, c[1], c[2]};
}

void sort_pair(HomogeneousPoint& a, HomogeneousPoint& b) {
  if (lexicographic_key(b) < lexicographic_key(a)) std::swap(a, b);
}

}  // namespace

LineConicIntersection intersect(const QuadraticForm& q, const ProjectiveLine& line) {
  const Mat3 m = q.normalized().matrix();
  const Vec3 l = (1.0 / norm(line.coords())) * line.coords();
  const auto [p, r] = line_basis(l);
  // Points s p + t r:  A s^2 + 2 B s t + C t^2 = 0.
  const double A = bilinear(m, p, p), B = bilinear(m, p, r), C = bilinear(m, r, r);
  const double disc = B * B - A * C;
  const double scale = B * B + std::abs(A * C);
  LineConicIntersection out;
  if (scale == 0.0) {
    // The line lies on a degenerate conic.
    out.relative_discriminant = 0.0;
    return out;
  }
  out.relative_discriminant = disc / scale;
  if (out.relative_discriminant < -kDiscriminantTolerance) return out;
  const double root = out.relative_discriminant > kDiscriminantTolerance ? std::sqrt(disc) : 0.0;
  // Roots s/t = (-B +- root)/A = C/(-B -+ root); pick the cancellation-free pair.
  const double s = -(B + std::copysign(root, B));
  if (s == 0.0) {
    // B == 0 and a double root: either A or C vanishes.
    out.points.emplace_back(std::abs(A) <= std::abs(C) ? p : r);
    return out;
  }
  out.points.emplace_back(s * p + A * r);
  if (root > 0.0) out.points.emplace_back(C * p + s * r);
  return out;
}

TangentPair tangency_points(const QuadraticForm& q, const HomogeneousPoint& k) {
  const QuadraticForm n = q.normalized();
  if (std::abs(implicit_value(n, k)) <= kOnCurveTolerance)
    throw Error(ErrorKind::OnCurve, "point lies on the conic; use tangent_at");
  const ProjectiveLine polar(n.matrix() * k.coords());
  const LineConicIntersection hit = intersect(n, polar);

  TangentPair out;
  if (hit.points.empty()) return out;
  if (hit.points.size() == 1) {
    out.multiplicity = Multiplicity::Double;
    out.q1 = out.q2 = hit.points.front();
    out.t1 = out.t2 = join(k, hit.points.front());
    return out;
  }
  HomogeneousPoint a = hit.points[0], b = hit.points[1];
  sort_pair(a, b);
  out.multiplicity = Multiplicity::TwoDistinct;
  out.q1 = a;
  out.q2 = b;
  out.t1 = join(k, a);
  out.t2 = join(k, b);
  return out;
}

std::pair<ProjectiveLine, ProjectiveLine> tangent_lines_from(const QuadraticForm& q, const HomogeneousPoint& k) {
  const TangentPair pair = tangency_points(q, k);
  if (pair.multiplicity != Multiplicity::TwoDistinct)
    throw Error(ErrorKind::NoTangents, "no two distinct tangents from an interior point");
  return {*pair.t1, *pair.t2};
}

namespace {

// Line form used to measure angles between lines through K. Euclidean angles
// only see the direction part (u1, u2) of a line.
double line_metric(GeometryKind g, const Vec3& u, const Vec3& v) {
  const double eps = g == GeometryKind::Euclidean ? 0.0 : epsilon(g);
  return eps * u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Vec3 unit_line(GeometryKind g, const Vec3& u) {
  const double uu = line_metric(g, u, u);
  if (!(uu > 0.0)) throw Error(ErrorKind::NoProperAngle, "tangent line does not pass through a proper point");
  return (1.0 / std::sqrt(uu)) * u;
}

// Twice the acute angle between t1 and the bisector of the sector that holds
// the lines meeting the curve.
template <class MeetsCurve>
double pencil_measure(GeometryKind g, const ProjectiveLine& t1, const ProjectiveLine& t2, MeetsCurve meets) {
  const Vec3 u = unit_line(g, t1.coords());
  const Vec3 v = unit_line(g, t2.coords());
  const Vec3 plus = u + v, minus = u - v;
  const double pp = line_metric(g, plus, plus), mm = line_metric(g, minus, minus);
  // The larger bisector is numerically safer to test; its sector is decided by
  // whether it meets the curve.
  const bool use_plus = pp >= mm;
  const Vec3& bis = use_plus ? plus : minus;
  const double bb = use_plus ? pp : mm;
  const double half = std::acos(std::clamp(std::abs(line_metric(g, u, bis)) / std::sqrt(bb), 0.0, 1.0));
  const double theta = 2.0 * half;
  return meets(bis) ? theta : std::numbers::pi - theta;
}

}  // namespace

double view_angle(const ConicSpec& spec, const HomogeneousPoint& k, AngleConvention convention) {
  validate(spec);
  if (!k.affine()) throw Error(ErrorKind::IdealPoint, "viewpoint must lie in the affine chart");
  if (spec.geometry == GeometryKind::Hyperbolic && classify_point(spec.geometry, k) != PointClass::Proper)
    throw Error(ErrorKind::ImproperPoint, "hyperbolic viewpoint must be a proper point");

  double theta = 0.0;
  if (spec.family == Family::Segment) {
    const auto [a, b] = segment_endpoints(spec);
    const ProjectiveLine carrier = join(a, b);
    const Vec3 kn = k.normalized().coords();
    if (std::abs(incidence(HomogeneousPoint(kn), carrier)) <= 1e-12 && std::abs(kn[1]) <= spec.a)
      throw Error(ErrorKind::OnCurve, "viewpoint lies on the segment");
    const ProjectiveLine t1 = join(k, a), t2 = join(k, b);
    // A line through K crosses the chart segment iff A and B lie on opposite sides.
    theta = pencil_measure(spec.geometry, t1, t2, [&](const Vec3& line) {
      return dot(line, a.coords()) * dot(line, b.coords()) < 0.0;
    });
  } else {
    const QuadraticForm q = conic_form(spec);
    const TangentPair pair = tangency_points(q, k);
    if (pair.multiplicity != Multiplicity::TwoDistinct)
      throw Error(ErrorKind::NoTangents, "viewpoint is not exterior to the conic");
    theta = pencil_measure(spec.geometry, *pair.t1, *pair.t2, [&](const Vec3& line) {
      return intersect(q, ProjectiveLine(line)).relative_discriminant > 0.0;
    });
  }
  if (convention == AngleConvention::CentralPair) return std::min(theta, std::numbers::pi - theta);
  return theta;
}

}  // namespace isoptic
