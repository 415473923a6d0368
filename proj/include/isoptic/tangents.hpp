#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isoptic/conics.hpp"

namespace isoptic {

enum class Multiplicity { TwoDistinct, Double, None };

struct TangentPair {
  Multiplicity multiplicity = Multiplicity::None;
  // Tangency points, lexicographic on normalized (x, y); ideal points last.
  std::optional<HomogeneousPoint> q1, q2;
  // Lines joining the external point with q1 and q2.
  std::optional<ProjectiveLine> t1, t2;
};

/// Real intersection of a line with a conic, solved in homogeneous form so that
/// points at infinity need no special treatment.
struct LineConicIntersection {
  // Discriminant divided by its natural scale; > 0 two real points, < 0 none.
  double relative_discriminant = 0.0;
  std::vector<HomogeneousPoint> points;
};

LineConicIntersection intersect(const QuadraticForm& q, const ProjectiveLine& line);

/// Tangency points seen from K, found as the intersection of K's polar line
/// with the conic. Throws Error(OnCurve) when K lies on the conic.
TangentPair tangency_points(const QuadraticForm& q, const HomogeneousPoint& k);

/// The two tangent lines through an exterior point.
std::pair<ProjectiveLine, ProjectiveLine> tangent_lines_from(const QuadraticForm& q, const HomogeneousPoint& k);

enum class AngleConvention {
  // Angular measure of the pencil of lines through K that meet the curve.
  Raw,
  // min(theta, pi - theta), for equations that only fix cos^2.
  CentralPair,
};

/// Angle under which the curve of `spec` is seen from K.
double view_angle(const ConicSpec& spec, const HomogeneousPoint& k, AngleConvention convention = AngleConvention::Raw);

}  // namespace isoptic
