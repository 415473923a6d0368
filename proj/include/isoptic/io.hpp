#pragma once

// Figure assembly and curve serialisation.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isoptic/tracer.hpp"

namespace isoptic::io {

enum class Format { Svg, Csv, Json };

const char* to_string(Format f) noexcept;
/// Throws Error(Validation) for names other than svg, csv and json.
Format parse_format(std::string_view name);

struct SceneStyle {
  // Widths and radii are fractions of the half-width of the view.
  double conic_width = 0.008;
  double isoptic_width = 0.006;
  double boundary_width = 0.005;
  double focus_radius = 0.015;
  std::string conic_color = "#1f4e9c";
  std::string isoptic_color = "#c0392b";
  std::string boundary_color = "#000000";
  std::string focus_color = "#1b1b1b";
};

struct Scene {
  GeometryKind geometry = GeometryKind::Euclidean;
  std::vector<Polyline> conic_outline;
  TracedCurve isoptic;
  std::vector<std::pair<double, double>> foci;
  // Drawn for every hyperbolic scene regardless of this flag.
  bool boundary = false;
  std::optional<Viewport> view;
  SceneStyle style;
};

/// Conic outline, foci or segment endpoints and the model boundary around a traced isoptic.
Scene make_scene(const IsopticQuery& query, TracedCurve isoptic, std::optional<Viewport> view = std::nullopt);

/// Header `branch,x,y,residual`, one row per vertex, 17 significant digits.
std::string to_csv(const TracedCurve& curve);

/// {"branches": [[[x, y, residual], ...], ...], "clipped": bool, "residual_max": real}
std::string to_json(const TracedCurve& curve);
/// Inverse of to_json; throws Error(Validation) on malformed input.
TracedCurve from_json(std::string_view text);

/// viewBox [-1.05, 1.05]^2 for hyperbolic scenes, the padded view when one is
/// set, [-3.1, 3.1]^2 otherwise. The y axis points up.
std::string to_svg(const Scene& scene);

std::string export_curve(const Scene& scene, Format format);

/// Throws Error(Io) when the file cannot be written.
void write_file(const std::string& path, std::string_view bytes);

}  // namespace isoptic::io
