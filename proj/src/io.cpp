#include "isoptic/io.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

namespace isoptic::io {

using nlohmann::json;

const char* to_string(Format f) noexcept {
  switch (f) {
    case Format::Svg: return "svg";
    case Format::Csv: return "csv";
    case Format::Json: return "json";
  }
  return "?";
}

Format parse_format(std::string_view name) {
  if (name == "svg") return Format::Svg;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(ErrorKind::Validation, fmt::format("unknown format '{}'", name));
}

namespace {

constexpr int kOutlineResolution = 512;

std::vector<Polyline> conic_outline(const IsopticQuery& q, const Viewport& view) {
  const ConicSpec& s = q.conic;
  if (s.family == Family::Segment) return {Polyline{{-s.a, 0.0, 0.0}, {s.a, 0.0, 0.0}}};
  const QuadraticForm form = conic_form(s).normalized();
  Viewport vp = view;
  vp.nx = vp.ny = kOutlineResolution;
  DomainMask mask;
  if (s.geometry == GeometryKind::Hyperbolic) mask = [](double x, double y) { return x * x + y * y < 1.0; };
  return trace([&form](double x, double y) { return form(x, y); }, vp, mask).branches;
}

}  // namespace

Scene make_scene(const IsopticQuery& q, TracedCurve isoptic, std::optional<Viewport> view) {
  validate(q);
  Scene scene;
  scene.geometry = q.conic.geometry;
  scene.view = view;
  scene.conic_outline = conic_outline(q, view.value_or(default_viewport(q, kOutlineResolution)));
  scene.isoptic = std::move(isoptic);
  for (const auto& f : focal_points(q.conic))
    if (auto xy = f.affine()) scene.foci.push_back(*xy);
  scene.boundary = q.conic.geometry == GeometryKind::Hyperbolic;
  return scene;
}

std::string to_csv(const TracedCurve& curve) {
  std::string out = "branch,x,y,residual\n";
  for (std::size_t b = 0; b < curve.branches.size(); ++b)
    for (const auto& p : curve.branches[b]) out += fmt::format("{},{:.17g},{:.17g},{:.17g}\n", b, p.x, p.y, p.residual);
  return out;
}

std::string to_json(const TracedCurve& curve) {
  json branches = json::array();
  for (const auto& b : curve.branches) {
    json line = json::array();
    for (const auto& p : b) line.push_back({p.x, p.y, p.residual});
    branches.push_back(std::move(line));
  }
  json doc = {{"branches", std::move(branches)}, {"clipped", curve.clipped}, {"residual_max", curve.residual_max}};
  return doc.dump() + "\n";
}

TracedCurve from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    TracedCurve curve;
    curve.clipped = doc.at("clipped").get<bool>();
    curve.residual_max = doc.at("residual_max").get<double>();
    for (const auto& line : doc.at("branches")) {
      Polyline b;
      for (const auto& p : line) {
        if (!p.is_array() || p.size() != 3) throw Error(ErrorKind::Validation, "vertex must be [x, y, residual]");
        b.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
      }
      curve.branches.push_back(std::move(b));
    }
    return curve;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Validation, fmt::format("malformed curve json: {}", e.what()));
  }
}

namespace {

struct Box {
  double xmin, xmax, ymin, ymax;
  double half() const { return 0.5 * std::max(xmax - xmin, ymax - ymin); }
};

Box view_box(const Scene& scene) {
  if (scene.geometry == GeometryKind::Hyperbolic) return {-1.05, 1.05, -1.05, 1.05};
  if (scene.view) {
    const Viewport& v = *scene.view;
    const double px = 0.05 / 3.0 * (v.xmax - v.xmin), py = 0.05 / 3.0 * (v.ymax - v.ymin);
    return {v.xmin - px, v.xmax + px, v.ymin - py, v.ymax + py};
  }
  return {-3.1, 3.1, -3.1, 3.1};
}

void append_path(std::string& out, const Polyline& line, const std::string& color, double width) {
  if (line.size() < 2) return;
  out += fmt::format(R"(  <path fill="none" stroke="{}" stroke-width="{:.6g}" stroke-linejoin="round" d=")", color, width);
  for (std::size_t i = 0; i < line.size(); ++i)
    out += fmt::format("{}{:.6g} {:.6g}", i == 0 ? "M" : " L", line[i].x, line[i].y);
  out += "\"/>\n";
}

}  // namespace

std::string to_svg(const Scene& scene) {
  const Box box = view_box(scene);
  const double h = box.half();
  const SceneStyle& st = scene.style;
  std::string out;
  out += R"(<?xml version="1.0" encoding="UTF-8"?>)" "\n";
  out += fmt::format(
      R"(<svg xmlns="http://www.w3.org/2000/svg" width="800" height="{:.0f}" viewBox="{:.6g} {:.6g} {:.6g} {:.6g}">)"
      "\n",
      800.0 * (box.ymax - box.ymin) / (box.xmax - box.xmin), box.xmin, -box.ymax, box.xmax - box.xmin,
      box.ymax - box.ymin);
  out += fmt::format(R"(  <rect x="{:.6g}" y="{:.6g}" width="{:.6g}" height="{:.6g}" fill="#ffffff"/>)" "\n", box.xmin,
                     -box.ymax, box.xmax - box.xmin, box.ymax - box.ymin);
  out += "<g transform=\"scale(1,-1)\">\n";
  if (scene.boundary || scene.geometry == GeometryKind::Hyperbolic)
    out += fmt::format(R"(  <circle cx="0" cy="0" r="1" fill="none" stroke="{}" stroke-width="{:.6g}"/>)" "\n",
                       st.boundary_color, st.boundary_width * h);
  for (const auto& line : scene.conic_outline) append_path(out, line, st.conic_color, st.conic_width * h);
  for (const auto& line : scene.isoptic.branches) append_path(out, line, st.isoptic_color, st.isoptic_width * h);
  for (auto [x, y] : scene.foci)
    out += fmt::format(R"(  <circle cx="{:.6g}" cy="{:.6g}" r="{:.6g}" fill="{}"/>)" "\n", x, y, st.focus_radius * h,
                       st.focus_color);
  out += "</g>\n</svg>\n";
  return out;
}

std::string export_curve(const Scene& scene, Format format) {
  switch (format) {
    case Format::Svg: return to_svg(scene);
    case Format::Csv: return to_csv(scene.isoptic);
    case Format::Json: return to_json(scene.isoptic);
  }
  throw Error(ErrorKind::Validation, "unknown format");
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, fmt::format("cannot open '{}' for writing", path));
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  f.close();
  if (!f) throw Error(ErrorKind::Io, fmt::format("failed writing '{}'", path));
}

}  // namespace isoptic::io
