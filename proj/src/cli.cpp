#include "isoptic/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "isoptic/io.hpp"
#include "isoptic/tangents.hpp"

namespace isoptic {

namespace {

constexpr double kOracleTolerance = 1e-6;

struct Options {
  std::string geometry;
  std::string conic;
  std::optional<double> a, b, f, p, alpha;
  bool deg = false;
  int resolution = kDefaultResolution;
  std::string viewport;
  std::string out;
  std::string format;
  std::string point;
  std::string isa = "auto";
};

void add_common(CLI::App& cmd, Options& o) {
  cmd.add_option("--geometry", o.geometry, "euclidean, hyperbolic or elliptic")
      ->required()
      ->check(CLI::IsMember({"euclidean", "hyperbolic", "elliptic"}));
  cmd.add_option("--conic", o.conic, "segment, ellipse, hyperbola or parabola")
      ->check(CLI::IsMember({"segment", "ellipse", "hyperbola", "parabola"}));
  cmd.add_option("--a", o.a, "semimajor axis or segment half-length");
  cmd.add_option("--b", o.b, "semi-minor axis (Euclidean central conics)");
  cmd.add_option("--f", o.f, "focus abscissa (non-Euclidean central conics)");
  cmd.add_option("--p", o.p, "focus ordinate (parabolas)");
  cmd.add_option("--alpha", o.alpha, "view angle, radians unless --deg");
  cmd.add_flag("--deg", o.deg, "read --alpha in degrees");
  cmd.add_option("--resolution", o.resolution, "grid nodes per axis")->check(CLI::Range(kMinResolution, 16384));
  cmd.add_option("--viewport", o.viewport, "xmin,xmax,ymin,ymax");
  cmd.add_option("--out", o.out, "output path");
  cmd.add_option("--format", o.format, "svg, csv or json")->check(CLI::IsMember({"svg", "csv", "json"}));
  cmd.add_option("--point", o.point, "x,y (residual)");
  cmd.add_option("--isa", o.isa, "auto, scalar or avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Validation, what); }

std::vector<double> parse_list(const std::string& text, std::size_t count, const char* flag) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      invalid(fmt::format("{} expects {} comma-separated numbers", flag, count));
    }
  }
  if (v.size() != count) invalid(fmt::format("{} expects {} comma-separated numbers", flag, count));
  return v;
}

GeometryKind parse_geometry(const std::string& g) {
  if (g == "hyperbolic") return GeometryKind::Hyperbolic;
  if (g == "elliptic") return GeometryKind::Elliptic;
  return GeometryKind::Euclidean;
}

ConicSpec make_spec(const Options& o, bool conic_optional) {
  ConicSpec s;
  s.geometry = parse_geometry(o.geometry);
  s.a = o.a.value_or(0.0);
  s.b = o.b.value_or(0.0);
  s.f = o.f.value_or(0.0);
  s.p = o.p.value_or(0.0);
  std::optional<CentralType> declared;
  if (o.conic.empty()) {
    if (!conic_optional) invalid("--conic is required");
    if (s.geometry == GeometryKind::Euclidean) invalid("Euclidean central conics need --conic ellipse|hyperbola");
    s.family = Family::CentralConic;
  } else if (o.conic == "segment") {
    s.family = Family::Segment;
  } else if (o.conic == "parabola") {
    s.family = Family::Parabola;
  } else {
    s.family = Family::CentralConic;
    declared = o.conic == "ellipse" ? CentralType::Ellipse : CentralType::Hyperbola;
    if (s.geometry == GeometryKind::Euclidean) s.euclidean_type = *declared;
  }
  validate(s);
  if (declared && s.geometry != GeometryKind::Euclidean) {
    const CentralType actual = classify_central(s);
    if (actual != *declared)
      invalid(fmt::format("a={}, f={} describe a {}, not a {}", s.a, s.f, to_string(actual), to_string(*declared)));
  }
  return s;
}

IsopticQuery make_query(const Options& o) {
  if (!o.alpha) invalid("--alpha is required");
  IsopticQuery q{make_spec(o, false), o.deg ? *o.alpha * std::numbers::pi / 180.0 : *o.alpha};
  validate(q);
  return q;
}

kernels::Isa make_isa(const Options& o) {
  if (o.isa == "auto") return kernels::best_isa();
  const kernels::Isa isa = o.isa == "avx2" ? kernels::Isa::Avx2 : kernels::Isa::Scalar;
  if (!kernels::isa_supported(isa)) invalid(fmt::format("instruction set {} is not available", o.isa));
  return isa;
}

Viewport make_viewport(const Options& o, const IsopticQuery& q) {
  if (o.viewport.empty()) return default_viewport(q, o.resolution);
  const auto v = parse_list(o.viewport, 4, "--viewport");
  Viewport vp{v[0], v[1], v[2], v[3], o.resolution, o.resolution};
  validate(vp);
  return vp;
}

io::Format make_format(const Options& o) {
  if (!o.format.empty()) return io::parse_format(o.format);
  const std::string ext = std::filesystem::path(o.out).extension().string();
  if (ext == ".csv") return io::Format::Csv;
  if (ext == ".json") return io::Format::Json;
  return io::Format::Svg;
}

int cmd_trace(const Options& o, std::ostream& out) {
  const IsopticQuery q = make_query(o);
  const Viewport vp = make_viewport(o, q);
  TracedCurve curve = trace_isoptic(q, vp, make_isa(o));
  const std::size_t branches = curve.branches.size(), vertices = curve.vertex_count();
  const double rmax = curve.residual_max;
  const bool clipped = curve.clipped;
  const io::Format format = make_format(o);
  const bool custom_view = !o.viewport.empty();
  const io::Scene scene = io::make_scene(q, std::move(curve), custom_view || q.conic.geometry == GeometryKind::Euclidean
                                                                  ? std::optional<Viewport>(vp)
                                                                  : std::nullopt);
  const std::string bytes = io::export_curve(scene, format);
  if (o.out.empty()) {
    out << bytes;
    return 0;
  }
  io::write_file(o.out, bytes);
  out << fmt::format("wrote {} ({}): {} branches, {} vertices, residual_max {:.3e}, clipped {}\n", o.out,
                     io::to_string(format), branches, vertices, rmax, clipped);
  return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const IsopticQuery q = make_query(o);
  const TracedCurve curve = trace_isoptic(q, make_viewport(o, q), make_isa(o));
  double worst = 0.0;
  std::size_t failures = 0;
  for (const auto& b : curve.branches)
    for (const auto& p : b) {
      try {
        worst = std::max(worst, oracle_deviation(q, p.x, p.y));
      } catch (const Error&) {
        ++failures;
      }
    }
  if (failures > 0) worst = std::numeric_limits<double>::infinity();
  const bool pass = worst <= kOracleTolerance;
  out << fmt::format("vertices {}\nbranches {}\nmax |view_angle - alpha| {:.3e}\n", curve.vertex_count(),
                     curve.branches.size(), worst);
  if (failures > 0) out << fmt::format("oracle undefined at {} vertices\n", failures);
  out << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int cmd_exists(const Options& o, std::ostream& out) {
  const IsopticQuery q = make_query(o);
  const ExistenceVerdict v = existence_verdict(q);
  out << (v.exists ? "exists" : "not exists") << "\n";
  if (v.forbidden_interval)
    out << fmt::format("forbidden interval ({:.9g}, {:.9g})\n", v.forbidden_interval->first,
                       v.forbidden_interval->second);
  out << "note: " << v.condition_note << "\n";
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  ConicSpec s = make_spec(o, true);
  if (s.family != Family::CentralConic) invalid("classify applies to ellipses and hyperbolas");
  out << to_string(classify_central(s)) << "\n";
  return 0;
}

int cmd_residual(const Options& o, std::ostream& out) {
  const IsopticQuery q = make_query(o);
  if (o.point.empty()) invalid("--point x,y is required");
  const auto xy = parse_list(o.point, 2, "--point");
  out << fmt::format("{:.17g}\n", isoptic_residual(q, chart_point(xy[0], xy[1])));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isoptic curves of segments and conics in the Euclidean, hyperbolic and elliptic planes", "isoptic"};
  app.require_subcommand(1);
  Options o;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&, std::ostream&);
  };
  const std::vector<Command> commands{
      {"trace", "trace an isoptic and write svg, csv or json", cmd_trace},
      {"oracle-check", "trace and compare every vertex with the tangent-construction angle", cmd_oracle},
      {"exists", "report whether the isoptic exists for the angle", cmd_exists},
      {"classify", "classify a non-Euclidean central conic as ellipse or hyperbola", cmd_classify},
      {"residual", "evaluate the isoptic residual at --point", cmd_residual},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(*sub, o);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (subs[i]->parsed()) return commands[i].run(o, out);
    return 2;
  } catch (const Error& e) {
    err << fmt::format("error ({}): {}\n", to_string(e.kind()), e.what());
    return e.is_validation() ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace isoptic
