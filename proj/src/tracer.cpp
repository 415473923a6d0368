#include "isoptic/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

namespace isoptic {

void validate(const Viewport& vp) {
  const bool finite = std::isfinite(vp.xmin) && std::isfinite(vp.xmax) && std::isfinite(vp.ymin) && std::isfinite(vp.ymax);
  if (!finite || !(vp.xmin < vp.xmax) || !(vp.ymin < vp.ymax))
    throw Error(ErrorKind::Validation, "viewport needs xmin < xmax and ymin < ymax");
  if (vp.nx < kMinResolution || vp.ny < kMinResolution)
    throw Error(ErrorKind::Validation, "viewport resolution must be at least 16");
}

std::size_t TracedCurve::vertex_count() const {
  std::size_t n = 0;
  for (const auto& b : branches) n += b.size();
  return n;
}

void ScalarField::row(double y, double x0, double dx, std::span<double> out) const {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = value(x0 + static_cast<double>(i) * dx, y);
}

ProgramField::ProgramField(kernels::ResidualProgram program, kernels::Isa isa)
    : program_(std::move(program)), isa_(isa) {
  if (!kernels::isa_supported(isa)) throw std::invalid_argument("instruction set not supported on this CPU");
}

void ProgramField::row(double y, double x0, double dx, std::span<double> out) const {
  kernels::evaluate_row(program_, y, x0, dx, out, isa_);
}

SaddleConnection saddle_disambiguate(const std::array<bool, 4>& s, double center) {
  if (!(s[0] == s[2] && s[1] == s[3] && s[0] != s[1]))
    throw std::invalid_argument("saddle cell needs alternating corner signs");
  const bool center_positive = std::isnan(center) || center >= -kSaddleTolerance;
  return center_positive ? SaddleConnection::SeparateNegativeCorners : SaddleConnection::SeparatePositiveCorners;
}

namespace {

struct Grid {
  int nx, ny;
  double x0, y0, dx, dy;
  std::vector<double> v;

  double x(int i) const { return x0 + static_cast<double>(i) * dx; }
  double y(int j) const { return y0 + static_cast<double>(j) * dy; }
  double at(int i, int j) const { return v[static_cast<std::size_t>(j) * nx + i]; }
};

void fill_rows(const ScalarField& field, Grid& g, const DomainMask& mask, int j0, int j1) {
  for (int j = j0; j < j1; ++j) {
    std::span<double> out(g.v.data() + static_cast<std::size_t>(j) * g.nx, g.nx);
    const double y = g.y(j);
    field.row(y, g.x0, g.dx, out);
    if (mask)
      for (int i = 0; i < g.nx; ++i)
        if (!mask(g.x(i), y)) out[i] = std::numeric_limits<double>::quiet_NaN();
  }
}

void fill(const ScalarField& field, Grid& g, const DomainMask& mask) {
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, g.ny / 16);
  if (workers <= 1) {
    fill_rows(field, g, mask, 0, g.ny);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const int chunk = (g.ny + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int j0 = w * chunk, j1 = std::min(g.ny, j0 + chunk);
    pool.emplace_back([&, w, j0, j1] {
      try {
        fill_rows(field, g, mask, j0, j1);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

class Contour {
 public:
  Contour(const ScalarField& field, const Grid& g, const DomainMask& mask)
      : field_(field), g_(g), mask_(mask), edge_vertex_(2 * static_cast<std::size_t>(g.nx) * g.ny, kUnvisited) {}

  TracedCurve run() {
    TracedCurve out;
    for (int j = 0; j + 1 < g_.ny; ++j)
      for (int i = 0; i + 1 < g_.nx; ++i) cell(i, j, out);
    assemble(out);
    return out;
  }

 private:
  static constexpr int kUnvisited = -2;
  static constexpr int kNone = -1;

  static bool positive(double v) { return v >= 0.0; }

  // Edge ids: horizontal (i, j)-(i+1, j) is 2 (j nx + i), vertical (i, j)-(i, j+1) is that + 1.
  std::size_t horizontal(int i, int j) const { return 2 * (static_cast<std::size_t>(j) * g_.nx + i); }
  std::size_t vertical(int i, int j) const { return horizontal(i, j) + 1; }

  int crossing(std::size_t edge) {
    int& slot = edge_vertex_[edge];
    if (slot != kUnvisited) return slot;
    const std::size_t node = edge / 2;
    const int i = static_cast<int>(node % g_.nx), j = static_cast<int>(node / g_.nx);
    const bool vert = edge % 2 == 1;
    const double xa = g_.x(i), ya = g_.y(j);
    const double xb = vert ? xa : g_.x(i + 1), yb = vert ? g_.y(j + 1) : ya;
    const double va = g_.at(i, j), vb = vert ? g_.at(i, j + 1) : g_.at(i + 1, j);
    slot = refine(xa, ya, va, xb, yb, vb);
    return slot;
  }

  // Bisection between a sign change; crossings that do not reach the
  // tolerance are dropped.
  int refine(double xa, double ya, double va, double xb, double yb, double vb) {
    if (std::abs(va) < kRefineTolerance) return add_vertex(xa, ya, va);
    if (std::abs(vb) < kRefineTolerance) return add_vertex(xb, yb, vb);
    const bool pa = positive(va);
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < kRefineIterations; ++it) {
      const double t = 0.5 * (lo + hi);
      const double x = xa + t * (xb - xa), y = ya + t * (yb - ya);
      const double v = field_.value(x, y);
      if (std::isnan(v)) return kNone;
      if (std::abs(v) < kRefineTolerance) return add_vertex(x, y, v);
      (positive(v) == pa ? lo : hi) = t;
    }
    return kNone;
  }

  int add_vertex(double x, double y, double r) {
    vertices_.push_back({x, y, r});
    adjacency_.push_back({kNone, kNone});
    return static_cast<int>(vertices_.size()) - 1;
  }

  void link(int a, int b) {
    if (a < 0 || b < 0 || a == b) return;
    auto attach = [&](int from, int to) {
      auto& slots = adjacency_[from];
      (slots[0] == kNone ? slots[0] : slots[1]) = to;
    };
    attach(a, b);
    attach(b, a);
  }

  void cell(int i, int j, TracedCurve& out) {
    const std::array<double, 4> c{g_.at(i, j), g_.at(i + 1, j), g_.at(i + 1, j + 1), g_.at(i, j + 1)};
    const int nan_count = static_cast<int>(std::count_if(c.begin(), c.end(), [](double v) { return std::isnan(v); }));
    if (nan_count > 0) {
      if (mask_ && !out.clipped) {
        const std::array<std::pair<int, int>, 4> nodes{{{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}}};
        int inside = 0;
        for (auto [ci, cj] : nodes) inside += mask_(g_.x(ci), g_.y(cj)) ? 1 : 0;
        if (inside > 0 && inside < 4) out.clipped = true;
      }
      return;
    }
    std::array<bool, 4> s{};
    for (int k = 0; k < 4; ++k) s[k] = positive(c[k]);
    // Edges: 0 bottom, 1 right, 2 top, 3 left; edge k joins corners k and k+1 (mod 4).
    const std::array<std::size_t, 4> ids{horizontal(i, j), vertical(i + 1, j), horizontal(i, j + 1), vertical(i, j)};
    std::array<int, 4> crossing_edges{};
    int n = 0;
    for (int k = 0; k < 4; ++k)
      if (s[k] != s[(k + 1) % 4]) crossing_edges[n++] = k;
    if (n == 2) {
      link(crossing(ids[crossing_edges[0]]), crossing(ids[crossing_edges[1]]));
      return;
    }
    if (n != 4) return;
    double center = field_.value(0.5 * (g_.x(i) + g_.x(i + 1)), 0.5 * (g_.y(j) + g_.y(j + 1)));
    if (mask_ && !mask_(0.5 * (g_.x(i) + g_.x(i + 1)), 0.5 * (g_.y(j) + g_.y(j + 1))))
      center = std::numeric_limits<double>::quiet_NaN();
    const bool cut_negative = saddle_disambiguate(s, center) == SaddleConnection::SeparateNegativeCorners;
    // Corner k is cut off by its two incident edges: (k - 1) mod 4 and k.
    const bool cut_even = (s[0] == !cut_negative);
    const int first = cut_even ? 0 : 1;
    for (int k = first; k < 4; k += 2) link(crossing(ids[(k + 3) % 4]), crossing(ids[k]));
  }

  Polyline walk(int start, std::vector<char>& seen) const {
    Polyline line;
    int prev = kNone, cur = start;
    while (true) {
      line.push_back(vertices_[cur]);
      seen[cur] = 1;
      int next = kNone;
      for (int nb : adjacency_[cur])
        if (nb != kNone && nb != prev && !seen[nb]) {
          next = nb;
          break;
        }
      if (next == kNone) {
        const auto& adj = adjacency_[cur];
        if (line.size() > 2 && (adj[0] == start || adj[1] == start)) line.push_back(vertices_[start]);
        return line;
      }
      prev = cur;
      cur = next;
    }
  }

  void assemble(TracedCurve& out) const {
    std::vector<char> seen(vertices_.size(), 0);
    auto degree = [&](int v) {
      return (adjacency_[v][0] != kNone ? 1 : 0) + (adjacency_[v][1] != kNone ? 1 : 0);
    };
    const int count = static_cast<int>(vertices_.size());
    for (int v = 0; v < count; ++v)
      if (!seen[v] && degree(v) == 1) out.branches.push_back(walk(v, seen));
    for (int v = 0; v < count; ++v)
      if (!seen[v] && degree(v) == 2) out.branches.push_back(walk(v, seen));
    for (const auto& b : out.branches)
      for (const auto& p : b) out.residual_max = std::max(out.residual_max, std::abs(p.residual));
  }

  const ScalarField& field_;
  const Grid& g_;
  const DomainMask& mask_;
  std::vector<int> edge_vertex_;
  std::vector<TracedPoint> vertices_;
  std::vector<std::array<int, 2>> adjacency_;
};

}  // namespace

TracedCurve trace(const ScalarField& field, const Viewport& vp, const DomainMask& mask) {
  validate(vp);
  Grid g{vp.nx, vp.ny, vp.xmin, vp.ymin, (vp.xmax - vp.xmin) / (vp.nx - 1), (vp.ymax - vp.ymin) / (vp.ny - 1), {}};
  g.v.resize(static_cast<std::size_t>(g.nx) * g.ny);
  fill(field, g, mask);
  return Contour(field, g, mask).run();
}

TracedCurve trace(const std::function<double(double, double)>& residual, const Viewport& vp, const DomainMask& mask) {
  return trace(FunctionField(residual), vp, mask);
}

Viewport default_viewport(const IsopticQuery& q, int resolution) {
  validate(q);
  Viewport vp;
  vp.nx = vp.ny = resolution;
  double half = 3.0;
  switch (q.conic.geometry) {
    case GeometryKind::Hyperbolic:
      half = 1.0;
      break;
    case GeometryKind::Elliptic:
      break;
    case GeometryKind::Euclidean: {
      const ConicSpec& s = q.conic;
      const double size = s.family == Family::Segment        ? s.a
                          : s.family == Family::CentralConic ? std::max(s.a, s.b)
                                                             : 4.0 * s.p;
      half = std::max(3.0, 1.2 * size / std::sin(0.5 * q.alpha));
      break;
    }
  }
  vp.xmin = vp.ymin = -half;
  vp.xmax = vp.ymax = half;
  validate(vp);
  return vp;
}

TracedCurve trace_isoptic(const IsopticQuery& q, const Viewport& vp, kernels::Isa isa) {
  validate(vp);
  const auto programs = tracing_programs(q);
  DomainMask mask;
  if (q.conic.geometry == GeometryKind::Hyperbolic) {
    const double r2 = programs.front().disk_radius_sq;
    mask = [r2](double x, double y) { return x * x + y * y < r2; };
  }
  TracedCurve out;
  for (const auto& program : programs) {
    TracedCurve piece = trace(ProgramField(program, isa), vp, mask);
    out.clipped = out.clipped || piece.clipped;
    out.residual_max = std::max(out.residual_max, piece.residual_max);
    for (auto& b : piece.branches) out.branches.push_back(std::move(b));
  }
  return out;
}

}  // namespace isoptic
