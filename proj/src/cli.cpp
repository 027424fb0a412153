// Copyright 2026 The Tropicon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropicon/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tropicon/convex_function.hpp"
#include "tropicon/diff_affine.hpp"
#include "tropicon/errors.hpp"
#include "tropicon/io.hpp"
#include "tropicon/projection.hpp"
#include "tropicon/separation.hpp"

namespace tropicon {
namespace {

// ---------------------------------------------------------------------------
// Plumbing
// ---------------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read input file \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    throw ParseError("cannot write output file \"" + path + "\"");
  }
}

std::optional<SemifieldKind> kind_from_env() {
  const char* value = std::getenv("TROPICON_SEMIFIELD");
  if (value == nullptr || *value == '\0') return std::nullopt;
  return kind_from_string(value);
}

const Instance& require_instance(const std::optional<Instance>& inst) {
  if (!inst) {
    throw ParseError("this command needs an input instance file");
  }
  return *inst;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

// Splits a lifted point (y_1..y_n, nu) relative to an n-dimensional
// epigraph.
std::pair<Vector, Scalar> split_lifted(const EpiSet& epi, const Vector& point) {
  if (point.size() != epi.dimension() + 1) {
    throw DimensionMismatch("an epigraph point needs " + std::to_string(epi.dimension() + 1) +
                            " coordinates (argument plus value), got " +
                            std::to_string(point.size()));
  }
  std::vector<Scalar> head(point.entries().begin(), point.entries().end() - 1);
  return {Vector(point.kind(), std::move(head)), point[point.size() - 1]};
}

// ---------------------------------------------------------------------------
// Exact CSV cells (numeric reading; infinities as explicit markers)
// ---------------------------------------------------------------------------

std::string rational_csv(const Rational& r) { return rational_to_string(r); }

std::string scalar_csv(const Scalar& s) {
  const bool maxplus = s.kind() == SemifieldKind::MaxPlus;
  if (s.is_bottom()) return maxplus ? "-inf" : "+inf";
  if (s.is_top()) return maxplus ? "+inf" : "-inf";
  return rational_csv(s.numeric());
}

// ---------------------------------------------------------------------------
// SVG rendering (display layer only; data stays exact in CSV)
// ---------------------------------------------------------------------------

double numeric_display(const Scalar& s) {
  const double inf = std::numeric_limits<double>::infinity();
  const bool maxplus = s.kind() == SemifieldKind::MaxPlus;
  if (s.is_bottom()) return maxplus ? -inf : inf;
  if (s.is_top()) return maxplus ? inf : -inf;
  return s.numeric().convert_to<double>();
}

double display_value(const Scalar& s, bool exp_coords) {
  const double v = numeric_display(s);
  return exp_coords ? std::exp(v) : v;
}

double display_rational(const Rational& r, bool exp_coords) {
  const double v = r.convert_to<double>();
  return exp_coords ? std::exp(v) : v;
}

std::string fmt2(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

constexpr const char* kPalette[4] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

// Maps a rectangular data box to a fixed-size pixel viewport.
class Canvas {
 public:
  Canvas(double x_lo, double x_hi, double y_lo, double y_hi)
      : x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi) {
    if (!(x_hi_ > x_lo_)) x_hi_ = x_lo_ + 1.0;
    if (!(y_hi_ > y_lo_)) y_hi_ = y_lo_ + 1.0;
  }

  static constexpr double kWidth = 480.0;
  static constexpr double kHeight = 360.0;
  static constexpr double kMargin = 24.0;

  double clamp_x(double x) const { return std::min(std::max(x, x_lo_), x_hi_); }
  double clamp_y(double y) const { return std::min(std::max(y, y_lo_), y_hi_); }
  double x_lo() const { return x_lo_; }
  double x_hi() const { return x_hi_; }
  double y_lo() const { return y_lo_; }
  double y_hi() const { return y_hi_; }

  double px(double x) const {
    return kMargin + (x - x_lo_) / (x_hi_ - x_lo_) * (kWidth - 2 * kMargin);
  }
  double py(double y) const {
    return kHeight - kMargin - (y - y_lo_) / (y_hi_ - y_lo_) * (kHeight - 2 * kMargin);
  }

  std::string header() const {
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"#ffffff\" stroke=\"#cccccc\"/>\n";
    return svg.str();
  }

  std::string polyline(const std::vector<std::pair<double, double>>& points,
                       const char* color) const {
    if (points.size() < 2) return "";
    std::ostringstream svg;
    svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i > 0) svg << ' ';
      svg << fmt2(px(clamp_x(points[i].first))) << ',' << fmt2(py(clamp_y(points[i].second)));
    }
    svg << "\"/>\n";
    return svg.str();
  }

  std::string line(double x0, double y0, double x1, double y1, const char* color) const {
    std::ostringstream svg;
    svg << "  <line x1=\"" << fmt2(px(clamp_x(x0))) << "\" y1=\"" << fmt2(py(clamp_y(y0)))
        << "\" x2=\"" << fmt2(px(clamp_x(x1))) << "\" y2=\"" << fmt2(py(clamp_y(y1)))
        << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
    return svg.str();
  }

  std::string circle(double x, double y, double radius, const char* color) const {
    std::ostringstream svg;
    svg << "  <circle cx=\"" << fmt2(px(clamp_x(x))) << "\" cy=\"" << fmt2(py(clamp_y(y)))
        << "\" r=\"" << radius << "\" fill=\"" << color << "\"/>\n";
    return svg.str();
  }

  static std::string footer() { return "</svg>\n"; }

 private:
  double x_lo_, x_hi_, y_lo_, y_hi_;
};

// Consecutive drawable samples form polyline segments; non-finite display
// values break the line.
std::vector<std::vector<std::pair<double, double>>> segments(
    const std::vector<std::optional<std::pair<double, double>>>& samples) {
  std::vector<std::vector<std::pair<double, double>>> runs;
  std::vector<std::pair<double, double>> current;
  for (const auto& sample : samples) {
    if (sample && std::isfinite(sample->first) && std::isfinite(sample->second)) {
      current.push_back(*sample);
    } else if (!current.empty()) {
      runs.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) runs.push_back(std::move(current));
  return runs;
}

// ---------------------------------------------------------------------------
// Sampling grids
// ---------------------------------------------------------------------------

std::pair<Rational, Rational> axis_range(const PlotSpec& spec, std::size_t axis, long lo_default,
                                         long hi_default) {
  if (spec.range.size() > axis) return spec.range[axis];
  return {Rational(lo_default), Rational(hi_default)};
}

std::vector<Rational> sample_axis(const std::pair<Rational, Rational>& range, int resolution) {
  std::vector<Rational> xs;
  xs.reserve(static_cast<std::size_t>(resolution));
  const Rational span = range.second - range.first;
  for (int k = 0; k < resolution; ++k) {
    xs.push_back(range.first + span * Rational(k) / Rational(resolution - 1));
  }
  return xs;
}

// ---------------------------------------------------------------------------
// Commands: separate / member / project / support / verify
// ---------------------------------------------------------------------------

const Vector& require_point(const Instance& inst, const char* command) {
  if (!inst.point) {
    throw ParseError(std::string(command) + " needs a \"point\" in the instance");
  }
  return *inst.point;
}

int cmd_separate(const Instance& inst, bool universal, const std::string& output_path,
                 std::ostream& out) {
  const Vector& point = require_point(inst, "separate");
  SeparationCertificate cert = [&] {
    if (inst.set) {
      return universal ? universal_separate(*inst.set, point) : separate_convex(*inst.set, point);
    }
    if (inst.module) {
      if (universal) {
        throw ParseError("--universal applies to convex-set instances only");
      }
      return separate_module(*inst.module, point);
    }
    throw ParseError("separate needs \"generators\", \"set\", or \"module\" in the instance");
  }();
  write_output(dump_json(certificate_to_json(cert)), output_path, out);
  return 0;
}

int cmd_member(const Instance& inst, const std::string& output_path, std::ostream& out) {
  const Vector& point = require_point(inst, "member");
  bool is_member = false;
  if (inst.set) {
    is_member = member(*inst.set, point);
  } else if (inst.module) {
    // project_module is contracting, so equality reduces to point <= P(point).
    is_member = vleq(point, project_module(*inst.module, point));
  } else if (inst.episet) {
    const auto [y, nu] = split_lifted(*inst.episet, point);
    is_member = epi_member(*inst.episet, y, nu);
  } else {
    throw ParseError("member needs \"generators\", \"set\", \"module\", or \"episet\"");
  }
  Json j;
  j["member"] = is_member;
  write_output(dump_json(j), output_path, out);
  return 0;
}

int cmd_project(const Instance& inst, const std::string& output_path, std::ostream& out) {
  const Vector& point = require_point(inst, "project");
  Json j;
  j["semifield"] = kind_to_string(inst.kind);
  if (inst.set) {
    const ProjectionResult pr = project_convex(*inst.set, point);
    j["q"] = vector_to_json(pr.q);
    j["nu"] = scalar_to_json(pr.nu);
    j["in_down"] = in_down(*inst.set, point);
    j["in_up"] = in_up(*inst.set, point);
    j["member"] = member(*inst.set, point);
    if (!pr.nu.is_bottom()) {
      j["proj_point"] = vector_to_json(proj_point(*inst.set, point));
    }
  } else if (inst.module) {
    const Vector p = project_module(*inst.module, point);
    j["p"] = vector_to_json(p);
    j["member"] = vleq(point, p);
  } else if (inst.episet) {
    const auto [y, nu] = split_lifted(*inst.episet, point);
    const ProjectionResult pr = epi_project(*inst.episet, y, nu);
    j["q"] = vector_to_json(pr.q);
    j["nu"] = scalar_to_json(pr.nu);
    j["member"] = epi_member(*inst.episet, y, nu);
  } else {
    throw ParseError("project needs \"generators\", \"set\", \"module\", or \"episet\"");
  }
  write_output(dump_json(j), output_path, out);
  return 0;
}

int cmd_support(const Instance& inst, const std::string& output_path, std::ostream& out) {
  if (!inst.episet) {
    throw ParseError("support needs an \"episet\" in the instance");
  }
  const bool have_probes = !inst.probes.empty();
  const bool have_point = inst.point.has_value();
  if (have_probes == have_point) {
    throw ParseError("support needs exactly one of \"probes\" or a lifted \"point\" [y..., nu]");
  }
  if (have_point) {
    const auto [y, nu] = split_lifted(*inst.episet, *inst.point);
    const DiffAffine u = supporting_function(*inst.episet, y, nu);
    Json j = diff_affine_to_json(u);
    j["semifield"] = kind_to_string(inst.kind);
    write_output(dump_json(j), output_path, out);
    return 0;
  }
  const Hull hull = hull_from_supports(*inst.episet, inst.probes);
  write_output(dump_json(hull_to_json(hull)), output_path, out);
  return 0;
}

int cmd_verify(const Instance& inst, int samples, std::uint64_t seed,
               const std::string& output_path, std::ostream& out) {
  if (!inst.certificate) {
    throw ParseError("verify needs a certificate document (w_prime/d_prime/w_second/d_second)");
  }
  if (samples < 1) {
    throw ParseError("--samples must be at least 1");
  }
  const VerifyReport report = verify_certificate(*inst.certificate, samples, seed);
  Json j;
  j["ok"] = report.ok;
  j["issues"] = report.issues;
  write_output(dump_json(j), output_path, out);
  return report.ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// plot --target function-graph
// ---------------------------------------------------------------------------

std::string plot_function_graph(const Instance& inst, bool exp_coords, PlotFormat format) {
  const SemifieldKind kind = inst.kind;
  std::size_t dimension = 0;
  if (inst.hull) {
    dimension = inst.hull->dimension;
  } else if (inst.episet) {
    dimension = inst.episet->dimension();
  } else {
    throw ParseError("function-graph needs a \"hull\" or an \"episet\"");
  }
  if (dimension != 1) {
    throw ParseError("function-graph plots one-dimensional functions only");
  }
  const auto f = [&](const Rational& x_numeric) {
    const Vector x(kind, {Scalar::finite(x_numeric, kind)});
    return inst.hull ? hull_eval(*inst.hull, x) : epi_function_value(*inst.episet, x);
  };
  const auto range = axis_range(inst.plot, 0, -8, 8);
  const std::vector<Rational> xs = sample_axis(range, inst.plot.resolution);

  if (format == PlotFormat::Csv) {
    std::ostringstream csv;
    csv << "x,f\n";
    for (const Rational& x : xs) {
      csv << rational_csv(x) << ',' << scalar_csv(f(x)) << '\n';
    }
    return csv.str();
  }

  std::vector<std::optional<std::pair<double, double>>> samples;
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();
  for (const Rational& x : xs) {
    const double dx = display_rational(x, exp_coords);
    const double dy = display_value(f(x), exp_coords);
    if (std::isfinite(dx) && std::isfinite(dy)) {
      samples.emplace_back(std::in_place, dx, dy);
      y_min = std::min(y_min, dy);
      y_max = std::max(y_max, dy);
    } else {
      samples.emplace_back(std::nullopt);
    }
  }
  if (!(y_min <= y_max)) {
    y_min = 0.0;
    y_max = 1.0;
  }
  const Canvas canvas(display_rational(range.first, exp_coords),
                      display_rational(range.second, exp_coords), y_min, y_max);
  std::string svg = canvas.header();
  for (const auto& run : segments(samples)) {
    svg += canvas.polyline(run, kPalette[0]);
  }
  svg += Canvas::footer();
  return svg;
}

// ---------------------------------------------------------------------------
// plot --target hyperplane-region-2d
// ---------------------------------------------------------------------------

// The set of x2 with <w', (x1,x2)> (+) d' = <w'', (x1,x2)> (+) d'', for a
// fixed x1, is empty, a point, a ray, or everything: with
//   a0 = w'_1 x1 (+) d',  p = w'_2,  b0 = w''_1 x1 (+) d'',  q = w''_2,
// the side with the larger slope dominates for large x2, so equality
// holds on {x2 >= lres(p, a0 (+) b0)} when p = q and a0 != b0, everywhere
// when additionally a0 = b0, and otherwise (p != q, larger slope's offset
// abig vs the other offset asmall) on a single point lres(big, asmall)
// when abig < asmall, on the left ray {x2 <= lres(big, abig)} when they
// tie, and nowhere when abig > asmall.
struct Column {
  enum class Kind : std::uint8_t { Empty, All, Point, LeftRay, RightRay } kind;
  Scalar at;  // point value or ray threshold (canonical order)
};

Column solve_column(const Hyperplane& h, const Scalar& x1) {
  const Scalar a0 = oplus(otimes(h.w_prime()[0], x1), h.d_prime());
  const Scalar p = h.w_prime()[1];
  const Scalar b0 = oplus(otimes(h.w_second()[0], x1), h.d_second());
  const Scalar q = h.w_second()[1];
  const SemifieldKind kind = h.kind();
  if (p == q) {
    if (p.is_bottom()) {
      return {a0 == b0 ? Column::Kind::All : Column::Kind::Empty, Scalar::bottom(kind)};
    }
    if (a0 == b0) return {Column::Kind::All, Scalar::bottom(kind)};
    return {Column::Kind::RightRay, lres(p, oplus(a0, b0))};
  }
  const bool primed_larger = q < p;
  const Scalar& big = primed_larger ? p : q;
  const Scalar& offset_big = primed_larger ? a0 : b0;
  const Scalar& offset_small = primed_larger ? b0 : a0;
  if (offset_big < offset_small) return {Column::Kind::Point, lres(big, offset_small)};
  if (offset_big == offset_small) return {Column::Kind::LeftRay, lres(big, offset_big)};
  return {Column::Kind::Empty, Scalar::bottom(kind)};
}

// Canonical interval endpoints for a column; CSV cells are ordered by the
// numeric reading (min-plus reverses the canonical order).
std::pair<std::string, std::string> interval_cells(const Column& column, SemifieldKind kind) {
  Scalar lo = Scalar::bottom(kind);
  Scalar hi = Scalar::top(kind);
  switch (column.kind) {
    case Column::Kind::All:
      break;
    case Column::Kind::Point:
      lo = column.at;
      hi = column.at;
      break;
    case Column::Kind::LeftRay:
      hi = column.at;
      break;
    case Column::Kind::RightRay:
      lo = column.at;
      break;
    case Column::Kind::Empty:
      return {"", ""};
  }
  std::string lo_cell = scalar_csv(lo);
  std::string hi_cell = scalar_csv(hi);
  if (kind == SemifieldKind::MinPlusDual) std::swap(lo_cell, hi_cell);
  return {lo_cell, hi_cell};
}

std::string plot_hyperplane_region(const Instance& inst, bool exp_coords, PlotFormat format) {
  if (!inst.certificate) {
    throw ParseError("hyperplane-region-2d needs a certificate document as input");
  }
  const Hyperplane& h = inst.certificate->hyperplane;
  if (h.dimension() != 2) {
    throw ParseError("hyperplane-region-2d needs a two-dimensional hyperplane");
  }
  if (!h.all_finite()) {
    throw DomainError("hyperplane-region-2d needs finite coefficients; "
                      "re-run separation in refined mode");
  }
  const SemifieldKind kind = h.kind();
  const auto x_range = axis_range(inst.plot, 0, -8, 8);
  const auto y_range = axis_range(inst.plot, 1, -8, 8);
  const std::vector<Rational> xs = sample_axis(x_range, inst.plot.resolution);

  if (format == PlotFormat::Csv) {
    std::ostringstream csv;
    csv << "x1,lo,hi\n";
    for (const Rational& x : xs) {
      const Column column = solve_column(h, Scalar::finite(x, kind));
      if (column.kind == Column::Kind::Empty) continue;
      const auto [lo, hi] = interval_cells(column, kind);
      csv << rational_csv(x) << ',' << lo << ',' << hi << '\n';
    }
    return csv.str();
  }

  const Canvas canvas(display_rational(x_range.first, exp_coords),
                      display_rational(x_range.second, exp_coords),
                      display_rational(y_range.first, exp_coords),
                      display_rational(y_range.second, exp_coords));
  std::string svg = canvas.header();
  for (const Rational& x : xs) {
    const Column column = solve_column(h, Scalar::finite(x, kind));
    if (column.kind == Column::Kind::Empty) continue;
    const double dx = display_rational(x, exp_coords);
    double lo = canvas.y_lo();
    double hi = canvas.y_hi();
    const double at = column.kind == Column::Kind::All ? 0.0 : display_value(column.at, exp_coords);
    // LeftRay/RightRay read in canonical order; min-plus display flips it.
    const bool flipped = kind == SemifieldKind::MinPlusDual;
    if (column.kind == Column::Kind::Point) {
      lo = hi = at;
    } else if (column.kind == Column::Kind::LeftRay) {
      (flipped ? lo : hi) = at;
    } else if (column.kind == Column::Kind::RightRay) {
      (flipped ? hi : lo) = at;
    }
    if (!std::isfinite(lo)) lo = lo > 0 ? canvas.y_hi() : canvas.y_lo();
    if (!std::isfinite(hi)) hi = hi > 0 ? canvas.y_hi() : canvas.y_lo();
    svg += canvas.line(dx, lo, dx, hi, kPalette[0]);
  }
  for (const Vector& g : inst.certificate->generators) {
    if (g.size() != 2) continue;
    svg += canvas.circle(display_value(g[0], exp_coords), display_value(g[1], exp_coords), 3.0,
                         kPalette[2]);
  }
  if (inst.certificate->point.size() == 2) {
    const Vector& y = inst.certificate->point;
    svg += canvas.circle(display_value(y[0], exp_coords), display_value(y[1], exp_coords), 4.0,
                         kPalette[1]);
  }
  svg += Canvas::footer();
  return svg;
}

// ---------------------------------------------------------------------------
// plot --target shadow-upperset-2d
// ---------------------------------------------------------------------------

std::string plot_shadow_upperset(const Instance& inst, bool exp_coords, PlotFormat format) {
  if (!inst.set) {
    throw ParseError("shadow-upperset-2d needs a convex set (\"generators\" or \"set\")");
  }
  const ConvexSet& set = *inst.set;
  if (set.dimension() != 2) {
    throw ParseError("shadow-upperset-2d needs a two-dimensional set");
  }
  const SemifieldKind kind = set.kind();
  const auto x_range = axis_range(inst.plot, 0, -8, 8);
  const auto y_range = axis_range(inst.plot, 1, -8, 8);
  const std::vector<Rational> xs = sample_axis(x_range, inst.plot.resolution);
  const std::vector<Rational> ys = sample_axis(y_range, inst.plot.resolution);

  if (format == PlotFormat::Csv) {
    std::ostringstream csv;
    csv << "x1,x2,down,up\n";
    for (const Rational& x : xs) {
      for (const Rational& y : ys) {
        const Vector z(kind, {Scalar::finite(x, kind), Scalar::finite(y, kind)});
        csv << rational_csv(x) << ',' << rational_csv(y) << ',' << (in_down(set, z) ? 1 : 0) << ','
            << (in_up(set, z) ? 1 : 0) << '\n';
      }
    }
    return csv.str();
  }

  const Canvas canvas(display_rational(x_range.first, exp_coords),
                      display_rational(x_range.second, exp_coords),
                      display_rational(y_range.first, exp_coords),
                      display_rational(y_range.second, exp_coords));
  // The upper set is the union of the generators' upward orthants
  // (canonical order); each contributes an L-shaped corner boundary. The
  // canonical-Top viewport corner depends on the kind's numeric reading.
  const bool flipped = kind == SemifieldKind::MinPlusDual;
  const double top_x = flipped ? canvas.x_lo() : canvas.x_hi();
  const double top_y = flipped ? canvas.y_lo() : canvas.y_hi();
  std::string svg = canvas.header();
  for (const Vector& g : set.generators()) {
    const double gx = display_value(g[0], exp_coords);
    const double gy = display_value(g[1], exp_coords);
    const double cx = std::isfinite(gx) ? gx : (flipped ? canvas.x_hi() : canvas.x_lo());
    const double cy = std::isfinite(gy) ? gy : (flipped ? canvas.y_hi() : canvas.y_lo());
    svg += canvas.polyline({{cx, top_y}, {cx, cy}, {top_x, cy}}, kPalette[2]);
  }
  for (const Rational& x : xs) {
    for (const Rational& y : ys) {
      const Vector z(kind, {Scalar::finite(x, kind), Scalar::finite(y, kind)});
      if (in_down(set, z)) {
        svg += canvas.circle(display_rational(x, exp_coords), display_rational(y, exp_coords), 1.5,
                             kPalette[0]);
      }
    }
  }
  svg += Canvas::footer();
  return svg;
}

// ---------------------------------------------------------------------------
// plot --target diffaffine-gallery
// ---------------------------------------------------------------------------

const char* shape_label(Shape1D::Case c) {
  switch (c) {
    case Shape1D::Case::IdenticallyBottom:
      return "identically-bottom";
    case Shape1D::Case::RayRight:
      return "ray-right";
    case Shape1D::Case::Plateau:
      return "plateau";
    case Shape1D::Case::Affine:
      return "affine";
  }
  return "unknown";
}

DiffAffine gallery_piece(SemifieldKind kind, long a, long b, long c, long d) {
  const auto s = [&](long v) { return Scalar::finite_canonical(Rational(v), kind); };
  return DiffAffine(Vector(kind, {s(a)}), s(b), Vector(kind, {s(c)}), s(d));
}

std::string plot_gallery(const std::optional<Instance>& inst, std::optional<SemifieldKind> forced,
                         bool exp_coords, PlotFormat format) {
  const SemifieldKind kind =
      inst ? inst->kind : forced.value_or(SemifieldKind::MaxPlus);
  const PlotSpec spec = inst ? inst->plot : PlotSpec{};
  std::vector<DiffAffine> pieces;
  if (inst && inst->diff_affine) {
    if (inst->diff_affine->dimension() != 1) {
      throw ParseError("diffaffine-gallery plots one-dimensional differences only");
    }
    pieces.push_back(*inst->diff_affine);
  } else {
    // One representative per classification cell: identically-bottom,
    // right ray, bounded plateau, affine.
    pieces.push_back(gallery_piece(kind, 0, 0, 1, 1));
    pieces.push_back(gallery_piece(kind, 2, 0, 0, 1));
    pieces.push_back(gallery_piece(kind, 0, 5, 2, 0));
    pieces.push_back(gallery_piece(kind, 1, 3, 0, 0));
  }
  const auto range = axis_range(spec, 0, -5, 5);
  const std::vector<Rational> xs = sample_axis(range, spec.resolution);

  if (format == PlotFormat::Csv) {
    std::ostringstream csv;
    bool first = true;
    for (const DiffAffine& u : pieces) {
      const Shape1D shape = classify_1d(u.w_prime()[0], u.d_prime(), u.w_second()[0], u.d_second());
      if (!first) csv << '\n';
      first = false;
      csv << "# shape: " << shape_label(shape.shape) << '\n' << "x,value\n";
      for (const Rational& x : xs) {
        const Vector point(kind, {Scalar::finite(x, kind)});
        csv << rational_csv(x) << ',' << scalar_csv(eval(u, point)) << '\n';
      }
    }
    return csv.str();
  }

  std::vector<std::vector<std::optional<std::pair<double, double>>>> all_samples;
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();
  for (const DiffAffine& u : pieces) {
    std::vector<std::optional<std::pair<double, double>>> samples;
    for (const Rational& x : xs) {
      const Vector point(kind, {Scalar::finite(x, kind)});
      const double dx = display_rational(x, exp_coords);
      const double dy = display_value(eval(u, point), exp_coords);
      if (std::isfinite(dx) && std::isfinite(dy)) {
        samples.emplace_back(std::in_place, dx, dy);
        y_min = std::min(y_min, dy);
        y_max = std::max(y_max, dy);
      } else {
        samples.emplace_back(std::nullopt);
      }
    }
    all_samples.push_back(std::move(samples));
  }
  if (!(y_min <= y_max)) {
    y_min = 0.0;
    y_max = 1.0;
  }
  const Canvas canvas(display_rational(range.first, exp_coords),
                      display_rational(range.second, exp_coords), y_min, y_max);
  std::string svg = canvas.header();
  for (std::size_t i = 0; i < all_samples.size(); ++i) {
    for (const auto& run : segments(all_samples[i])) {
      svg += canvas.polyline(run, kPalette[i % 4]);
    }
  }
  svg += Canvas::footer();
  return svg;
}

int cmd_plot(const std::optional<Instance>& inst, const std::string& target_name, bool exp_coords,
             std::optional<SemifieldKind> forced, const std::string& output_path,
             std::ostream& out) {
  std::optional<PlotTarget> target;
  if (!target_name.empty()) {
    target = plot_target_from_string(target_name);
  } else if (inst && inst->plot.target) {
    target = inst->plot.target;
  }
  if (!target) {
    throw ParseError("plot needs --target or a \"plot\": {\"target\": ...} field");
  }
  const PlotFormat format = inst ? inst->plot.format : PlotFormat::Csv;
  std::string text;
  switch (*target) {
    case PlotTarget::FunctionGraph:
      text = plot_function_graph(require_instance(inst), exp_coords, format);
      break;
    case PlotTarget::HyperplaneRegion2D:
      text = plot_hyperplane_region(require_instance(inst), exp_coords, format);
      break;
    case PlotTarget::ShadowUpperset2D:
      text = plot_shadow_upperset(require_instance(inst), exp_coords, format);
      break;
    case PlotTarget::DiffAffineGallery:
      text = plot_gallery(inst, forced, exp_coords, format);
      break;
  }
  write_output(text, output_path, out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact convexity toolkit over max-plus and min-plus semifields"};
  app.name("tropicon");
  app.require_subcommand(1);

  std::string input_path;
  std::string output_path;
  bool universal = false;
  int samples = 100;
  std::uint64_t seed = 0x5eedULL;
  std::string target_name;
  bool exp_coords = false;

  CLI::App* sep = app.add_subcommand(
      "separate", "Emit a hyperplane certificate separating the point from the set or module");
  CLI::App* mem = app.add_subcommand("member", "Exact membership test for the point");
  CLI::App* proj =
      app.add_subcommand("project", "Project the point onto the set, module, or epigraph");
  CLI::App* sup =
      app.add_subcommand("support", "Supporting function(s) for probes below an epigraph");
  CLI::App* ver = app.add_subcommand("verify", "Replay and check a separation certificate");
  CLI::App* plot = app.add_subcommand("plot", "Emit CSV or SVG plot data");

  for (CLI::App* cmd : {sep, mem, proj, sup, ver, plot}) {
    cmd->add_option("--output", output_path, "Write to this file instead of standard output");
  }
  for (CLI::App* cmd : {sep, mem, proj, sup, ver}) {
    cmd->add_option("input", input_path, "Instance JSON file")->required();
  }
  plot->add_option("input", input_path, "Instance JSON file (optional for diffaffine-gallery)");
  sep->add_flag("--universal", universal,
                "Closed-form certificate with completed-semifield coefficients");
  ver->add_option("--samples", samples, "Number of random combinations to test (default 100)");
  ver->add_option("--seed", seed, "Sampling seed");
  plot->add_option("--target", target_name,
                   "function-graph | hyperplane-region-2d | shadow-upperset-2d | "
                   "diffaffine-gallery");
  plot->add_flag("--exp-coords", exp_coords,
                 "Render SVG in exponential coordinates (display only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const std::optional<SemifieldKind> forced = kind_from_env();
    std::optional<Instance> inst;
    if (!input_path.empty()) {
      inst = instance_from_json(json_from_text(read_file(input_path)), forced);
    }
    if (sep->parsed()) return cmd_separate(require_instance(inst), universal, output_path, out);
    if (mem->parsed()) return cmd_member(require_instance(inst), output_path, out);
    if (proj->parsed()) return cmd_project(require_instance(inst), output_path, out);
    if (sup->parsed()) return cmd_support(require_instance(inst), output_path, out);
    if (ver->parsed()) return cmd_verify(require_instance(inst), samples, seed, output_path, out);
    if (plot->parsed()) return cmd_plot(inst, target_name, exp_coords, forced, output_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace tropicon
