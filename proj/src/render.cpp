#include "clothoid/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace clothoid {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 40.0;
constexpr double kChartHeight = 220.0;

struct Viewport {
  double min_x, max_y, scale;

  Point2 map(Point2 p) const {
    return {kMargin + (p.real() - min_x) * scale, kMargin + (max_y - p.imag()) * scale};
  }
};

Viewport fit_viewport(std::span<const Point2> pts) {
  double min_x = pts[0].real(), max_x = min_x, min_y = pts[0].imag(), max_y = min_y;
  for (const auto& p : pts) {
    min_x = std::min(min_x, p.real());
    max_x = std::max(max_x, p.real());
    min_y = std::min(min_y, p.imag());
    max_y = std::max(max_y, p.imag());
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
  return {min_x, max_y, (kCanvas - 2 * kMargin) / extent};
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

void polyline(std::ostringstream& out, std::span<const Point2> pts, bool closed,
              const std::string& attrs) {
  out << "  <" << (closed ? "polygon" : "polyline") << " points=\"";
  for (const auto& p : pts) out << fmt(p.real()) << ',' << fmt(p.imag()) << ' ';
  out << "\" " << attrs << "/>\n";
}

}  // namespace

std::vector<Point2> curvature_comb(std::span<const Point2> points, std::span<const double> kappa,
                                   bool closed, double scale) {
  const std::size_t n = points.size();
  std::vector<Point2> tips(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t prev = j > 0 ? j - 1 : (closed ? n - 1 : 0);
    const std::size_t next = j + 1 < n ? j + 1 : (closed ? 0 : n - 1);
    const Point2 tangent = points[next] - points[prev];
    const double len = std::abs(tangent);
    const Point2 left = len > 0 ? Point2(0.0, 1.0) * tangent / len : Point2(0.0, 0.0);
    tips[j] = points[j] - scale * kappa[j] * left;
  }
  return tips;
}

std::string render_svg(const RunReport& report, const SvgOptions& options) {
  const HermiteSequence& first = report.levels.front();
  const HermiteSequence& last = report.levels.back();
  const auto curve = points_of(last);
  const auto initial = points_of(first);

  std::vector<Point2> all = curve;
  all.insert(all.end(), initial.begin(), initial.end());

  std::vector<Point2> comb;
  const double extent = (kCanvas - 2 * kMargin) / fit_viewport(all).scale;
  const double normal_len = 0.06 * extent;
  const bool have_kappa = report.curvature && report.curvature->kappa.size() == curve.size();
  if (options.show_comb && have_kappa) {
    double scale = options.comb_scale;
    if (scale <= 0.0) {
      double kmax = 0.0;
      for (double k : report.curvature->kappa) kmax = std::max(kmax, std::abs(k));
      scale = kmax > 0.0 ? 0.15 * extent / kmax : 0.0;
    }
    comb = curvature_comb(curve, report.curvature->kappa, last.closed, scale);
    all.insert(all.end(), comb.begin(), comb.end());
  }
  if (options.show_normals) {
    for (const auto& h : first.couples) all.push_back(h.point + normal_len * h.normal());
  }
  const Viewport vp = fit_viewport(all);
  const bool chart = options.show_chart && have_kappa;
  const double height = kCanvas + (chart ? kChartHeight : 0.0);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kCanvas)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(kCanvas) << ' '
      << fmt(height) << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::vector<Point2> mapped(curve.size());
  std::transform(curve.begin(), curve.end(), mapped.begin(), [&](Point2 p) { return vp.map(p); });

  if (!comb.empty()) {
    out << "  <g id=\"comb\" stroke=\"#d08030\" stroke-width=\"0.6\">\n";
    std::vector<Point2> tips(comb.size());
    for (std::size_t j = 0; j < comb.size(); ++j) {
      tips[j] = vp.map(comb[j]);
      out << "    <line x1=\"" << fmt(mapped[j].real()) << "\" y1=\"" << fmt(mapped[j].imag())
          << "\" x2=\"" << fmt(tips[j].real()) << "\" y2=\"" << fmt(tips[j].imag()) << "\"/>\n";
    }
    out << "  </g>\n";
    polyline(out, tips, last.closed, "id=\"comb-envelope\" fill=\"none\" stroke=\"#d08030\"");
  }

  polyline(out, mapped, last.closed,
           "id=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"");

  out << "  <g id=\"initial\" fill=\"#2060c0\" stroke=\"#2060c0\">\n";
  for (const auto& h : first.couples) {
    const Point2 p = vp.map(h.point);
    out << "    <circle cx=\"" << fmt(p.real()) << "\" cy=\"" << fmt(p.imag()) << "\" r=\"4\"/>\n";
    if (options.show_normals) {
      const Point2 q = vp.map(h.point + normal_len * h.normal());
      out << "    <line x1=\"" << fmt(p.real()) << "\" y1=\"" << fmt(p.imag()) << "\" x2=\""
          << fmt(q.real()) << "\" y2=\"" << fmt(q.imag()) << "\" stroke-width=\"1.5\"/>\n";
    }
  }
  out << "  </g>\n";

  if (chart) {
    const auto& s = report.curvature->s;
    const auto& kappa = report.curvature->kappa;
    double kmin = 0.0, kmax = 0.0;
    for (double k : kappa) {
      kmin = std::min(kmin, k);
      kmax = std::max(kmax, k);
    }
    const double span = std::max(kmax - kmin, 1e-12);
    const double top = kCanvas + 10.0;
    const double h = kChartHeight - 30.0;
    const double w = kCanvas - 2 * kMargin;
    auto chart_point = [&](double sj, double kj) {
      return Point2(kMargin + sj * w, top + (kmax - kj) / span * h);
    };
    out << "  <g id=\"kappa-chart\">\n"
        << "    <rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(w)
        << "\" height=\"" << fmt(h) << "\" fill=\"none\" stroke=\"#888\"/>\n";
    const Point2 z0 = chart_point(0.0, 0.0);
    const Point2 z1 = chart_point(1.0, 0.0);
    out << "    <line x1=\"" << fmt(z0.real()) << "\" y1=\"" << fmt(z0.imag()) << "\" x2=\""
        << fmt(z1.real()) << "\" y2=\"" << fmt(z1.imag()) << "\" stroke=\"#ccc\"/>\n";
    std::vector<Point2> graph;
    for (std::size_t j = 0; j < s.size(); ++j) graph.push_back(chart_point(s[j], kappa[j]));
    out << "  ";
    polyline(out, graph, false, "fill=\"none\" stroke=\"#c03030\" stroke-width=\"1\"");
    out << "    <text x=\"" << fmt(kMargin) << "\" y=\"" << fmt(top + h + 16) << "\" font-size=\"12\">"
        << "curvature vs. normalized chord length, kappa in [" << fmt(kmin) << ", " << fmt(kmax)
        << "]</text>\n"
        << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace clothoid
