#include "render.hpp"

#include "allee/realroots.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <sstream>

namespace allee::cli {

namespace {

constexpr double kPlotWidth = 640;
constexpr double kHeight = 600;
constexpr double kLeft = 70;
constexpr double kLegendColumn = 110;
constexpr double kLegendRow = 16;
constexpr double kTop = 40;
constexpr double kBottom = 60;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
                                "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39",
                                "#7b4173", "#3182bd", "#e6550d", "#31a354", "#756bb1", "#636363"};

std::string fmt(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double midpoint(const IsolatedRoot& r)
{
  IsolatedRoot t = r.exact() ? r : refine(r, Rational(1, 1 << 14));
  return Rational((t.interval.lo + t.interval.hi) / 2).get_d();
}

// b-roots of every factor over one a-column, per factor.
std::vector<std::vector<double>> column_roots(const BorderPoly& bp, const Rational& a, const ParamBox& box)
{
  std::vector<std::vector<double>> out;
  for (const auto& f : bp.factors) {
    std::vector<double> ys;
    if (f.poly.has_var(Var::b)) {
      const MultiPoly s = f.poly.substitute(Var::a, a);
      if (!s.is_constant()) {
        const UniPoly u = squarefree_part(s.to_uni(Var::b));
        for (const auto& r : isolate(u, Domain::open(box.b_lo, box.b_hi))) ys.push_back(midpoint(r));
      }
    }
    out.push_back(std::move(ys));
  }
  return out;
}

}  // namespace

Rational default_view(const ClassificationReport& r)
{
  Rational hi = 0;
  for (const auto& c : r.cells)
    if (c.total > 3 && c.sample.a > hi) hi = c.sample.a;
  if (hi == 0) return r.box.a_hi;
  return std::min(r.box.a_hi, Rational(hi * Rational(3, 2)));
}

std::string render_svg(const ClassificationReport& r, const RenderOptions& opt)
{
  const ParamBox& box = r.box;
  const Rational a_hi = opt.view_amax ? std::min(*opt.view_amax, box.a_hi) : default_view(r);
  const double ax0 = box.a_lo.get_d(), ax1 = a_hi.get_d();
  const double bx0 = box.b_lo.get_d(), bx1 = box.b_hi.get_d();
  const auto per = r.cells_per_total();
  const std::size_t rows = static_cast<std::size_t>((kHeight - kTop - 30) / kLegendRow);
  const std::size_t legend_cols = std::max<std::size_t>(1, (per.size() + rows - 1) / rows);
  const double width = kLeft + kPlotWidth + 30 + kLegendColumn * static_cast<double>(legend_cols);
  const double pw = kPlotWidth, ph = kHeight - kTop - kBottom;
  auto X = [&](double a) { return kLeft + (a - ax0) / (ax1 - ax0) * pw; };
  auto Y = [&](double b) { return kTop + ph - (b - bx0) / (bx1 - bx0) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << kHeight << "\" viewBox=\"0 0 "
      << width << " " << kHeight << "\" font-family=\"sans-serif\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"15\">Steady-state count regions, n = " << r.n << " ("
      << to_string(r.mode) << ")</text>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double a = ax0 + (ax1 - ax0) * k / 4, b = bx0 + (bx1 - bx0) * k / 4;
    svg << "<text x=\"" << fmt(X(a)) << "\" y=\"" << fmt(kTop + ph + 18) << "\" font-size=\"11\" text-anchor=\"middle\">"
        << fmt(a) << "</text>\n";
    svg << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(Y(b) + 4) << "\" font-size=\"11\" text-anchor=\"end\">"
        << fmt(b) << "</text>\n";
  }
  svg << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 16) << "\" font-size=\"13\">a</text>\n";
  svg << "<text x=\"20\" y=\"" << fmt(kTop + ph / 2) << "\" font-size=\"13\">b</text>\n";

  // Curves.
  const int cols = std::max(2, opt.columns);
  std::vector<Rational> as(static_cast<std::size_t>(cols));
  for (int k = 0; k < cols; ++k) as[static_cast<std::size_t>(k)] = box.a_lo + (a_hi - box.a_lo) * Rational(2 * k + 1, 2 * cols);
  std::vector<std::vector<std::vector<double>>> grid(as.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, opt.jobs));
  for (std::size_t start = 0; start < as.size(); start += jobs) {
    const std::size_t end = std::min(as.size(), start + jobs);
    std::vector<std::future<std::vector<std::vector<double>>>> fut;
    for (std::size_t k = start; k < end; ++k)
      fut.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, column_roots, std::cref(r.bp), std::cref(as[k]), std::cref(box)));
    for (std::size_t k = start; k < end; ++k) grid[k] = fut[k - start].get();
  }
  svg << "<g fill=\"none\" stroke=\"#444\" stroke-width=\"1\">\n";
  for (std::size_t f = 0; f < r.bp.factors.size(); ++f) {
    const MultiPoly& p = r.bp.factors[f].poly;
    if (!p.has_var(Var::b)) {
      if (!p.has_var(Var::a)) continue;
      for (const auto& root : isolate(squarefree_part(p.to_uni(Var::a)), Domain::open(box.a_lo, a_hi)))
        svg << "<line x1=\"" << fmt(X(midpoint(root))) << "\" y1=\"" << fmt(Y(bx0)) << "\" x2=\"" << fmt(X(midpoint(root)))
            << "\" y2=\"" << fmt(Y(bx1)) << "\"/>\n";
      continue;
    }
    // Branches are joined between neighbouring columns with equal root counts.
    std::vector<std::string> lines;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const auto& ys = grid[k][f];
      const bool cont = k > 0 && grid[k - 1][f].size() == ys.size();
      if (!cont) lines.assign(ys.size(), "");
      for (std::size_t j = 0; j < ys.size(); ++j) {
        lines[j] += (lines[j].empty() ? "" : " ") + fmt(X(as[k].get_d())) + "," + fmt(Y(ys[j]));
        const bool last = k + 1 == grid.size() || grid[k + 1][f].size() != ys.size();
        if (last) svg << "<polyline points=\"" << lines[j] << "\"/>\n";
      }
    }
  }
  svg << "</g>\n";

  // Samples.
  const auto totals = r.distinct_totals();
  auto color = [&](long long t) {
    const auto i = static_cast<std::size_t>(std::lower_bound(totals.begin(), totals.end(), t) - totals.begin());
    return kPalette[i % (sizeof kPalette / sizeof *kPalette)];
  };
  svg << "<g font-size=\"8\">\n";
  for (const auto& c : r.cells) {
    if (c.sample.a > a_hi) continue;
    const double x = X(c.sample.a.get_d()), y = Y(c.sample.b.get_d());
    svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"2.5\" fill=\"" << color(c.total) << "\"><title>"
        << c.sample.cell_id << " a=" << c.sample.a.get_str() << " b=" << c.sample.b.get_str() << " total=" << c.total
        << "</title></circle>";
    svg << "<text x=\"" << fmt(x + 3) << "\" y=\"" << fmt(y - 3) << "\" fill=\"" << color(c.total) << "\">" << c.total
        << "</text>\n";
  }
  svg << "</g>\n";

  // Legend.
  const double lx0 = kLeft + kPlotWidth + 20;
  svg << "<text x=\"" << fmt(lx0) << "\" y=\"" << fmt(kTop + 10) << "\" font-size=\"12\">total: cells</text>\n";
  std::size_t idx = 0;
  for (const auto& [t, k] : per) {
    const double lx = lx0 + kLegendColumn * static_cast<double>(idx / rows);
    const double ly = kTop + 10 + kLegendRow * static_cast<double>(idx % rows + 1);
    ++idx;
    svg << "<circle cx=\"" << fmt(lx + 4) << "\" cy=\"" << fmt(ly - 4) << "\" r=\"4\" fill=\"" << color(t) << "\"/>";
    svg << "<text x=\"" << fmt(lx + 14) << "\" y=\"" << fmt(ly) << "\" font-size=\"12\">" << t << ": " << k << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace allee::cli
