#include <nonsin/analysis.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace nonsin {

namespace {

std::string csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void check_order(const NonSinSpectrum& s, int N) {
  int stored = static_cast<int>(std::max(s.A.size(), s.B.size()));
  if (N > stored) {
    throw PreconditionError("partial-sum order exceeds the stored expansion order");
  }
}

}  // namespace

double eval_partial_sum(const NonSinSpectrum& s, int N, double x, HarmonicMode mode) {
  if (N < 0) throw PreconditionError("partial-sum order must be >= 0");
  check_order(s, N);
  if (N == 0) return s.f0;

  if (mode == HarmonicMode::Series) {
    NonSinSpectrum head = s;
    if (static_cast<int>(head.A.size()) > N) head.A.resize(static_cast<std::size_t>(N));
    if (static_cast<int>(head.B.size()) > N) head.B.resize(static_cast<std::size_t>(N));
    return eval_series(reconstruct_sin(head), x);
  }

  double sum = s.f0;
  if (!s.A.empty()) {
    const Generator& g = s.basis.even();
    if (!g.fn) throw PreconditionError("exact harmonics need the even generator waveform");
    for (int n = 1; n <= N && n <= static_cast<int>(s.A.size()); ++n) {
      double an = s.A[static_cast<std::size_t>(n - 1)];
      if (an == 0.0) continue;
      sum += an * (g.fn->eval_periodic(n * x) - g.mean);
    }
  }
  if (!s.B.empty()) {
    const Generator& h = s.basis.odd();
    if (!h.fn) throw PreconditionError("exact harmonics need the odd generator waveform");
    for (int n = 1; n <= N && n <= static_cast<int>(s.B.size()); ++n) {
      double bn = s.B[static_cast<std::size_t>(n - 1)];
      if (bn == 0.0) continue;
      sum += bn * h.fn->eval_periodic(n * x);
    }
  }
  return sum;
}

namespace {

// Breakpoints of the order-N partial sum, taken from the materialized
// harmonics so the cut abscissae round exactly like the evaluation path.
void collect_harmonic_cuts(const Generator& gen, int N, double L, std::vector<double>& cuts) {
  if (!gen.fn) return;
  for (int n = 1; n <= N; ++n) {
    for (double b : gen.fn->harmonic(n).boundaries()) {
      if (b > -L && b < L) cuts.push_back(b);
    }
  }
}

// Collapses cut points that differ only by rounding; a sliver between two
// images of one breakpoint would otherwise trap a jump inside a
// quadrature piece.
void dedupe_cuts(std::vector<double>& cuts, double span) {
  std::sort(cuts.begin(), cuts.end());
  const double tol = 64.0 * std::numeric_limits<double>::epsilon() * span;
  std::vector<double> merged;
  merged.reserve(cuts.size());
  for (double c : cuts) {
    if (merged.empty() || c - merged.back() > tol) merged.push_back(c);
  }
  cuts = std::move(merged);
}

}  // namespace

ApproximationReport error_report(const PiecewiseFunction& f, const NonSinSpectrum& s,
                                 const std::vector<int>& N_list, int grid, HarmonicMode mode,
                                 const OrthoSpectrum* ortho, const OrthoBasis* ortho_even,
                                 const OrthoBasis* ortho_odd, const QuadratureOptions& opts) {
  if (grid < 512) throw PreconditionError("report grid must have at least 512 points");
  const double L = f.half_period();

  ApproximationReport report;
  report.target = f.to_spec_text();
  report.basis = "";
  report.grid = grid;

  double mean_square = 0.0;
  bool want_parseval = ortho != nullptr && (ortho_even != nullptr || ortho_odd != nullptr);
  if (want_parseval) {
    mean_square =
        f.integrate_against([&](double x) { return f.eval_periodic(x); }, opts) / (2.0 * L);
  }

  for (int N : N_list) {
    ApproximationRow row;
    row.N = N;

    // Merged smooth pieces of f - S_N.
    std::vector<double> cuts{-L, L};
    for (double b : f.boundaries()) {
      if (b > -L && b < L) cuts.push_back(b);
    }
    if (!s.A.empty()) collect_harmonic_cuts(s.basis.even(), N, L, cuts);
    if (!s.B.empty()) collect_harmonic_cuts(s.basis.odd(), N, L, cuts);
    dedupe_cuts(cuts, 2.0 * L);

    double l2sq = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      QuadratureOptions local = opts;
      local.abs_tol = opts.abs_tol * (cuts[i + 1] - cuts[i]) / (2.0 * L);
      l2sq += integrate(
          [&](double x) {
            double d = f.eval_periodic(x) - eval_partial_sum(s, N, x, mode);
            return d * d;
          },
          cuts[i], cuts[i + 1], local);
    }
    row.l2_error = std::sqrt(std::max(0.0, l2sq));

    double sup = 0.0;
    for (int i = 0; i < grid; ++i) {
      double x = -L + (i + 0.5) * (2.0 * L / grid);
      sup = std::max(sup, std::abs(f.eval_periodic(x) - eval_partial_sum(s, N, x, mode)));
    }
    row.sup_error = sup;

    if (want_parseval) {
      OrthoSpectrum head = *ortho;
      if (static_cast<int>(head.A.size()) > N) head.A.resize(static_cast<std::size_t>(N));
      if (static_cast<int>(head.B.size()) > N) head.B.resize(static_cast<std::size_t>(N));
      row.parseval_residual =
          std::abs(mean_square - weighted_parseval_sum(head, ortho_even, ortho_odd));
    }
    report.rows.push_back(row);
  }
  return report;
}

std::vector<ApproximationReport> compare_bases(const PiecewiseFunction& f,
                                               const std::vector<NamedBasis>& bases,
                                               const std::vector<int>& N_list, int grid,
                                               const QuadratureOptions& opts) {
  std::vector<ApproximationReport> reports;
  if (bases.empty()) return reports;
  int maxN = *std::max_element(N_list.begin(), N_list.end());
  for (const NamedBasis& nb : bases) {
    NonSinSpectrum s = expand_general(f, nb.basis, maxN, opts);
    ApproximationReport r = error_report(f, s, N_list, grid, HarmonicMode::Exact, nullptr,
                                         nullptr, nullptr, opts);
    r.basis = nb.name;
    reports.push_back(std::move(r));
  }
  return reports;
}

std::string reports_to_csv(const std::vector<ApproximationReport>& reports) {
  std::string out = "basis,N,l2_error,sup_error,parseval_residual\n";
  for (const ApproximationReport& r : reports) {
    for (const ApproximationRow& row : r.rows) {
      out += r.basis;
      out += ',';
      out += std::to_string(row.N);
      out += ',';
      out += csv_double(row.l2_error);
      out += ',';
      out += csv_double(row.sup_error);
      out += ',';
      if (row.parseval_residual) out += csv_double(*row.parseval_residual);
      out += '\n';
    }
  }
  return out;
}

std::string render_svg(const std::vector<PlotSeries>& series) {
  const int width = 800;
  const int height = 500;
  const double margin = 40.0;

  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool first = true;
  for (const PlotSeries& s : series) {
    for (auto [x, y] : s.points) {
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      } else {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;

  auto sx = [&](double x) {
    return margin + (x - xmin) / (xmax - xmin) * (width - 2.0 * margin);
  };
  auto sy = [&](double y) {
    return height - margin - (y - ymin) / (ymax - ymin) * (height - 2.0 * margin);
  };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return std::string(buf);
  };

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b"};
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" "
      "width=\"800\" height=\"500\">\n"
      "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
  // Axes through zero when visible.
  if (ymin < 0.0 && ymax > 0.0) {
    svg += "<line x1=\"" + num(sx(xmin)) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" +
           num(sx(xmax)) + "\" y2=\"" + num(sy(0)) + "\" stroke=\"#cccccc\"/>\n";
  }
  if (xmin < 0.0 && xmax > 0.0) {
    svg += "<line x1=\"" + num(sx(0)) + "\" y1=\"" + num(sy(ymin)) + "\" x2=\"" +
           num(sx(0)) + "\" y2=\"" + num(sy(ymax)) + "\" stroke=\"#cccccc\"/>\n";
  }
  int color = 0;
  double label_y = 20.0;
  for (const PlotSeries& s : series) {
    std::string points;
    for (auto [x, y] : s.points) {
      points += num(sx(x)) + "," + num(sy(y)) + " ";
    }
    const char* stroke = kColors[color % 6];
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
           "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    svg += "<text x=\"48\" y=\"" + num(label_y) + "\" fill=\"" + stroke +
           "\" font-size=\"14\">" + s.label + "</text>\n";
    label_y += 18.0;
    ++color;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace nonsin
