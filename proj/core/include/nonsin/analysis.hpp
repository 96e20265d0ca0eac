#ifndef NONSIN_ANALYSIS_HPP
#define NONSIN_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nonsin/convert.hpp>
#include <nonsin/ortho.hpp>

namespace nonsin {

enum class HarmonicMode {
  Exact,   // harmonics evaluated on the generator waveform itself
  Series,  // harmonics replaced by their truncated sinusoidal series
};

/// Partial sum f0 + sum_{n<=N} A_n (g_n(x) - g0) + sum_{n<=N} B_n h_n(x).
/// N = 0 yields the mean alone.
double eval_partial_sum(const NonSinSpectrum& s, int N, double x,
                        HarmonicMode mode = HarmonicMode::Exact);

struct ApproximationRow {
  int N = 0;
  double l2_error = 0.0;
  double sup_error = 0.0;
  std::optional<double> parseval_residual;
};

struct ApproximationReport {
  std::string target;
  std::string basis;
  int grid = 4096;
  std::vector<ApproximationRow> rows;
};

/// Per-N L2 error (segment-aware quadrature of (f - S_N)^2 with every
/// harmonic breakpoint merged in), sup error on a half-step-offset grid,
/// and, when the orthogonal projection data is supplied, the Parseval
/// residual at each truncation.
ApproximationReport error_report(const PiecewiseFunction& f, const NonSinSpectrum& s,
                                 const std::vector<int>& N_list, int grid = 4096,
                                 HarmonicMode mode = HarmonicMode::Exact,
                                 const OrthoSpectrum* ortho = nullptr,
                                 const OrthoBasis* ortho_even = nullptr,
                                 const OrthoBasis* ortho_odd = nullptr,
                                 const QuadratureOptions& opts = {});

struct NamedBasis {
  std::string name;
  GeneratorBasis basis;
};

/// Expands f in every basis and collects one report per basis.
std::vector<ApproximationReport> compare_bases(const PiecewiseFunction& f,
                                               const std::vector<NamedBasis>& bases,
                                               const std::vector<int>& N_list,
                                               int grid = 4096,
                                               const QuadratureOptions& opts = {});

/// CSV with the fixed schema: basis,N,l2_error,sup_error,parseval_residual
/// (the last cell empty when no orthogonal data was supplied).
std::string reports_to_csv(const std::vector<ApproximationReport>& reports);

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// Fixed 800x500 polyline plot, no external styling.
std::string render_svg(const std::vector<PlotSeries>& series);

}  // namespace nonsin

#endif  // NONSIN_ANALYSIS_HPP
