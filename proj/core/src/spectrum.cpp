#include <nonsin/spectrum.hpp>

#include <cmath>
#include <numbers>

namespace nonsin {

double SinSpectrum::omega(int n) const { return n * std::numbers::pi / L; }

double SinSpectrum::parseval_sum() const {
  double sum = f0 * f0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += 0.5 * (a[i] * a[i] + b[i] * b[i]);
  }
  return sum;
}

namespace {

// Integrates expr(x)*weight(x) over [u, v], split into chunks no longer
// than `max_len`, with the absolute tolerance shared across the whole
// period proportionally to chunk length.
double oscillatory_segment_integral(const Expr& e,
                                    const std::function<double(double)>& weight, double u,
                                    double v, double max_len, double full_len,
                                    const QuadratureOptions& opts) {
  int chunks = static_cast<int>(std::ceil((v - u) / max_len));
  if (chunks < 1) chunks = 1;
  double total = 0.0;
  for (int i = 0; i < chunks; ++i) {
    double lo = u + (v - u) * i / chunks;
    double hi = (i + 1 == chunks) ? v : u + (v - u) * (i + 1) / chunks;
    QuadratureOptions local = opts;
    local.abs_tol = opts.abs_tol * ((hi - lo) / full_len);
    total += integrate([&](double x) { return e.eval(x) * weight(x); }, lo, hi, local);
  }
  return total;
}

}  // namespace

SinSpectrum compute_spectrum(const PiecewiseFunction& f, int N, const QuadratureOptions& opts) {
  if (N < 1) throw PreconditionError("spectrum order must be >= 1");
  const double L = f.half_period();
  const double full = 2.0 * L;

  SinSpectrum s;
  s.L = L;
  s.f0 = f.mean(opts);
  s.a.resize(static_cast<std::size_t>(N));
  s.b.resize(static_cast<std::size_t>(N));

  const auto& bounds = f.boundaries();
  const auto& segs = f.segments();
  for (int n = 1; n <= N; ++n) {
    const double w = n * std::numbers::pi / L;
    const double half_wave = L / n;
    double an = 0.0;
    double bn = 0.0;
    for (std::size_t j = 0; j < segs.size(); ++j) {
      an += oscillatory_segment_integral(
          segs[j], [w](double x) { return std::cos(w * x); }, bounds[j], bounds[j + 1],
          half_wave, full, opts);
      bn += oscillatory_segment_integral(
          segs[j], [w](double x) { return std::sin(w * x); }, bounds[j], bounds[j + 1],
          half_wave, full, opts);
    }
    s.a[static_cast<std::size_t>(n - 1)] = an / L;
    s.b[static_cast<std::size_t>(n - 1)] = bn / L;
  }
  return s;
}

double eval_series(const SinSpectrum& s, double x) {
  double sum = s.f0;
  for (int n = 1; n <= s.order(); ++n) {
    double w = s.omega(n);
    sum += s.a_n(n) * std::cos(w * x) + s.b_n(n) * std::sin(w * x);
  }
  return sum;
}

SinSpectrum differentiate(const SinSpectrum& s, double f_o_at_L) {
  SinSpectrum out;
  out.L = s.L;
  out.f0 = f_o_at_L / s.L;
  out.a.resize(s.a.size());
  out.b.resize(s.b.size());
  for (int n = 1; n <= s.order(); ++n) {
    double w = s.omega(n);
    double sign = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^n
    out.a[static_cast<std::size_t>(n - 1)] = s.b_n(n) * w + 2.0 * sign * f_o_at_L / s.L;
    out.b[static_cast<std::size_t>(n - 1)] = -s.a_n(n) * w;
  }
  return out;
}

IntegrateResult integrate_spectrum(const SinSpectrum& s, double d0) {
  IntegrateResult out;
  out.ramp_mean = s.f0;
  out.spectrum.L = s.L;
  out.spectrum.f0 = d0;
  out.spectrum.a.resize(s.a.size());
  out.spectrum.b.resize(s.b.size());
  for (int n = 1; n <= s.order(); ++n) {
    double w = s.omega(n);
    out.spectrum.a[static_cast<std::size_t>(n - 1)] = -s.b_n(n) / w;
    out.spectrum.b[static_cast<std::size_t>(n - 1)] = s.a_n(n) / w;
  }
  return out;
}

}  // namespace nonsin
