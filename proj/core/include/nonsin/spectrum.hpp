#ifndef NONSIN_SPECTRUM_HPP
#define NONSIN_SPECTRUM_HPP

#include <vector>

#include <nonsin/piecewise.hpp>

namespace nonsin {

/// Truncated sinusoidal spectrum of a 2L-periodic function: mean value f0
/// plus cosine/sine coefficients for the angular frequencies w_n = n*pi/L.
/// Index 0 of `a`/`b` holds the n = 1 coefficient.
struct SinSpectrum {
  double L = 1.0;
  double f0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  int order() const { return static_cast<int>(a.size()); }
  double omega(int n) const;
  /// 1-based accessors; n must be in [1, order()].
  double a_n(int n) const { return a[static_cast<std::size_t>(n - 1)]; }
  double b_n(int n) const { return b[static_cast<std::size_t>(n - 1)]; }

  /// f0^2 + (1/2) sum (a_n^2 + b_n^2); converges to the mean square of f.
  double parseval_sum() const;
};

/// Euler-formula coefficients of `f` up to order N by segment-wise
/// quadrature.  Each segment is pre-split so that no quadrature interval
/// spans more than half an oscillation period of the trigonometric weight.
SinSpectrum compute_spectrum(const PiecewiseFunction& f, int N,
                             const QuadratureOptions& opts = {});

/// Truncated series value f0 + sum a_n cos(w_n x) + b_n sin(w_n x).
double eval_series(const SinSpectrum& s, double x);

/// Termwise derivative with the linear-ramp correction.  `f_o_at_L` is the
/// value of the odd component of f at x = L; the odd part minus the ramp
/// x*f_o(L)/L differentiates termwise, which shifts the correction
/// 2*(-1)^n*f_o(L)/L onto the cosine coefficients and contributes the
/// constant f_o(L)/L.
SinSpectrum differentiate(const SinSpectrum& s, double f_o_at_L);

struct IntegrateResult {
  double ramp_mean = 0.0;  // coefficient of x in the antiderivative
  SinSpectrum spectrum;    // oscillatory part, mean set by the caller's d0
};

/// Termwise antiderivative d0 + f0*x + sum [a_n sin - b_n cos]/w_n.
IntegrateResult integrate_spectrum(const SinSpectrum& s, double d0);

}  // namespace nonsin

#endif  // NONSIN_SPECTRUM_HPP
