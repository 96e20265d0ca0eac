#ifndef NONSIN_ORTHO_HPP
#define NONSIN_ORTHO_HPP

#include <vector>

#include <nonsin/convert.hpp>

namespace nonsin {

enum class Parity { Even, Odd };

/// Orthogonalized harmonic family Phi_n = sum_k mix[n][k] g_k (unit
/// diagonal, strictly lower mixing), together with the squared norms over
/// the working interval.
struct OrthoBasis {
  Parity parity = Parity::Even;
  int N = 0;
  std::vector<double> mix;       // row-major N x N lower triangle incl. diagonal
  std::vector<double> norms_sq;  // ||Phi_n||^2, n = 1..N
  double lo = -1.0;
  double hi = 1.0;
  Generator generator;

  /// Coefficient of g_j inside Phi_i (1-based, j <= i).
  double mix_at(int i, int j) const {
    return mix[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(N) +
               static_cast<std::size_t>(j - 1)];
  }
};

/// Classical Gram-Schmidt over the dilated family of `gen` on [a, b]
/// (defaults to the full period).  Inner products come from segment-aware
/// quadrature; on the full period they are cross-checked against the
/// truncated Parseval sum, whose truncation tail is bounded through
/// Cauchy-Schwarz by the quadrature-computed norm.  Reports the index at
/// which the family becomes numerically dependent (norm collapse).
OrthoBasis gram_schmidt(const Generator& gen, Parity parity, int N, double a, double b,
                        const QuadratureOptions& opts = {});
OrthoBasis gram_schmidt(const Generator& gen, Parity parity, int N,
                        const QuadratureOptions& opts = {});

/// Euler-formula projection onto the biorthogonal system {1, Phi_n, Psi_n}.
struct OrthoSpectrum {
  double A0 = 0.0;
  std::vector<double> A;  // over the even family
  std::vector<double> B;  // over the odd family
};

/// Either basis pointer may be null when the corresponding family is not
/// wanted; present bases must share the interval.
OrthoSpectrum project(const PiecewiseFunction& f, const OrthoBasis* even,
                      const OrthoBasis* odd, const QuadratureOptions& opts = {});

/// Triangular change of basis back to the plain dilated families:
/// A_n = sum_{i >= n} A0_i mix[i][n].
NonSinSpectrum to_nonorthogonal(const OrthoSpectrum& s, const OrthoBasis* even,
                                const OrthoBasis* odd);

/// A0^2 + (1/2) sum [(A0_n)^2 ||Phi_n||^2/L + (B0_n)^2 ||Psi_n||^2/L],
/// the norm-weighted Parseval sum converging to the mean square of f.
double weighted_parseval_sum(const OrthoSpectrum& s, const OrthoBasis* even,
                             const OrthoBasis* odd);

/// Integral of f*g over [lo, hi] with the breakpoints of both periodic
/// extensions merged, so every quadrature piece is smooth.
double integrate_product(const PiecewiseFunction& f, const PiecewiseFunction& g, double lo,
                         double hi, const QuadratureOptions& opts = {});

}  // namespace nonsin

#endif  // NONSIN_ORTHO_HPP
