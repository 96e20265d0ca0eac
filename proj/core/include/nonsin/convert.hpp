#ifndef NONSIN_CONVERT_HPP
#define NONSIN_CONVERT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nonsin/piecewise.hpp>
#include <nonsin/spectrum.hpp>

namespace nonsin {

/// One generator of a dilated-harmonic family: the waveform (when
/// available), its sinusoidal spectrum, and its mean value.  Harmonic n of
/// the family is x -> g(n x); when the mean is nonzero the basis element
/// is g_n - g0.
struct Generator {
  std::optional<PiecewiseFunction> fn;
  SinSpectrum spec;
  double mean = 0.0;

  /// Spectrum coefficients of the oscillatory part relevant to expansion:
  /// `a` for an even generator, `b` for an odd one.
  const std::vector<double>& even_coeffs() const { return spec.a; }
  const std::vector<double>& odd_coeffs() const { return spec.b; }
};

/// An even and/or odd generator pair over a shared half-period.
class GeneratorBasis {
 public:
  /// Builds from waveforms; spectra are computed by quadrature and the
  /// parity of each generator is verified, not trusted.
  static GeneratorBasis from_piecewise(std::optional<PiecewiseFunction> even_fn,
                                       std::optional<PiecewiseFunction> odd_fn, int N,
                                       const QuadratureOptions& opts = {});

  /// Builds from closed-form coefficient sequences (no waveforms).
  static GeneratorBasis from_coeffs(std::optional<std::vector<double>> even_c,
                                    std::optional<std::vector<double>> odd_d, double L,
                                    double even_mean = 0.0);

  /// Splits one mixed-parity generator into its even and odd parts.
  static GeneratorBasis from_mixed(const PiecewiseFunction& g, int N,
                                   const QuadratureOptions& opts = {});

  /// Wraps generators whose spectra were already computed and validated.
  static GeneratorBasis from_generators(std::optional<Generator> even_gen,
                                        std::optional<Generator> odd_gen, double L);

  bool has_even() const { return even_.has_value(); }
  bool has_odd() const { return odd_.has_value(); }
  const Generator& even() const;
  const Generator& odd() const;
  double half_period() const { return L_; }

 private:
  std::optional<Generator> even_;
  std::optional<Generator> odd_;
  double L_ = 1.0;

  static void check_leading(const std::vector<double>& coeffs, const char* parity);
};

/// Non-sinusoidal spectrum over a generator basis: mean f0, coefficients
/// A_n on the even family g_n - g0 and B_n on the odd family h_n.
struct NonSinSpectrum {
  double f0 = 0.0;
  std::vector<double> A;
  std::vector<double> B;
  GeneratorBasis basis;
};

/// Solves the triangular Dirichlet-convolution system
///   target_m = sum over n | m of  A_n * gen_{m/n}
/// for A, by the divisor-sum recurrence
///   A_1 = target_1 / gen_1,
///   A_m = (target_m - sum_{n|m, n<m} A_n gen_{m/n}) / gen_1.
/// Refuses generators whose leading coefficient is below
/// 1e-12 * max |gen_i| (the solve would amplify noise without bound).
std::vector<double> dirichlet_solve(const std::vector<double>& target,
                                    const std::vector<double>& gen, int N);

/// Dirichlet convolution (A * gen)_m = sum_{n|m} A_n gen_{m/n}, the
/// forward map inverted by dirichlet_solve.
std::vector<double> dirichlet_convolve(const std::vector<double>& A,
                                       const std::vector<double>& gen, int N);

/// Expansion of an even function (cosine spectrum) over the even family.
NonSinSpectrum expand_even(const SinSpectrum& f_even, const GeneratorBasis& basis, int N);

/// Expansion of an odd function (sine spectrum) over the odd family.
NonSinSpectrum expand_odd(const SinSpectrum& f_odd, const GeneratorBasis& basis, int N);

/// General expansion: parity-splits f and expands each component.
NonSinSpectrum expand_general(const PiecewiseFunction& f, const GeneratorBasis& basis, int N,
                              const QuadratureOptions& opts = {});

/// Coefficients over the pair {g_n(x) - g0, g_n(-x) - g0} for a basis
/// derived from one mixed-parity generator: ((A_n+B_n)/2, (A_n-B_n)/2).
std::vector<std::pair<double, double>> combine_general(const NonSinSpectrum& s);

/// Sinusoidal spectrum of the expansion, valid up to the stored order:
/// a_m = sum_{n|m} A_n c_{m/n} and likewise for b from B.
SinSpectrum reconstruct_sin(const NonSinSpectrum& s);

/// The expansion in the opposite direction: coefficients of the generator
/// of `parity` over the family dilated from the function whose spectrum is
/// `f_as_basis`.
std::vector<double> invert_expansion(const GeneratorBasis& basis_as_target,
                                     const SinSpectrum& f_as_basis, int N, bool even_side);

}  // namespace nonsin

#endif  // NONSIN_CONVERT_HPP
