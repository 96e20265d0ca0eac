#ifndef NONSIN_QUASISIN_HPP
#define NONSIN_QUASISIN_HPP

#include <string>
#include <vector>

#include <nonsin/piecewise.hpp>

namespace nonsin {

/// Expansion kernel: a function on [0, L/2] from which a quasi-sinusoid is
/// assembled out of four reflected/negated copies.  Unlike
/// PiecewiseFunction, a kernel is not recentered; its segments live on
/// [0, L/2] as written.
struct Kernel {
  std::vector<double> boundaries;  // 0 = b_0 < ... < b_k = L/2
  std::vector<Expr> segments;
  double L = 2.0;  // target half-period of the assembled wave

  /// From bracket notation on [0, L/2]; the first boundary must be 0 and
  /// the last one fixes L/2.
  static Kernel from_text(std::string_view text);
  static Kernel from_spec(const PiecewiseSpec& spec);
  static Kernel from_expr(const Expr& e, double L);

  double value_from_right(double t) const;
  double value_from_left(double t) const;
  double front_value() const { return segments.front().eval(0.0); }
  double back_value() const { return segments.back().eval(L / 2.0); }
  /// One-sided numeric derivative at t from the given direction.
  double one_sided_derivative(double t, int direction) const;
};

enum class WaveKind { SineLike, CosineLike };

struct Correction {
  enum class Type {
    Pulse,    // rectangular-pulse quasi-sinusoid, cancels a value jump
    Ramp,     // triangle/tent quasi-sinusoid, cancels a derivative jump
    Residual  // jump left in place (recorded, body unchanged)
  };
  Type type;
  double value;  // applied coefficient, or the leftover jump for Residual
};

/// A sine- or cosine-like wave on [-L, L] assembled from a kernel, plus
/// the record of smoothing corrections applied to it.
struct QuasiSinusoid {
  WaveKind kind;
  PiecewiseFunction body;
  Kernel kernel;
  std::vector<Correction> corrections;

  double half_period() const { return body.half_period(); }
};

/// Odd assembly: branches -g(x+L), -g(-x), g(x), g(L-x); both branches
/// symmetric about x = -L/2 and x = L/2 respectively.
QuasiSinusoid make_sine_like(const Kernel& k);

/// Even assembly: branches -g(x+L), g(-x), g(x), -g(L-x); each half
/// antisymmetric about its midpoint.
QuasiSinusoid make_cosine_like(const Kernel& k);

/// Adds rectangular-pulse quasi-sinusoids for value jumps, then a
/// ramp quasi-sinusoid for the derivative jump the recipe addresses
/// (slope -2[g(L/2)-g(0)]/L for the odd kind, -g'(0) for the even kind).
/// A ramp that fails to reach C1, or that would cancel the wave entirely,
/// is not applied; the leftover jump is recorded as a Residual entry.
QuasiSinusoid smooth(const QuasiSinusoid& q);

/// Quarter-period translation x -> q(x + L/2); flips the kind and verifies
/// the resulting parity numerically (throws PreconditionError otherwise).
QuasiSinusoid shift_quarter(const QuasiSinusoid& q);

/// Substitutes x -> (L/new_half_period) x, keeping the waveform shape.
QuasiSinusoid rescale(const QuasiSinusoid& q, double new_half_period);

/// max over an offset grid of |q(x)+q(-x)| (sine-like) or |q(x)-q(-x)|
/// (cosine-like).
double symmetry_residual(const QuasiSinusoid& q, int grid = 2048);

}  // namespace nonsin

#endif  // NONSIN_QUASISIN_HPP
