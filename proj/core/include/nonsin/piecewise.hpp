#ifndef NONSIN_PIECEWISE_HPP
#define NONSIN_PIECEWISE_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nonsin/expr.hpp>
#include <nonsin/quadrature.hpp>

namespace nonsin {

/// Raw parse of the piecewise bracket notation
///   P[ x1 | e1 | x2 | e2 | ... | x_{m+1} ]  [@xi=v ...]
/// Boundary tokens may be constant expressions (`-pi/2`).  The optional
/// `@xi=v` suffixes pin the function value at boundary i (1-based).
struct PiecewiseSpec {
  std::vector<double> boundaries;          // strictly increasing, m+1 entries
  std::vector<Expr> segments;              // m entries
  std::map<std::size_t, double> endpoint_values;  // 0-based boundary index -> value
};

PiecewiseSpec parse_piecewise(std::string_view text);

struct ParitySplit;

/// A 2L-periodic function given by expression segments on [-L, L].
///
/// Inputs on an arbitrary interval [x1, x_{m+1}] are recentered so the
/// stored domain is exactly [-L, L] with L = (x_{m+1} - x1)/2.  Segment
/// membership is half-open [x_i, x_{i+1}) with the final boundary closed;
/// exactly at a stored boundary abscissa the value is the pinned endpoint
/// value when one was given and the mean of the one-sided limits
/// otherwise.  No tolerance is applied when reducing modulo the period.
///
/// Instances are immutable; every operation returns a new value.
class PiecewiseFunction {
 public:
  static PiecewiseFunction from_spec(const PiecewiseSpec& spec);
  static PiecewiseFunction from_text(std::string_view text);
  /// Single expression on [lo, hi].
  static PiecewiseFunction from_expr(const Expr& e, double lo, double hi);

  double half_period() const { return half_period_; }
  std::size_t segment_count() const { return segments_.size(); }
  const std::vector<double>& boundaries() const { return boundaries_; }
  const std::vector<Expr>& segments() const { return segments_; }

  /// Value of the 2L-periodic extension at any finite x.
  double eval_periodic(double x) const;

  /// The order-n dilation x -> f(n x), materialized on [-L, L] as n
  /// compressed copies (n*m segments).
  PiecewiseFunction harmonic(int n) const;

  /// x -> f(-x); boundaries negated and reversed.
  PiecewiseFunction reflect() const;

  /// Mean value over [-L, L], by segment-wise quadrature.
  double mean(const QuadratureOptions& opts = {}) const;

  /// Splits into mean + even + odd (both components zero-mean except that
  /// the odd part is zero-mean automatically).
  ParitySplit parity_split(const QuadratureOptions& opts = {}) const;

  /// x -> f(x + delta), re-wrapped onto [-L, L].
  PiecewiseFunction translate(double delta) const;

  /// Re-parametrizes to half-period `new_half_period` by substituting
  /// x -> (L/new_half_period) x; the waveform shape is preserved.
  PiecewiseFunction rescale_half_period(double new_half_period) const;

  /// alpha*f + beta*g on the merged boundary set (same half-period).
  static PiecewiseFunction linear_combine(double alpha, const PiecewiseFunction& f,
                                          double beta, const PiecewiseFunction& g);

  /// f + c.
  PiecewiseFunction add_constant(double c) const;

  /// Canonical DSL text; from_text(to_spec_text()) evaluates identically.
  std::string to_spec_text() const;

  /// Integral of f(x)*weight(x) over [-L, L]; the integration runs
  /// segment by segment so the integrand is smooth on each piece.
  double integrate_against(const std::function<double(double)>& weight,
                           const QuadratureOptions& opts = {}) const;

  /// Integral of f*weight over [lo, hi] (also segment-aware, with the
  /// periodic extension applied outside [-L, L]).
  double integrate_product_over(const std::function<double(double)>& weight, double lo,
                                double hi, const QuadratureOptions& opts = {}) const;

 private:
  std::vector<double> boundaries_;
  std::vector<Expr> segments_;
  std::map<std::size_t, double> endpoint_values_;
  double half_period_ = 0.0;

  PiecewiseFunction() = default;
  double segment_value(std::size_t idx, double x) const;
  double boundary_value(std::size_t idx) const;
};

struct ParitySplit {
  double mean = 0.0;
  PiecewiseFunction even;  // zero-mean even component
  PiecewiseFunction odd;
};

}  // namespace nonsin

#endif  // NONSIN_PIECEWISE_HPP
