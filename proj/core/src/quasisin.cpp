#include <nonsin/quasisin.hpp>

#include <algorithm>
#include <cmath>

namespace nonsin {

namespace {

double body_scale(const PiecewiseFunction& body) {
  double m = 0.0;
  const double L = body.half_period();
  for (int i = 0; i < 64; ++i) {
    double x = -L + (i + 0.5) * (2.0 * L / 64.0);
    m = std::max(m, std::abs(body.eval_periodic(x)));
  }
  return m;
}

bool body_is_zero(const PiecewiseFunction& body, double tol) {
  return body_scale(body) <= tol;
}

// Derivative jump of the periodic extension across x0, one-sided numeric.
double derivative_jump(const PiecewiseFunction& body, double x0) {
  const double h = 1e-6 * body.half_period();
  // One-sided stencil on a grid nudged off the boundary so the midpoint
  // endpoint policy never enters.
  const double nudge = 1e-3 * h;
  auto deriv = [&](int dir) {
    double f0 = body.eval_periodic(x0 + dir * nudge);
    double f1 = body.eval_periodic(x0 + dir * (h + nudge));
    double f2 = body.eval_periodic(x0 + dir * (2.0 * h + nudge));
    return dir * (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
  };
  return deriv(+1) - deriv(-1);
}

PiecewiseFunction assemble(const Kernel& k, WaveKind kind) {
  const double L = k.L;
  const std::size_t m = k.segments.size();

  PiecewiseSpec spec;
  // Branch 1 on (-L, -L/2): -g(x + L).
  for (std::size_t j = 0; j < m; ++j) {
    spec.boundaries.push_back(k.boundaries[j] - L);
    spec.segments.push_back(Expr::negated(k.segments[j].substitute_affine(1.0, L)));
  }
  // Branch 2 on (-L/2, 0): -g(-x) for the odd kind, g(-x) for the even.
  for (std::size_t j = m; j-- > 0;) {
    spec.boundaries.push_back(-k.boundaries[j + 1]);
    Expr mirrored = k.segments[j].substitute_affine(-1.0, 0.0);
    spec.segments.push_back(kind == WaveKind::SineLike ? Expr::negated(mirrored) : mirrored);
  }
  // Branch 3 on (0, L/2): g(x).
  for (std::size_t j = 0; j < m; ++j) {
    spec.boundaries.push_back(k.boundaries[j]);
    spec.segments.push_back(k.segments[j]);
  }
  // Branch 4 on (L/2, L): g(L-x) for the odd kind, -g(L-x) for the even.
  for (std::size_t j = m; j-- > 0;) {
    spec.boundaries.push_back(L - k.boundaries[j + 1]);
    Expr mirrored = k.segments[j].substitute_affine(-1.0, L);
    spec.segments.push_back(kind == WaveKind::SineLike ? mirrored : Expr::negated(mirrored));
  }
  spec.boundaries.push_back(L);
  return PiecewiseFunction::from_spec(spec);
}

QuasiSinusoid make(const Kernel& k, WaveKind kind) {
  QuasiSinusoid q{kind, assemble(k, kind), k, {}};
  double m0 = q.body.mean();
  if (std::abs(m0) > 1e-10 * (1.0 + body_scale(q.body))) {
    q.body = q.body.add_constant(-m0);
  }
  return q;
}

Kernel identity_kernel(double L) {
  return Kernel::from_expr(Expr::variable(), L);
}

Kernel tent_kernel(double L) {
  // x - L/2 vanishes at L/2, so the even assembly has no value jumps and a
  // unit derivative jump at the origin.
  return Kernel::from_expr(Expr::shifted(Expr::variable(), -L / 2.0), L);
}

}  // namespace

Kernel Kernel::from_spec(const PiecewiseSpec& spec) {
  if (spec.boundaries.size() < 2) throw PreconditionError("kernel needs at least one segment");
  if (spec.boundaries.front() != 0.0) {
    throw PreconditionError("kernel domain must start at 0");
  }
  Kernel k;
  k.boundaries = spec.boundaries;
  k.segments = spec.segments;
  k.L = 2.0 * spec.boundaries.back();
  if (!(k.L > 0.0)) throw PreconditionError("kernel domain must extend past 0");
  return k;
}

Kernel Kernel::from_text(std::string_view text) { return from_spec(parse_piecewise(text)); }

Kernel Kernel::from_expr(const Expr& e, double L) {
  if (!(L > 0.0)) throw PreconditionError("kernel half-period must be positive");
  Kernel k;
  k.boundaries = {0.0, L / 2.0};
  k.segments = {e};
  k.L = L;
  return k;
}

double Kernel::value_from_right(double t) const {
  auto it = std::upper_bound(boundaries.begin(), boundaries.end(), t);
  std::size_t idx = static_cast<std::size_t>(it - boundaries.begin());
  if (idx == 0) idx = 1;
  if (idx > segments.size()) idx = segments.size();
  return segments[idx - 1].eval(t);
}

double Kernel::value_from_left(double t) const {
  auto it = std::lower_bound(boundaries.begin(), boundaries.end(), t);
  std::size_t idx = static_cast<std::size_t>(it - boundaries.begin());
  if (idx == 0) idx = 1;
  if (idx > segments.size()) idx = segments.size();
  return segments[idx - 1].eval(t);
}

double Kernel::one_sided_derivative(double t, int direction) const {
  const double h = 1e-6 * L;
  const double nudge = 1e-3 * h;
  auto val = [&](double x) {
    return direction > 0 ? value_from_right(x) : value_from_left(x);
  };
  double f0 = val(t + direction * nudge);
  double f1 = val(t + direction * (h + nudge));
  double f2 = val(t + direction * (2.0 * h + nudge));
  return direction * (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
}

QuasiSinusoid make_sine_like(const Kernel& k) { return make(k, WaveKind::SineLike); }

QuasiSinusoid make_cosine_like(const Kernel& k) { return make(k, WaveKind::CosineLike); }

QuasiSinusoid smooth(const QuasiSinusoid& q) {
  const double L = q.kernel.L;
  Kernel k = q.kernel;
  std::vector<Correction> corrections = q.corrections;
  const double scale = 1.0 + body_scale(q.body);
  const double jump_tol = 1e-9 * scale;

  // Value jumps from discontinuities inside the kernel itself: subtract a
  // step per jump, which is the same as adding a rectangular-pulse
  // quasi-sinusoid assembled from that step.
  for (std::size_t i = 1; i + 1 < k.boundaries.size(); ++i) {
    double p = k.boundaries[i];
    double jump = k.segments[i].eval(p) - k.segments[i - 1].eval(p);
    if (std::abs(jump) > jump_tol) {
      for (std::size_t j = i; j < k.segments.size(); ++j) {
        k.segments[j] = Expr::shifted(k.segments[j], -jump);
      }
      corrections.push_back({Correction::Type::Pulse, -jump});
    }
  }

  // Structural value jumps: at 0 and +-L for the odd kind (size 2 g(0)),
  // at +-L/2 for the even kind (size 2 g(L/2)).  Subtracting the constant
  // from the kernel equals adding that multiple of the unit square pulse.
  double pin = (q.kind == WaveKind::SineLike) ? k.front_value() : k.back_value();
  if (std::abs(pin) > jump_tol) {
    for (Expr& e : k.segments) e = Expr::shifted(e, -pin);
    corrections.push_back({Correction::Type::Pulse, -pin});
  }

  QuasiSinusoid out = make(k, q.kind);
  out.corrections = std::move(corrections);

  // Derivative smoothing.  The odd recipe prescribes the secant slope
  // -2[g(L/2)-g(0)]/L against the triangle wave; the even one the slope
  // -dg/dx(0) against the tent wave.
  double probe = (q.kind == WaveKind::SineLike) ? L / 2.0 : 0.0;
  double djump = derivative_jump(out.body, probe);
  if (std::abs(djump) > 1e-6 * scale) {
    double slope;
    PiecewiseFunction ramp_body =
        (q.kind == WaveKind::SineLike)
            ? make_sine_like(identity_kernel(L)).body
            : make_cosine_like(tent_kernel(L)).body;
    if (q.kind == WaveKind::SineLike) {
      slope = -2.0 * (k.back_value() - k.front_value()) / L;
    } else {
      slope = -k.one_sided_derivative(0.0, +1);
    }
    PiecewiseFunction candidate = PiecewiseFunction::linear_combine(1.0, out.body, slope, ramp_body);
    double residual = derivative_jump(candidate, probe);
    bool reaches_c1 = std::abs(residual) <= 1e-5 * scale;
    if (reaches_c1 && !body_is_zero(candidate, 1e-10 * scale)) {
      out.body = candidate;
      out.corrections.push_back({Correction::Type::Ramp, slope});
    } else {
      out.corrections.push_back({Correction::Type::Residual, djump});
    }
  }
  return out;
}

QuasiSinusoid shift_quarter(const QuasiSinusoid& q) {
  const double L = q.body.half_period();
  QuasiSinusoid out{
      q.kind == WaveKind::SineLike ? WaveKind::CosineLike : WaveKind::SineLike,
      q.body.translate(L / 2.0), q.kernel, q.corrections};
  double residual = symmetry_residual(out, 512);
  if (residual > 1e-8 * (1.0 + body_scale(out.body))) {
    throw PreconditionError("quarter-period shift did not produce the opposite parity");
  }
  return out;
}

QuasiSinusoid rescale(const QuasiSinusoid& q, double new_half_period) {
  QuasiSinusoid out = q;
  double ratio = q.body.half_period() / new_half_period;
  out.body = q.body.rescale_half_period(new_half_period);
  out.kernel.L = q.kernel.L / ratio;
  for (double& b : out.kernel.boundaries) b /= ratio;
  for (Expr& e : out.kernel.segments) e = e.substitute_affine(ratio, 0.0);
  return out;
}

double symmetry_residual(const QuasiSinusoid& q, int grid) {
  const double L = q.body.half_period();
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    double x = (i + 0.5) * L / grid;
    double direct = q.body.eval_periodic(x);
    double mirrored = q.body.eval_periodic(-x);
    double r = (q.kind == WaveKind::SineLike) ? direct + mirrored : direct - mirrored;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace nonsin
