#include <nonsin/convert.hpp>

#include <algorithm>
#include <cmath>

namespace nonsin {

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void require_parity(const SinSpectrum& s, bool even, const char* what) {
  double scale = std::max(max_abs(s.a), max_abs(s.b));
  double tol = 1e-9 * std::max(scale, 1.0);
  if (even) {
    if (max_abs(s.b) > tol) {
      throw PreconditionError(std::string(what) + ": sine coefficients must vanish");
    }
  } else {
    if (max_abs(s.a) > tol || std::abs(s.f0) > tol) {
      throw PreconditionError(std::string(what) +
                              ": cosine coefficients and mean must vanish");
    }
  }
}

}  // namespace

void GeneratorBasis::check_leading(const std::vector<double>& coeffs, const char* parity) {
  if (coeffs.empty()) {
    throw PreconditionError(std::string(parity) + " generator has no coefficients");
  }
  double eps_unit = 1e-12 * max_abs(coeffs);
  if (!(std::abs(coeffs[0]) > eps_unit)) {
    throw PreconditionError(std::string(parity) +
                            " generator has a vanishing leading coefficient");
  }
}

const Generator& GeneratorBasis::even() const {
  if (!even_) throw PreconditionError("basis has no even generator");
  return *even_;
}

const Generator& GeneratorBasis::odd() const {
  if (!odd_) throw PreconditionError("basis has no odd generator");
  return *odd_;
}

GeneratorBasis GeneratorBasis::from_piecewise(std::optional<PiecewiseFunction> even_fn,
                                              std::optional<PiecewiseFunction> odd_fn, int N,
                                              const QuadratureOptions& opts) {
  if (!even_fn && !odd_fn) throw PreconditionError("basis needs at least one generator");
  GeneratorBasis basis;
  basis.L_ = even_fn ? even_fn->half_period() : odd_fn->half_period();
  if (even_fn && odd_fn && even_fn->half_period() != odd_fn->half_period()) {
    throw PreconditionError("generators must share one half-period");
  }
  if (even_fn) {
    Generator g;
    g.spec = compute_spectrum(*even_fn, N, opts);
    g.mean = g.spec.f0;
    require_parity(g.spec, true, "even generator");
    check_leading(g.spec.a, "even");
    g.fn = std::move(even_fn);
    basis.even_ = std::move(g);
  }
  if (odd_fn) {
    Generator h;
    h.spec = compute_spectrum(*odd_fn, N, opts);
    h.mean = 0.0;
    require_parity(h.spec, false, "odd generator");
    check_leading(h.spec.b, "odd");
    h.fn = std::move(odd_fn);
    basis.odd_ = std::move(h);
  }
  return basis;
}

GeneratorBasis GeneratorBasis::from_coeffs(std::optional<std::vector<double>> even_c,
                                           std::optional<std::vector<double>> odd_d, double L,
                                           double even_mean) {
  if (!even_c && !odd_d) throw PreconditionError("basis needs at least one generator");
  GeneratorBasis basis;
  basis.L_ = L;
  if (even_c) {
    check_leading(*even_c, "even");
    Generator g;
    g.spec.L = L;
    g.spec.f0 = even_mean;
    g.spec.a = std::move(*even_c);
    g.spec.b.assign(g.spec.a.size(), 0.0);
    g.mean = even_mean;
    basis.even_ = std::move(g);
  }
  if (odd_d) {
    check_leading(*odd_d, "odd");
    Generator h;
    h.spec.L = L;
    h.spec.f0 = 0.0;
    h.spec.b = std::move(*odd_d);
    h.spec.a.assign(h.spec.b.size(), 0.0);
    basis.odd_ = std::move(h);
  }
  return basis;
}

GeneratorBasis GeneratorBasis::from_mixed(const PiecewiseFunction& g, int N,
                                          const QuadratureOptions& opts) {
  ParitySplit split = g.parity_split(opts);
  return from_piecewise(split.even, split.odd, N, opts);
}

GeneratorBasis GeneratorBasis::from_generators(std::optional<Generator> even_gen,
                                               std::optional<Generator> odd_gen, double L) {
  if (!even_gen && !odd_gen) throw PreconditionError("basis needs at least one generator");
  GeneratorBasis basis;
  basis.L_ = L;
  if (even_gen) {
    check_leading(even_gen->spec.a, "even");
    basis.even_ = std::move(even_gen);
  }
  if (odd_gen) {
    check_leading(odd_gen->spec.b, "odd");
    basis.odd_ = std::move(odd_gen);
  }
  return basis;
}

std::vector<double> dirichlet_solve(const std::vector<double>& target,
                                    const std::vector<double>& gen, int N) {
  if (N < 1) throw PreconditionError("expansion order must be >= 1");
  if (static_cast<int>(target.size()) < N || static_cast<int>(gen.size()) < N) {
    throw PreconditionError("coefficient sequences shorter than the requested order");
  }
  double eps_unit = 1e-12 * max_abs(gen);
  if (!(std::abs(gen[0]) > eps_unit)) {
    throw PreconditionError("leading generator coefficient too small to divide by");
  }

  std::vector<double> A(static_cast<std::size_t>(N));
  A[0] = target[0] / gen[0];
  for (int m = 2; m <= N; ++m) {
    double acc = target[static_cast<std::size_t>(m - 1)];
    for (int n = 1; n < m; ++n) {
      if (m % n == 0) {
        acc -= A[static_cast<std::size_t>(n - 1)] * gen[static_cast<std::size_t>(m / n - 1)];
      }
    }
    A[static_cast<std::size_t>(m - 1)] = acc / gen[0];
  }
  return A;
}

std::vector<double> dirichlet_convolve(const std::vector<double>& A,
                                       const std::vector<double>& gen, int N) {
  std::vector<double> out(static_cast<std::size_t>(N), 0.0);
  for (int m = 1; m <= N; ++m) {
    double acc = 0.0;
    for (int n = 1; n <= m; ++n) {
      if (m % n == 0) {
        acc += A[static_cast<std::size_t>(n - 1)] * gen[static_cast<std::size_t>(m / n - 1)];
      }
    }
    out[static_cast<std::size_t>(m - 1)] = acc;
  }
  return out;
}

NonSinSpectrum expand_even(const SinSpectrum& f_even, const GeneratorBasis& basis, int N) {
  if (!basis.has_even()) throw PreconditionError("expansion needs an even generator");
  require_parity(f_even, true, "even expansion input");
  NonSinSpectrum s;
  s.basis = basis;
  s.f0 = f_even.f0;
  s.A = dirichlet_solve(f_even.a, basis.even().even_coeffs(), N);
  return s;
}

NonSinSpectrum expand_odd(const SinSpectrum& f_odd, const GeneratorBasis& basis, int N) {
  if (!basis.has_odd()) throw PreconditionError("expansion needs an odd generator");
  require_parity(f_odd, false, "odd expansion input");
  NonSinSpectrum s;
  s.basis = basis;
  s.f0 = 0.0;
  s.B = dirichlet_solve(f_odd.b, basis.odd().odd_coeffs(), N);
  return s;
}

NonSinSpectrum expand_general(const PiecewiseFunction& f, const GeneratorBasis& basis, int N,
                              const QuadratureOptions& opts) {
  ParitySplit split = f.parity_split(opts);
  SinSpectrum even_spec = compute_spectrum(split.even, N, opts);
  SinSpectrum odd_spec = compute_spectrum(split.odd, N, opts);
  // Quadrature leaves parity dust on the opposite-parity side; zero it so
  // the parity preconditions see exactly what the split guarantees.
  even_spec.b.assign(even_spec.b.size(), 0.0);
  even_spec.f0 = 0.0;
  odd_spec.a.assign(odd_spec.a.size(), 0.0);
  odd_spec.f0 = 0.0;

  double even_scale = max_abs(even_spec.a);
  double odd_scale = max_abs(odd_spec.b);
  double tol = 1e-9;

  NonSinSpectrum s;
  s.basis = basis;
  s.f0 = split.mean;
  if (even_scale > tol) {
    if (!basis.has_even()) {
      throw PreconditionError("function has an even component but the basis has no even generator");
    }
    s.A = dirichlet_solve(even_spec.a, basis.even().even_coeffs(), N);
  } else if (basis.has_even()) {
    s.A.assign(static_cast<std::size_t>(N), 0.0);
  }
  if (odd_scale > tol) {
    if (!basis.has_odd()) {
      throw PreconditionError("function has an odd component but the basis has no odd generator");
    }
    s.B = dirichlet_solve(odd_spec.b, basis.odd().odd_coeffs(), N);
  } else if (basis.has_odd()) {
    s.B.assign(static_cast<std::size_t>(N), 0.0);
  }
  return s;
}

std::vector<std::pair<double, double>> combine_general(const NonSinSpectrum& s) {
  if (s.A.empty() || s.B.empty()) {
    throw PreconditionError("combine_general needs both even and odd coefficients");
  }
  std::size_t n = std::min(s.A.size(), s.B.size());
  std::vector<std::pair<double, double>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = {0.5 * (s.A[i] + s.B[i]), 0.5 * (s.A[i] - s.B[i])};
  }
  return out;
}

SinSpectrum reconstruct_sin(const NonSinSpectrum& s) {
  SinSpectrum out;
  out.L = s.basis.half_period();
  out.f0 = s.f0;
  int N = static_cast<int>(std::max(s.A.size(), s.B.size()));
  out.a.assign(static_cast<std::size_t>(N), 0.0);
  out.b.assign(static_cast<std::size_t>(N), 0.0);
  if (!s.A.empty()) {
    out.a = dirichlet_convolve(s.A, s.basis.even().even_coeffs(),
                               static_cast<int>(s.A.size()));
    out.a.resize(static_cast<std::size_t>(N), 0.0);
  }
  if (!s.B.empty()) {
    out.b = dirichlet_convolve(s.B, s.basis.odd().odd_coeffs(),
                               static_cast<int>(s.B.size()));
    out.b.resize(static_cast<std::size_t>(N), 0.0);
  }
  return out;
}

std::vector<double> invert_expansion(const GeneratorBasis& basis_as_target,
                                     const SinSpectrum& f_as_basis, int N, bool even_side) {
  if (even_side) {
    if (!basis_as_target.has_even()) {
      throw PreconditionError("inverse expansion needs the even generator");
    }
    return dirichlet_solve(basis_as_target.even().even_coeffs(), f_as_basis.a, N);
  }
  if (!basis_as_target.has_odd()) {
    throw PreconditionError("inverse expansion needs the odd generator");
  }
  return dirichlet_solve(basis_as_target.odd().odd_coeffs(), f_as_basis.b, N);
}

}  // namespace nonsin
