#include <nonsin/ortho.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace nonsin {

namespace {

void collect_boundary_images(const PiecewiseFunction& f, double lo, double hi,
                             std::vector<double>& cuts) {
  const double period = 2.0 * f.half_period();
  double k0 = std::floor((lo + f.half_period()) / period) - 1.0;
  double k1 = std::floor((hi + f.half_period()) / period) + 1.0;
  for (double k = k0; k <= k1; k += 1.0) {
    for (double b : f.boundaries()) {
      double image = b + k * period;
      if (image > lo && image < hi) cuts.push_back(image);
    }
  }
}

}  // namespace

double integrate_product(const PiecewiseFunction& f, const PiecewiseFunction& g, double lo,
                         double hi, const QuadratureOptions& opts) {
  if (!(hi > lo)) return 0.0;
  std::vector<double> cuts{lo, hi};
  collect_boundary_images(f, lo, hi, cuts);
  collect_boundary_images(g, lo, hi, cuts);
  std::sort(cuts.begin(), cuts.end());
  // Merge rounding-level duplicates so a jump never hides inside a sliver.
  const double tol = 64.0 * std::numeric_limits<double>::epsilon() * (hi - lo);
  std::vector<double> merged;
  merged.reserve(cuts.size());
  for (double c : cuts) {
    if (merged.empty() || c - merged.back() > tol) merged.push_back(c);
  }
  merged.back() = hi;
  cuts = std::move(merged);

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    QuadratureOptions local = opts;
    local.abs_tol = opts.abs_tol * (cuts[i + 1] - cuts[i]) / (hi - lo);
    total += integrate(
        [&](double x) { return f.eval_periodic(x) * g.eval_periodic(x); }, cuts[i],
        cuts[i + 1], local);
  }
  return total;
}

namespace {

// <g_i, g_j> over the full period via the truncated Parseval sum
// L * sum_m c^{(i)}_m c^{(j)}_m with c^{(i)}_m = c_{m/i} for i | m.
double spectral_inner_product(const std::vector<double>& c, double L, int i, int j) {
  const int M = static_cast<int>(c.size());
  long long step = std::lcm(static_cast<long long>(i), static_cast<long long>(j));
  double sum = 0.0;
  for (long long m = step; m / i <= M && m / j <= M; m += step) {
    sum += c[static_cast<std::size_t>(m / i - 1)] * c[static_cast<std::size_t>(m / j - 1)];
  }
  return L * sum;
}

}  // namespace

OrthoBasis gram_schmidt(const Generator& gen, Parity parity, int N, double a, double b,
                        const QuadratureOptions& opts) {
  if (N < 1) throw PreconditionError("orthogonalization order must be >= 1");
  if (!(b > a)) throw PreconditionError("orthogonalization interval is empty");
  if (!gen.fn) {
    throw PreconditionError("orthogonalization needs the generator waveform");
  }
  const double L = gen.fn->half_period();
  const std::vector<double>& coeffs =
      (parity == Parity::Even) ? gen.spec.a : gen.spec.b;

  // Basis elements are the zero-mean harmonics g_n - g0.
  PiecewiseFunction wave = gen.mean == 0.0 ? *gen.fn : gen.fn->add_constant(-gen.mean);

  std::vector<PiecewiseFunction> harmonics;
  harmonics.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) harmonics.push_back(wave.harmonic(n));

  // Gram matrix by quadrature.
  std::vector<double> G(static_cast<std::size_t>(N) * static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i) {
    for (int j = i; j <= N; ++j) {
      double v = integrate_product(harmonics[static_cast<std::size_t>(i - 1)],
                                   harmonics[static_cast<std::size_t>(j - 1)], a, b, opts);
      G[static_cast<std::size_t>(i - 1) * N + (j - 1)] = v;
      G[static_cast<std::size_t>(j - 1) * N + (i - 1)] = v;
    }
  }

  // On the full period, cross-check against the spectral identity.  The
  // Parseval sum is truncated at the stored order; Cauchy-Schwarz bounds
  // the discarded tail by the tail energy, which the quadrature norm
  // supplies exactly.
  bool full_period = (a == -L && b == L);
  if (full_period && !coeffs.empty()) {
    double energy = G[0];  // <g_1, g_1> = integral of the zero-mean wave squared
    double partial = 0.0;
    for (double c : coeffs) partial += c * c;
    double tail = std::max(0.0, energy - L * partial);
    // The discarded modes lie where one factor's index runs past the
    // stored order, so each of the two one-sided tails is bounded by
    // sqrt(tail * energy) via Cauchy-Schwarz.
    double budget_base = 1e-6 * std::max(1.0, energy) + 2.0 * std::sqrt(tail * energy);
    for (int i = 1; i <= N; ++i) {
      for (int j = i; j <= N; ++j) {
        double spectral = spectral_inner_product(coeffs, L, i, j);
        double quad = G[static_cast<std::size_t>(i - 1) * N + (j - 1)];
        double budget = budget_base;
        if (std::abs(spectral - quad) > budget) {
          throw NumericError("spectral and quadrature inner products disagree for (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
  }

  OrthoBasis basis;
  basis.parity = parity;
  basis.N = N;
  basis.lo = a;
  basis.hi = b;
  basis.generator = gen;
  basis.mix.assign(static_cast<std::size_t>(N) * static_cast<std::size_t>(N), 0.0);
  basis.norms_sq.assign(static_cast<std::size_t>(N), 0.0);

  auto mix_row = [&](int n) { return basis.mix.begin() + static_cast<long>(n - 1) * N; };

  for (int n = 1; n <= N; ++n) {
    auto row = mix_row(n);
    row[n - 1] = 1.0;
    double norm = G[static_cast<std::size_t>(n - 1) * N + (n - 1)];
    for (int j = 1; j < n; ++j) {
      // <g_n, Phi_j> via Phi_j's expansion over the g family.
      double dot = 0.0;
      auto prev = mix_row(j);
      for (int k = 1; k <= j; ++k) {
        dot += prev[k - 1] * G[static_cast<std::size_t>(n - 1) * N + (k - 1)];
      }
      double alpha = dot / basis.norms_sq[static_cast<std::size_t>(j - 1)];
      for (int k = 1; k <= j; ++k) row[k - 1] -= alpha * prev[k - 1];
      norm -= alpha * alpha * basis.norms_sq[static_cast<std::size_t>(j - 1)];
    }
    if (!(norm > 1e-10 * G[static_cast<std::size_t>(n - 1) * N + (n - 1)])) {
      throw NumericError("norm collapse at order " + std::to_string(n) +
                         ": family is numerically dependent at this truncation");
    }
    basis.norms_sq[static_cast<std::size_t>(n - 1)] = norm;
  }
  return basis;
}

OrthoBasis gram_schmidt(const Generator& gen, Parity parity, int N,
                        const QuadratureOptions& opts) {
  if (!gen.fn) throw PreconditionError("orthogonalization needs the generator waveform");
  double L = gen.fn->half_period();
  return gram_schmidt(gen, parity, N, -L, L, opts);
}

OrthoSpectrum project(const PiecewiseFunction& f, const OrthoBasis* even,
                      const OrthoBasis* odd, const QuadratureOptions& opts) {
  if (!even && !odd) throw PreconditionError("projection needs at least one basis");
  if (even && odd && (even->lo != odd->lo || even->hi != odd->hi)) {
    throw PreconditionError("even and odd bases must share one interval");
  }
  const double lo = even ? even->lo : odd->lo;
  const double hi = even ? even->hi : odd->hi;

  OrthoSpectrum s;
  s.A0 = f.integrate_product_over([](double) { return 1.0; }, lo, hi, opts) / (hi - lo);

  auto project_family = [&](const OrthoBasis& basis, std::vector<double>& out) {
    PiecewiseFunction wave = basis.generator.mean == 0.0
                                 ? *basis.generator.fn
                                 : basis.generator.fn->add_constant(-basis.generator.mean);
    std::vector<double> raw(static_cast<std::size_t>(basis.N));
    for (int n = 1; n <= basis.N; ++n) {
      raw[static_cast<std::size_t>(n - 1)] =
          integrate_product(f, wave.harmonic(n), lo, hi, opts);
    }
    out.resize(static_cast<std::size_t>(basis.N));
    for (int n = 1; n <= basis.N; ++n) {
      double dot = 0.0;
      for (int k = 1; k <= n; ++k) {
        dot += basis.mix_at(n, k) * raw[static_cast<std::size_t>(k - 1)];
      }
      out[static_cast<std::size_t>(n - 1)] =
          dot / basis.norms_sq[static_cast<std::size_t>(n - 1)];
    }
  };

  if (even) project_family(*even, s.A);
  if (odd) project_family(*odd, s.B);
  return s;
}

NonSinSpectrum to_nonorthogonal(const OrthoSpectrum& s, const OrthoBasis* even,
                                const OrthoBasis* odd) {
  if (!even && !odd) throw PreconditionError("conversion needs at least one basis");

  auto fold = [](const std::vector<double>& coeffs, const OrthoBasis& basis) {
    std::vector<double> out(coeffs.size(), 0.0);
    for (int n = 1; n <= basis.N; ++n) {
      double acc = 0.0;
      for (int i = n; i <= basis.N; ++i) {
        acc += coeffs[static_cast<std::size_t>(i - 1)] * basis.mix_at(i, n);
      }
      out[static_cast<std::size_t>(n - 1)] = acc;
    }
    return out;
  };

  NonSinSpectrum out;
  out.f0 = s.A0;
  double L = even ? even->generator.spec.L : odd->generator.spec.L;
  out.basis = GeneratorBasis::from_generators(
      even ? std::optional<Generator>(even->generator) : std::nullopt,
      odd ? std::optional<Generator>(odd->generator) : std::nullopt, L);
  if (even) out.A = fold(s.A, *even);
  if (odd) out.B = fold(s.B, *odd);
  return out;
}

double weighted_parseval_sum(const OrthoSpectrum& s, const OrthoBasis* even,
                             const OrthoBasis* odd) {
  double sum = s.A0 * s.A0;
  if (even) {
    double L = even->generator.spec.L;
    for (std::size_t i = 0; i < s.A.size(); ++i) {
      sum += 0.5 * s.A[i] * s.A[i] * even->norms_sq[i] / L;
    }
  }
  if (odd) {
    double L = odd->generator.spec.L;
    for (std::size_t i = 0; i < s.B.size(); ++i) {
      sum += 0.5 * s.B[i] * s.B[i] * odd->norms_sq[i] / L;
    }
  }
  return sum;
}

}  // namespace nonsin
