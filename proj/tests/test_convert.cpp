#include <doctest.h>

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include <nonsin/convert.hpp>

using namespace nonsin;

namespace {

constexpr double kPi = std::numbers::pi;

// Closed-form spectra used across the golden tables.
std::vector<double> parabola_a(int N) {
  std::vector<double> a(N);
  for (int n = 1; n <= N; ++n) a[n - 1] = 4.0 * ((n % 2 == 0) ? 1.0 : -1.0) / (n * n * kPi * kPi);
  return a;
}

// Half-amplitude rectangular pulse: c_q = (2/(q pi)) (-1)^((q-1)/2), q odd.
std::vector<double> rect_c(int N) {
  std::vector<double> c(N, 0.0);
  for (int q = 1; q <= N; q += 2) {
    double sign = ((q - 1) / 2 % 2 == 0) ? 1.0 : -1.0;
    c[q - 1] = 2.0 * sign / (q * kPi);
  }
  return c;
}

// Half-amplitude triangle |x| - 1/2: c_q = -4/(q^2 pi^2), q odd.
std::vector<double> triangle_c(int N) {
  std::vector<double> c(N, 0.0);
  for (int q = 1; q <= N; q += 2) c[q - 1] = -4.0 / (q * q * kPi * kPi);
  return c;
}

std::vector<double> odd_square_b(int N) {
  std::vector<double> b(N, 0.0);
  for (int q = 1; q <= N; q += 2) b[q - 1] = 4.0 / (q * kPi);
  return b;
}

std::vector<double> sawtooth_d(int N) {
  std::vector<double> d(N);
  for (int n = 1; n <= N; ++n) d[n - 1] = 2.0 * ((n % 2 == 1) ? 1.0 : -1.0) / (n * kPi);
  return d;
}

const std::vector<double> kSquarePulseTable = {
    -2.0 / kPi,          1.0 / (2.0 * kPi),   -8.0 / (9.0 * kPi),  1.0 / (8.0 * kPi),
    8.0 / (25.0 * kPi),  2.0 / (9.0 * kPi),   -16.0 / (49.0 * kPi), 1.0 / (32.0 * kPi),
    -8.0 / (81.0 * kPi), -2.0 / (25.0 * kPi), -24.0 / (121.0 * kPi), 1.0 / (18.0 * kPi)};

}  // namespace

TEST_CASE("triangular solve reproduces the square-pulse golden table") {
  std::vector<double> A = dirichlet_solve(parabola_a(12), rect_c(12), 12);
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(A[n - 1] == doctest::Approx(kSquarePulseTable[n - 1]).epsilon(1e-13));
  }
}

TEST_CASE("triangular solve reproduces the triangle-wave golden table") {
  std::vector<double> A = dirichlet_solve(parabola_a(64), triangle_c(64), 64);
  CHECK(A[0] == doctest::Approx(1.0).epsilon(1e-13));
  for (int k = 1; k <= 6; ++k) {
    CHECK(A[(1 << k) - 1] == doctest::Approx(-std::pow(4.0, -k)).epsilon(1e-12));
  }
  for (int n = 2; n <= 64; ++n) {
    if ((n & (n - 1)) != 0) CHECK(std::abs(A[n - 1]) < 1e-13);
  }
}

TEST_CASE("unit-impulse target gives the closed-form leading coefficients") {
  // Target (1, 0, 0, ...) over an arbitrary generator.
  std::vector<double> c = {0.8, -0.3, 0.11, 0.07, -0.55, 0.21, 0.09, -0.04};
  std::vector<double> unit(8, 0.0);
  unit[0] = 1.0;
  std::vector<double> A = dirichlet_solve(unit, c, 8);
  double c1 = c[0], c2 = c[1], c3 = c[2], c4 = c[3], c5 = c[4], c6 = c[5], c7 = c[6];
  CHECK(A[0] == doctest::Approx(1.0 / c1).epsilon(1e-14));
  CHECK(A[1] == doctest::Approx(-c2 / (c1 * c1)).epsilon(1e-14));
  CHECK(A[2] == doctest::Approx(-c3 / (c1 * c1)).epsilon(1e-14));
  CHECK(A[3] == doctest::Approx((-c1 * c4 + c2 * c2) / (c1 * c1 * c1)).epsilon(1e-14));
  CHECK(A[4] == doctest::Approx(-c5 / (c1 * c1)).epsilon(1e-14));
  CHECK(A[5] == doctest::Approx((-c1 * c6 + 2.0 * c2 * c3) / (c1 * c1 * c1)).epsilon(1e-14));
  CHECK(A[6] == doctest::Approx(-c7 / (c1 * c1)).epsilon(1e-14));
}

TEST_CASE("square wave over the sawtooth family: system-consistent values") {
  std::vector<double> B = dirichlet_solve(odd_square_b(16), sawtooth_d(16), 16);
  CHECK(B[0] == doctest::Approx(2.0).epsilon(1e-13));
  for (int k = 1; k <= 4; ++k) {
    CHECK(B[(1 << k) - 1] == doctest::Approx(1.0).epsilon(1e-13));
  }
  for (int n = 2; n <= 16; ++n) {
    if ((n & (n - 1)) != 0) CHECK(std::abs(B[n - 1]) < 1e-13);
  }
  // Published table variants at n = 8, 10, 15 contradict the defining
  // triangular system; the system values win.
  CHECK(B[7] != doctest::Approx(0.5));
  CHECK(B[9] != doctest::Approx(0.2));
  CHECK(B[14] != doctest::Approx(-2.0 / 15.0));
}

TEST_CASE("singular leading coefficient is refused") {
  std::vector<double> gen = {0.0, 1.0, 0.5, 0.2};
  std::vector<double> target = {1.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(dirichlet_solve(target, gen, 4), PreconditionError);
  std::vector<double> tiny = {1e-25, 1.0, 0.5, 0.2};
  CHECK_THROWS_AS(dirichlet_solve(target, tiny, 4), PreconditionError);
  std::vector<double> shorter = {1.0, 2.0};
  CHECK_THROWS_AS(dirichlet_solve(target, shorter, 4), PreconditionError);
}

TEST_CASE("even expansion wiring: x^2 over the rectangular pulses") {
  PiecewiseFunction x2 = PiecewiseFunction::from_text("P[-1|x^2|1]");
  PiecewiseFunction rect = PiecewiseFunction::from_text("P[-1|-1/2|-1/2|1/2|1/2|-1/2|1]");
  GeneratorBasis basis = GeneratorBasis::from_piecewise(rect, std::nullopt, 12);
  NonSinSpectrum s = expand_even(compute_spectrum(x2, 12), basis, 12);
  CHECK(s.f0 == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
  for (int n = 1; n <= 12; ++n) {
    CHECK(s.A[n - 1] == doctest::Approx(kSquarePulseTable[n - 1]).epsilon(1e-8));
  }

  // Self-expansion is the unit impulse.
  NonSinSpectrum self = expand_even(basis.even().spec, basis, 12);
  CHECK(self.A[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int n = 2; n <= 12; ++n) CHECK(std::abs(self.A[n - 1]) < 1e-12);

  // Parity violation is rejected.
  PiecewiseFunction saw = PiecewiseFunction::from_text("P[-1|x|1]");
  CHECK_THROWS_AS(expand_even(compute_spectrum(saw, 12), basis, 12), PreconditionError);
  CHECK_THROWS_AS(expand_odd(compute_spectrum(saw, 12), basis, 12), PreconditionError);
}

TEST_CASE("odd expansion examples over the pi-domain families") {
  // sine over the odd rectangular pulses on [-pi, pi]
  PiecewiseFunction sine = PiecewiseFunction::from_text("P[-pi|sin(x)|pi]");
  PiecewiseFunction pulse = PiecewiseFunction::from_text("P[-pi|-1|0|1|pi]");
  GeneratorBasis pb = GeneratorBasis::from_piecewise(std::nullopt, pulse, 9);
  NonSinSpectrum s = expand_odd(compute_spectrum(sine, 9), pb, 9);
  CHECK(s.B[0] == doctest::Approx(kPi / 4.0).epsilon(1e-10));
  CHECK(std::abs(s.B[1]) < 1e-10);
  CHECK(s.B[2] == doctest::Approx(-kPi / 12.0).epsilon(1e-10));
  CHECK(s.B[4] == doctest::Approx(-kPi / 20.0).epsilon(1e-10));
  CHECK(s.B[6] == doctest::Approx(-kPi / 28.0).epsilon(1e-10));
  CHECK(std::abs(s.B[8]) < 1e-10);

  // sine over the odd triangle family
  PiecewiseFunction tri = PiecewiseFunction::from_text("P[-pi|-x-pi|-pi/2|x|pi/2|pi-x|pi]");
  GeneratorBasis tb = GeneratorBasis::from_piecewise(std::nullopt, tri, 9);
  NonSinSpectrum t = expand_odd(compute_spectrum(sine, 9), tb, 9);
  CHECK(t.B[0] == doctest::Approx(kPi / 4.0).epsilon(1e-10));
  CHECK(t.B[2] == doctest::Approx(kPi / 36.0).epsilon(1e-10));
  CHECK(t.B[4] == doctest::Approx(-kPi / 100.0).epsilon(1e-10));
  CHECK(t.B[6] == doctest::Approx(kPi / 196.0).epsilon(1e-10));
  CHECK(std::abs(t.B[8]) < 1e-10);

  // odd square wave over the sinh family, cross-checked densely
  PiecewiseFunction sq = PiecewiseFunction::from_text("P[-1|-1|0|1|1]");
  PiecewiseFunction sh = PiecewiseFunction::from_text("P[-1|sinh(x)|1]");
  GeneratorBasis sb = GeneratorBasis::from_piecewise(std::nullopt, sh, 12);
  NonSinSpectrum e = expand_odd(compute_spectrum(sq, 12), sb, 12);
  std::vector<double> d(12);
  for (int n = 1; n <= 12; ++n) {
    d[n - 1] = 2.0 * n * kPi * ((n % 2) ? 1.0 : -1.0) * std::sinh(1.0) /
               (1.0 + n * n * kPi * kPi);
  }
  std::vector<double> dense = dirichlet_solve(odd_square_b(12), d, 12);
  for (int n = 1; n <= 12; ++n) {
    CHECK(e.B[n - 1] == doctest::Approx(dense[n - 1]).epsilon(1e-8));
  }
}

TEST_CASE("general expansion over the exponential basis") {
  PiecewiseFunction f = PiecewiseFunction::from_text("P[-1|-2|-1/2|0|0|2|1/2|0|1]");
  GeneratorBasis basis = GeneratorBasis::from_piecewise(
      PiecewiseFunction::from_text("P[-1|cosh(x)|1]"),
      PiecewiseFunction::from_text("P[-1|sinh(x)|1]"), 8);
  NonSinSpectrum s = expand_general(f, basis, 8);
  const double K1 = -2.0 * (1.0 + kPi * kPi) / (kPi * std::sinh(1.0));
  const double K2 = -K1 / kPi;
  CHECK(std::abs(s.f0) < 1e-10);
  CHECK(s.A[0] == doctest::Approx(K1).epsilon(1e-9));
  CHECK(s.A[1] == doctest::Approx(K1 * (1.0 + kPi * kPi) / (1.0 + 4.0 * kPi * kPi)).epsilon(1e-9));
  CHECK(s.B[0] == doctest::Approx(K2).epsilon(1e-9));
  CHECK(s.B[1] ==
        doctest::Approx(2.0 * K2 * (1.0 + kPi * kPi) / (1.0 + 4.0 * kPi * kPi)).epsilon(1e-9));

  // A purely even target in the two-parity basis leaves B identically zero.
  PiecewiseFunction x2 = PiecewiseFunction::from_text("P[-1|x^2|1]");
  NonSinSpectrum even_only = expand_general(x2, basis, 8);
  REQUIRE(even_only.B.size() == 8);
  for (double b : even_only.B) CHECK(b == 0.0);

  // The odd generator plus a constant is recovered as a unit impulse.
  PiecewiseFunction shifted =
      PiecewiseFunction::from_text("P[-1|sinh(x)+2|1]");
  NonSinSpectrum self = expand_general(shifted, basis, 8);
  CHECK(self.f0 == doctest::Approx(2.0).epsilon(1e-10));
  for (double a : self.A) CHECK(std::abs(a) < 1e-9);
  CHECK(self.B[0] == doctest::Approx(1.0).epsilon(1e-9));
  for (int n = 2; n <= 8; ++n) CHECK(std::abs(self.B[n - 1]) < 1e-9);

  // A component with no generator of its parity is an error.
  GeneratorBasis even_only_basis = GeneratorBasis::from_piecewise(
      PiecewiseFunction::from_text("P[-1|cosh(x)|1]"), std::nullopt, 8);
  CHECK_THROWS_AS(expand_general(f, even_only_basis, 8), PreconditionError);
}

TEST_CASE("combine_general pairs the direct and reflected families") {
  GeneratorBasis basis = GeneratorBasis::from_coeffs(
      std::vector<double>{1.0, 0.2, 0.05}, std::vector<double>{0.7, -0.1, 0.02}, 1.0);
  NonSinSpectrum s;
  s.basis = basis;
  s.f0 = 0.0;

  s.A = {0.4, 0.2, -0.6};
  s.B = {0.4, 0.2, -0.6};
  auto equal_case = combine_general(s);
  for (auto [fwd, refl] : equal_case) {
    (void)fwd;
    CHECK(refl == 0.0);
  }

  s.A = {1.0, 0.0, 0.0};
  s.B = {0.0, 0.0, 0.0};
  auto half_case = combine_general(s);
  CHECK(half_case[0].first == 0.5);
  CHECK(half_case[0].second == 0.5);

  s.A = {0.3, -0.2, 0.9};
  s.B = {0.1, 0.4, -0.5};
  auto general_case = combine_general(s);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(general_case[i].first == doctest::Approx(0.5 * (s.A[i] + s.B[i])));
    CHECK(general_case[i].second == doctest::Approx(0.5 * (s.A[i] - s.B[i])));
  }

  s.B.clear();
  CHECK_THROWS_AS(combine_general(s), PreconditionError);
}

TEST_CASE("reconstruction inverts the expansion") {
  GeneratorBasis basis =
      GeneratorBasis::from_coeffs(rect_c(16), std::nullopt, 1.0);
  SinSpectrum f;
  f.L = 1.0;
  f.f0 = 0.25;
  f.a = parabola_a(16);
  f.b.assign(16, 0.0);
  NonSinSpectrum s = expand_even(f, basis, 16);
  SinSpectrum back = reconstruct_sin(s);
  CHECK(back.f0 == f.f0);
  for (int n = 1; n <= 16; ++n) {
    CHECK(back.a_n(n) == doctest::Approx(f.a_n(n)).epsilon(1e-13));
  }

  // A = unit impulse reconstructs the generator's own spectrum.
  NonSinSpectrum unit;
  unit.basis = basis;
  unit.f0 = 0.0;
  unit.A.assign(16, 0.0);
  unit.A[0] = 1.0;
  SinSpectrum gen = reconstruct_sin(unit);
  std::vector<double> c = rect_c(16);
  for (int n = 1; n <= 16; ++n) CHECK(gen.a_n(n) == doctest::Approx(c[n - 1]));

  // Triangle-basis coefficients of x^2 reconstruct the closed form.
  GeneratorBasis tb = GeneratorBasis::from_coeffs(triangle_c(16), std::nullopt, 1.0);
  SinSpectrum fx;
  fx.L = 1.0;
  fx.f0 = 1.0 / 3.0;
  fx.a = parabola_a(16);
  fx.b.assign(16, 0.0);
  SinSpectrum rec = reconstruct_sin(expand_even(fx, tb, 16));
  for (int n = 1; n <= 16; ++n) {
    CHECK(rec.a_n(n) == doctest::Approx(parabola_a(16)[n - 1]).epsilon(1e-13));
  }
}

TEST_CASE("the inverse expansion direction") {
  // Sawtooth over the odd-square family: 1/2 at n=1, -2^-(k+1) at n=2^k.
  GeneratorBasis saw_basis =
      GeneratorBasis::from_coeffs(std::nullopt, sawtooth_d(16), 1.0);
  SinSpectrum square_family;
  square_family.L = 1.0;
  square_family.b = odd_square_b(16);
  square_family.a.assign(16, 0.0);
  std::vector<double> Bp = invert_expansion(saw_basis, square_family, 16, false);
  CHECK(Bp[0] == doctest::Approx(0.5).epsilon(1e-13));
  for (int k = 1; k <= 4; ++k) {
    CHECK(Bp[(1 << k) - 1] ==
          doctest::Approx(-std::pow(2.0, -(k + 1))).epsilon(1e-12));
  }
  for (int n = 2; n <= 16; ++n) {
    if ((n & (n - 1)) != 0) CHECK(std::abs(Bp[n - 1]) < 1e-13);
  }

  CHECK_THROWS_AS(invert_expansion(saw_basis, square_family, 16, true), PreconditionError);
}

TEST_CASE("the sinusoidal family is the identity special case") {
  std::vector<double> unit_gen(12, 0.0);
  unit_gen[0] = 1.0;
  std::vector<double> target = parabola_a(12);
  std::vector<double> A = dirichlet_solve(target, unit_gen, 12);
  for (int n = 1; n <= 12; ++n) CHECK(A[n - 1] == target[n - 1]);
}

TEST_CASE("generator basis validation") {
  // Mixed-parity function is rejected as an even generator.
  PiecewiseFunction mixed = PiecewiseFunction::from_text("P[-1|exp(x)|1]");
  CHECK_THROWS_AS(GeneratorBasis::from_piecewise(mixed, std::nullopt, 8), PreconditionError);
  CHECK_THROWS_AS(GeneratorBasis::from_piecewise(std::nullopt, mixed, 8), PreconditionError);
  CHECK_THROWS_AS(GeneratorBasis::from_piecewise(std::nullopt, std::nullopt, 8),
                  PreconditionError);

  // from_mixed splits it instead.
  GeneratorBasis split = GeneratorBasis::from_mixed(mixed, 8);
  CHECK(split.has_even());
  CHECK(split.has_odd());
  // The split produces the zero-mean even part (cosh x - sinh 1).
  CHECK(std::abs(split.even().mean) < 1e-10);
  CHECK(split.even().spec.a_n(1) ==
        doctest::Approx(-2.0 * std::sinh(1.0) / (1.0 + kPi * kPi)).epsilon(1e-9));
  CHECK(split.odd().spec.b_n(1) ==
        doctest::Approx(2.0 * kPi * std::sinh(1.0) / (1.0 + kPi * kPi)).epsilon(1e-9));

  // Mismatched half-periods are rejected.
  CHECK_THROWS_AS(
      GeneratorBasis::from_piecewise(PiecewiseFunction::from_text("P[-1|x^2|1]"),
                                     PiecewiseFunction::from_text("P[-2|x|2]"), 8),
      PreconditionError);
}

namespace {

// Hand-expanded low-order solutions of the triangular system, transcribed
// with the two sign/index corrections the system itself forces (the
// printed c3^3 in the eighth line reads c2^3; the second inverse line
// reads (c2 a1 - c1 a2)/a1^2).
std::vector<double> hand_expanded_12(const std::vector<double>& a,
                                     const std::vector<double>& c) {
  double a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a5 = a[4], a6 = a[5], a7 = a[6],
         a8 = a[7], a9 = a[8], a10 = a[9], a11 = a[10], a12 = a[11];
  double c1 = c[0], c2 = c[1], c3 = c[2], c4 = c[3], c5 = c[4], c6 = c[5], c7 = c[6],
         c8 = c[7], c9 = c[8], c10 = c[9], c11 = c[10], c12 = c[11];
  double K1 = a1 / c1;
  std::vector<double> A(12);
  A[0] = K1;
  A[1] = K1 * (a2 / a1 - c2 / c1);
  A[2] = K1 * (a3 / a1 - c3 / c1);
  A[3] = K1 * (a4 / a1 - a2 * c2 / (a1 * c1) - c4 / c1 + c2 * c2 / (c1 * c1));
  A[4] = K1 * (a5 / a1 - c5 / c1);
  A[5] = K1 * (a6 / a1 - a2 * c3 / (a1 * c1) - a3 * c2 / (a1 * c1) - c6 / c1 +
               2.0 * c2 * c3 / (c1 * c1));
  A[6] = K1 * (a7 / a1 - c7 / c1);
  A[7] = K1 * (a8 / a1 - a2 * c4 / (a1 * c1) - a4 * c2 / (a1 * c1) - c8 / c1 +
               2.0 * c2 * c4 / (c1 * c1) + a2 * c2 * c2 / (a1 * c1 * c1) -
               c2 * c2 * c2 / (c1 * c1 * c1));
  A[8] = K1 * (a9 / a1 - a3 * c3 / (a1 * c1) - c9 / c1 + c3 * c3 / (c1 * c1));
  A[9] = K1 * (a10 / a1 - a2 * c5 / (a1 * c1) - a5 * c2 / (a1 * c1) - c10 / c1 +
               2.0 * c2 * c5 / (c1 * c1));
  A[10] = K1 * (a11 / a1 - c11 / c1);
  A[11] = K1 * (a12 / a1 - a2 * c6 / (a1 * c1) - a3 * c4 / (a1 * c1) -
                a4 * c3 / (a1 * c1) - a6 * c2 / (a1 * c1) - c12 / c1 +
                2.0 * (c3 * c4 + c2 * c6) / (c1 * c1) +
                2.0 * a2 * c2 * c3 / (a1 * c1 * c1) + a3 * c2 * c2 / (a1 * c1 * c1) -
                3.0 * c2 * c2 * c3 / (c1 * c1 * c1));
  return A;
}

std::vector<double> hand_expanded_inverse_5(const std::vector<double>& c,
                                            const std::vector<double>& a) {
  double a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a5 = a[4];
  double c1 = c[0], c2 = c[1], c3 = c[2], c4 = c[3], c5 = c[4];
  std::vector<double> Ap(5);
  Ap[0] = c1 / a1;
  Ap[1] = (c2 * a1 - c1 * a2) / (a1 * a1);
  Ap[2] = (c3 * a1 - c1 * a3) / (a1 * a1);
  Ap[3] = (c4 * a1 - c2 * a2 - c1 * a4) / (a1 * a1) + c1 * a2 * a2 / (a1 * a1 * a1);
  Ap[4] = (c5 * a1 - c1 * a5) / (a1 * a1);
  return Ap;
}

}  // namespace

TEST_CASE("recurrence matches the hand-expanded low-order formulas") {
  std::mt19937_64 rng(271828);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> lead(0.5, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(12), c(12);
    a[0] = lead(rng) * (unit(rng) < 0 ? -1.0 : 1.0);
    c[0] = lead(rng) * (unit(rng) < 0 ? -1.0 : 1.0);
    for (int i = 1; i < 12; ++i) {
      a[i] = unit(rng);
      c[i] = unit(rng);
    }
    std::vector<double> solved = dirichlet_solve(a, c, 12);
    std::vector<double> expanded = hand_expanded_12(a, c);
    double scale = 1.0;
    for (double v : expanded) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < 12; ++i) {
      CAPTURE(i);
      CHECK(std::abs(solved[i] - expanded[i]) <= 1e-12 * scale);
    }

    // The same algebra drives the odd-side system; run it on an
    // independent draw standing in for (b, d).
    std::vector<double> inverse = dirichlet_solve(c, a, 5);
    std::vector<double> inv_expanded = hand_expanded_inverse_5(c, a);
    for (int i = 0; i < 5; ++i) {
      CAPTURE(i);
      CHECK(std::abs(inverse[i] - inv_expanded[i]) <=
            1e-12 * std::max(1.0, std::abs(inv_expanded[i])));
    }
  }
}

TEST_CASE("inverse expansion through the named API: the quasi-cosinusoid tables") {
  // The square-pulse table pairs with the negated half-amplitude wave,
  // the triangle table with the positive one.
  auto wave = PiecewiseFunction::from_text(
      "P[-1|(1-4*(x+1)^2)/2|-1/2|(4*x^2-1)/2|1/2|(1-4*(x-1)^2)/2|1]");
  SinSpectrum neg_half = compute_spectrum(wave, 12);
  GeneratorBasis rect_basis = GeneratorBasis::from_piecewise(
      PiecewiseFunction::from_text("P[-1|-1/2|-1/2|1/2|1/2|-1/2|1]"), std::nullopt, 12);
  std::vector<double> inv_rect = invert_expansion(rect_basis, neg_half, 12, true);
  CHECK(inv_rect[0] == doctest::Approx(-kPi * kPi / 8.0).epsilon(1e-9));
  CHECK(inv_rect[2] == doctest::Approx(kPi * kPi / 27.0).epsilon(1e-9));
  CHECK(inv_rect[4] == doctest::Approx(-3.0 * kPi * kPi / 125.0).epsilon(1e-9));
  CHECK(inv_rect[6] == doctest::Approx(6.0 * kPi * kPi / 343.0).epsilon(1e-9));
  CHECK(inv_rect[8] == doctest::Approx(-kPi * kPi / 81.0).epsilon(1e-9));
  CHECK(inv_rect[10] == doctest::Approx(15.0 * kPi * kPi / 1331.0).epsilon(1e-9));

  SinSpectrum pos_half = neg_half;
  for (double& v : pos_half.a) v = -v;
  GeneratorBasis tri_basis = GeneratorBasis::from_piecewise(
      PiecewiseFunction::from_text("P[-1|-x-1/2|0|x-1/2|1]"), std::nullopt, 12);
  std::vector<double> inv_tri = invert_expansion(tri_basis, pos_half, 12, true);
  CHECK(inv_tri[0] == doctest::Approx(-kPi / 4.0).epsilon(1e-9));
  CHECK(inv_tri[2] == doctest::Approx(-kPi / 27.0).epsilon(1e-9));
  CHECK(inv_tri[4] == doctest::Approx(-kPi / 125.0).epsilon(1e-9));
  CHECK(inv_tri[6] == doctest::Approx(-2.0 * kPi / 343.0).epsilon(1e-9));
  CHECK(inv_tri[8] == doctest::Approx(-kPi / 243.0).epsilon(1e-9));
  CHECK(inv_tri[10] == doctest::Approx(-3.0 * kPi / 1331.0).epsilon(1e-9));
}

TEST_CASE("a mixed generator split feeds the general expansion") {
  // Splitting e^x yields the cosh/sinh pair up to the mean convention, so
  // expanding over the split basis must reproduce the exponential-basis
  // coefficients.
  GeneratorBasis split_basis =
      GeneratorBasis::from_mixed(PiecewiseFunction::from_text("P[-1|exp(x)|1]"), 8);
  PiecewiseFunction f = PiecewiseFunction::from_text("P[-1|-2|-1/2|0|0|2|1/2|0|1]");
  NonSinSpectrum s = expand_general(f, split_basis, 8);
  const double K1 = -2.0 * (1.0 + kPi * kPi) / (kPi * std::sinh(1.0));
  const double K2 = -K1 / kPi;
  CHECK(s.A[0] == doctest::Approx(K1).epsilon(1e-8));
  CHECK(s.B[0] == doctest::Approx(K2).epsilon(1e-8));
  CHECK(s.A[1] ==
        doctest::Approx(K1 * (1.0 + kPi * kPi) / (1.0 + 4.0 * kPi * kPi)).epsilon(1e-8));
}
