#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <nonsin/convert.hpp>

using namespace nonsin;

namespace {

// Dense forward substitution on the full N x N lower-triangular system,
// written against the matrix itself so it shares nothing with the
// divisor-sum recurrence it checks.
std::vector<double> dense_oracle(const std::vector<double>& target,
                                 const std::vector<double>& gen, int N) {
  std::vector<std::vector<double>> M(static_cast<std::size_t>(N),
                                     std::vector<double>(static_cast<std::size_t>(N), 0.0));
  for (int m = 1; m <= N; ++m) {
    for (int n = 1; n <= m; ++n) {
      if (m % n == 0) M[m - 1][n - 1] = gen[static_cast<std::size_t>(m / n - 1)];
    }
  }
  std::vector<double> A(static_cast<std::size_t>(N), 0.0);
  for (int m = 1; m <= N; ++m) {
    double acc = target[static_cast<std::size_t>(m - 1)];
    for (int n = 1; n < m; ++n) acc -= M[m - 1][n - 1] * A[static_cast<std::size_t>(n - 1)];
    A[static_cast<std::size_t>(m - 1)] = acc / M[m - 1][m - 1];
  }
  return A;
}

struct Instance {
  std::vector<double> target;
  std::vector<double> gen;
};

Instance random_instance(std::mt19937_64& rng, int N) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> lead(0.5, 2.0);
  Instance inst;
  inst.target.resize(static_cast<std::size_t>(N));
  inst.gen.resize(static_cast<std::size_t>(N));
  double g1 = lead(rng) * (unit(rng) < 0.0 ? -1.0 : 1.0);
  inst.gen[0] = g1;
  for (int i = 1; i < N; ++i) inst.gen[static_cast<std::size_t>(i)] = 0.5 * g1 * unit(rng);
  for (int i = 0; i < N; ++i) inst.target[static_cast<std::size_t>(i)] = unit(rng);
  return inst;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

constexpr int kInstances = 200;
constexpr int kOrder = 32;

}  // namespace

TEST_CASE("convolution identity: solve then convolve returns the target") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < kInstances; ++t) {
    Instance inst = random_instance(rng, kOrder);
    std::vector<double> A = dirichlet_solve(inst.target, inst.gen, kOrder);
    std::vector<double> back = dirichlet_convolve(A, inst.gen, kOrder);
    double scale = std::max(1.0, max_abs(inst.target));
    for (int m = 0; m < kOrder; ++m) {
      CHECK(std::abs(back[m] - inst.target[m]) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("linearity of the solve in its target") {
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int t = 0; t < kInstances; ++t) {
    Instance u = random_instance(rng, kOrder);
    Instance v = random_instance(rng, kOrder);
    double alpha = coef(rng);
    double beta = coef(rng);
    std::vector<double> mixed(kOrder);
    for (int i = 0; i < kOrder; ++i) mixed[i] = alpha * u.target[i] + beta * v.target[i];
    std::vector<double> lhs = dirichlet_solve(mixed, u.gen, kOrder);
    std::vector<double> au = dirichlet_solve(u.target, u.gen, kOrder);
    std::vector<double> av = dirichlet_solve(v.target, u.gen, kOrder);
    double scale = std::max(1.0, max_abs(lhs));
    for (int i = 0; i < kOrder; ++i) {
      CHECK(std::abs(lhs[i] - (alpha * au[i] + beta * av[i])) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("scaling the generator divides the coefficients") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> coef(0.25, 4.0);
  for (int t = 0; t < kInstances; ++t) {
    Instance inst = random_instance(rng, kOrder);
    double lambda = coef(rng);
    std::vector<double> scaled_gen(inst.gen);
    for (double& g : scaled_gen) g *= lambda;
    std::vector<double> base = dirichlet_solve(inst.target, inst.gen, kOrder);
    std::vector<double> scaled = dirichlet_solve(inst.target, scaled_gen, kOrder);
    double scale = std::max(1.0, max_abs(base));
    for (int i = 0; i < kOrder; ++i) {
      CHECK(std::abs(scaled[i] - base[i] / lambda) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("recurrence equals dense forward substitution") {
  std::mt19937_64 rng(104);
  for (int t = 0; t < kInstances; ++t) {
    Instance inst = random_instance(rng, kOrder);
    std::vector<double> fast = dirichlet_solve(inst.target, inst.gen, kOrder);
    std::vector<double> dense = dense_oracle(inst.target, inst.gen, kOrder);
    double scale = std::max(1.0, max_abs(dense));
    for (int i = 0; i < kOrder; ++i) {
      CHECK(std::abs(fast[i] - dense[i]) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("expansion round trips through the sinusoidal spectrum") {
  std::mt19937_64 rng(105);
  for (int t = 0; t < 50; ++t) {
    Instance inst = random_instance(rng, kOrder);
    GeneratorBasis basis =
        GeneratorBasis::from_coeffs(inst.gen, std::nullopt, 1.0);
    SinSpectrum f;
    f.L = 1.0;
    f.f0 = inst.target[0];
    f.a = inst.target;
    f.b.assign(kOrder, 0.0);
    NonSinSpectrum s = expand_even(f, basis, kOrder);
    SinSpectrum back = reconstruct_sin(s);
    double scale = std::max(1.0, max_abs(f.a));
    for (int i = 1; i <= kOrder; ++i) {
      CHECK(std::abs(back.a_n(i) - f.a_n(i)) <= 1e-12 * scale);
    }
    // And the other way: coefficients -> spectrum -> coefficients.
    NonSinSpectrum again = expand_even(back, basis, kOrder);
    double ascale = std::max(1.0, max_abs(s.A));
    for (int i = 0; i < kOrder; ++i) {
      CHECK(std::abs(again.A[i] - s.A[i]) <= 1e-12 * ascale);
    }
  }
}

TEST_CASE("truncation treats unknown coefficients as unknown, not zero") {
  // Solving at a lower order gives exactly the head of the higher-order
  // solve: later coefficients never influence earlier ones.
  std::mt19937_64 rng(106);
  Instance inst = random_instance(rng, kOrder);
  std::vector<double> head = dirichlet_solve(inst.target, inst.gen, 12);
  std::vector<double> full = dirichlet_solve(inst.target, inst.gen, kOrder);
  for (int i = 0; i < 12; ++i) CHECK(head[i] == full[i]);
}
