#include <nonsin/quadrature.hpp>

#include <cmath>
#include <vector>

namespace nonsin {

namespace {

// Kronrod-15 abscissae on [0, 1] (symmetric) with Kronrod weights; the
// even-index entries are the embedded Gauss-7 points with their weights.
constexpr double kAbscissae[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

}  // namespace

double gauss_kronrod_15(const std::function<double(double)>& f, double a, double b,
                        double& err) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double kronrod = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    double x = half * kAbscissae[i];
    double fsum;
    if (i == 7) {
      fsum = f(center);
    } else {
      fsum = f(center - x) + f(center + x);
    }
    kronrod += kKronrodWeights[i] * fsum;
    if (i % 2 == 1) {
      // Odd indices (including the midpoint at 7) are the embedded G7 nodes.
      gauss += kGaussWeights[i / 2] * fsum;
    }
  }
  kronrod *= half;
  gauss *= half;
  err = std::abs(kronrod - gauss);
  // QUADPACK-style sharpened estimate.
  double scale = std::pow(200.0 * err, 1.5);
  if (scale < err) err = scale;
  return kronrod;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
  if (a == b) return 0.0;

  struct Interval {
    double lo, hi;
    int depth;
  };

  std::vector<Interval> stack;
  stack.push_back({a, b, 0});

  double total = 0.0;
  int used = 0;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();

    double err = 0.0;
    double value = gauss_kronrod_15(f, iv.lo, iv.hi, err);
    if (!std::isfinite(value)) {
      throw NumericError("non-finite integrand value in quadrature");
    }

    double tol = opts.abs_tol * std::abs(iv.hi - iv.lo) / std::abs(b - a);
    if (err <= tol || err <= opts.rel_tol * std::abs(value)) {
      total += value;
      continue;
    }
    if (iv.depth >= 52) {
      throw NumericError("quadrature interval shrank to the rounding limit before converging");
    }
    if (++used > opts.max_subdivisions) {
      throw NumericError("quadrature did not converge within the subdivision budget");
    }
    double mid = 0.5 * (iv.lo + iv.hi);
    // Push right first so the left half is processed next; the summation
    // order is then left to right, independent of refinement pattern.
    stack.push_back({mid, iv.hi, iv.depth + 1});
    stack.push_back({iv.lo, mid, iv.depth + 1});
  }
  return total;
}

}  // namespace nonsin
