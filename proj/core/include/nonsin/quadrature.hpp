#ifndef NONSIN_QUADRATURE_HPP
#define NONSIN_QUADRATURE_HPP

#include <functional>

#include <nonsin/errors.hpp>

namespace nonsin {

struct QuadratureOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-10;
  int max_subdivisions = 20000;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of `f` over [a, b].
/// Throws NumericError when the subdivision budget is exhausted before the
/// requested tolerance is met.  The traversal order is fixed, so results
/// are bitwise reproducible.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

/// Single non-adaptive K15 rule application; `err` receives the usual
/// |K15-G7| based error estimate.
double gauss_kronrod_15(const std::function<double(double)>& f, double a, double b,
                        double& err);

}  // namespace nonsin

#endif  // NONSIN_QUADRATURE_HPP
