#pragma once

#include <functional>
#include <string>

namespace nfp {

struct QuadratureOptions {
    double rel_tol = 1e-10;   ///< relative tolerance on the integral
    double abs_floor = 1e-14; ///< absolute error floor
    int max_depth = 60;       ///< bisection depth limit per branch
};

/// Adaptive Gauss--Kronrod (G7,K15) integration of f over [a, b].
/// Panels are bisected until the embedded error estimate satisfies
/// err <= max(rel_tol*|I|, abs_floor) locally.  Throws NumericalError if the
/// depth limit is exhausted or f returns a non-finite value.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

/// Single non-adaptive K15 panel with embedded error estimate; the workhorse
/// for cumulative tables where the interval is already short.
double kronrod15(const std::function<double(double)>& f, double a, double b,
                 double* err_estimate = nullptr);

struct RootOptions {
    double x_tol = 0.0;       ///< absolute x tolerance (0: machine-driven)
    double f_tol = 0.0;       ///< stop when |f| <= f_tol
    int max_iter = 200;
};

/// Brent's method on a bracketing interval [a, b] with f(a)*f(b) <= 0.
double find_root_bracketed(const std::function<double(double)>& f, double a, double b,
                           const RootOptions& opt = {});

/// Expands [lo, hi] geometrically about its midpoint until f changes sign,
/// then runs Brent.  `what` names the quantity for error messages.
double find_root_expanding(const std::function<double(double)>& f, double lo, double hi,
                           const std::string& what, int max_expansions = 200,
                           const RootOptions& opt = {});

}  // namespace nfp
