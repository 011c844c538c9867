#pragma once

#include "nfp/common.hpp"

#include <functional>
#include <string>
#include <vector>

namespace nfp {

/// Scalar function together with its first derivative.
struct ScalarFunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
};

/// Problem data for u_t - div(grad beta(u) - D b(u) u) = 0 with D = -grad Phi.
///
/// gamma/gamma1 bound beta' from below/above, b0 bounds b from below on
/// [0,inf), b_sup = |b|_inf, m is the weight exponent with Phi^(-m)
/// integrable, dimension is the spatial dimension d.
struct CoefficientSet {
    ScalarFunction beta;
    ScalarFunction b;
    std::function<double(const Point&)> phi;
    std::function<Point(const Point&)> grad_phi;
    std::function<double(const Point&)> laplacian_phi;
    double gamma = 1.0;
    double gamma1 = 1.0;
    double b0 = 1.0;
    double b_sup = 1.0;
    double m = 2.0;
    int dimension = 1;
};

/// Validates the scalar bounds (throws UsageError on nonsense like b0 <= 0).
void validate(const CoefficientSet& cs);

/// Regularized problem data: b*_eps(r) = b(r) r/(1+eps|r|),
/// Phi_eps = Phi/(1+eps Phi)^m and D_eps = -grad Phi_eps.
struct RegularizedCoefficients {
    CoefficientSet base;
    double epsilon = 0.0;
    std::function<double(double)> b_star_eps;
    std::function<double(const Point&)> phi_eps;
    std::function<Point(const Point&)> d_eps;
};

RegularizedCoefficients regularize(const CoefficientSet& cs, double epsilon);

/// Entropy kernel eta(r) = -int_0^r dtau int_tau^1 beta'(s)/(s b(s)) ds,
/// evaluated through the equivalent single-integral form eta(r) = r g(r) -
/// int_0^r beta'/b ds (both integrals have bounded integrands).
double eta(const CoefficientSet& cs, double r);

/// g(r) = int_1^r beta'(s)/(s b(s)) ds, strictly increasing with g(1)=0.
double g(const CoefficientSet& cs, double r);

/// Inverse of g by bracketed monotone root finding; maps R onto (0,inf).
double g_inverse(const CoefficientSet& cs, double y);

/// j(r) = int_0^r beta'(s)/sqrt(s b(s)) ds  (computed with s = q^2).
double j(const CoefficientSet& cs, double r);

struct SampleBox {
    Point lo{};
    Point hi{};
};

struct HypothesisCheck {
    bool checked = false;
    bool passed = false;
    bool sampled_only = false;   ///< estimate flagged "sampled, not proven"
    double worst_violation = 0.0;
    Point worst_point{};
    std::string note;
};

struct HypothesisReport {
    HypothesisCheck diffusivity_bounds;   ///< (i)  gamma <= beta' <= gamma1, beta(0)=0
    HypothesisCheck mobility_regularity;  ///< (ii) b bounded with bounded derivative
    HypothesisCheck drift_integrability;  ///< (iii) |D| bounded, div D integrable (estimate)
    HypothesisCheck potential_growth;     ///< (iv) Phi >= 1, growth toward the box boundary
    HypothesisCheck mobility_floor;       ///< (v)  b >= b0 on [0, r_max]
    HypothesisCheck balance_condition;    ///< (vi) gamma1 lap Phi - b0 |grad Phi|^2 <= 0
    double phi_inv_m_integral = 0.0;      ///< lattice estimate of int Phi^(-m)
    double sup_abs_laplacian = 0.0;
    double sup_abs_drift = 0.0;
    double rho = 0.0;  ///< gamma1 (m+1)|lap Phi|_inf + |b|_inf (1+m)^2 |D|^2_inf on the box
    int samples_per_axis = 0;
    int dimension = 0;
    double r_max = 0.0;

    bool passed() const;
    std::string summary() const;
};

/// Samples every checkable hypothesis on a tensor lattice over `box`
/// (n_samples per axis) and a density lattice on [0, r_max]; never a proof.
HypothesisReport check_hypotheses(const CoefficientSet& cs, const SampleBox& box,
                                  int n_samples, double r_max = 10.0);

// ---- presets -------------------------------------------------------------

/// beta = id, b = 1, Phi = 1 (free diffusion unless a potential is attached).
CoefficientSet make_linear(int dimension);

/// beta(r) = gamma r + (gamma1-gamma) scale (|r|/scale - log(1+|r|/scale)) sign(r),
/// b(r) = b0 + (b_sup-b0)/(1+r^2).  scale=1 recovers the plain r - log(1+r) family.
CoefficientSet make_smooth_nonlinear(double gamma, double gamma1, double b0, double b_sup,
                                     int dimension, double beta_scale = 1.0);

/// Tabulated beta and b through monotone cubic interpolation. Samples are
/// (r, value) pairs with strictly increasing r; beta must pass through (0,0).
CoefficientSet make_custom(const std::vector<std::pair<double, double>>& beta_samples,
                           const std::vector<std::pair<double, double>>& b_samples,
                           double gamma, double gamma1, double b0, double b_sup,
                           int dimension);

/// Attaches Phi = 1 + |x|^2 (the unbounded-drift example that fails (vi) at 0).
void attach_quadratic_potential(CoefficientSet& cs);

}  // namespace nfp
