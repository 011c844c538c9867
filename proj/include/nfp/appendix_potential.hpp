#pragma once

#include "nfp/coefficients.hpp"
#include "nfp/common.hpp"
#include "nfp/interpolation.hpp"

#include <memory>
#include <string>

namespace nfp {

/// Radial confining potential built from the explicit negative solution h of
///   h'(r) + (d-1)/r h(r) - alpha h^2(r) = 0,   h(delta) = delta(2 log delta + 1) - eta,
/// glued to the core |x|^2 log|x| + mu at |x| = delta = exp(-(d+2)/(2d)).
/// Phi grows linearly (slope -> eta) and is C^1 across the glue radius.
class AppendixPotential {
public:
    AppendixPotential(int dimension, double b0, double gamma1, double eta_param, double mu_param);

    /// Makes "eta, mu large enough" constructive: smallest eta on the grid
    /// {1,2,4,...}*safety whose balance expression gamma1 lap Phi - b0 |grad Phi|^2
    /// is <= 1e-10 at n_radii log-spaced radii, then mu so that Phi >= 1 on the
    /// same lattice.  Throws ConfigError if no eta <= 2^20 * safety certifies.
    static AppendixPotential choose_parameters(int dimension, double b0, double gamma1,
                                               double safety = 1.0, int n_radii = 10000,
                                               double r_min = 1e-3, double r_max = 100.0);

    int dimension() const { return d_; }
    double alpha() const { return alpha_; }
    double delta() const { return delta_; }
    double eta_param() const { return eta_; }
    double mu_param() const { return mu_; }
    /// Seed value h(delta) = delta(2 log delta + 1) - eta = -(2 delta/d + eta).
    double h_at_delta() const { return h_delta_; }

    /// Closed-form h on [delta, inf); throws UsageError below delta.
    double h_closed_form(double r) const;
    /// h' from the defining equation (exact given h).
    double h_prime(double r) const;
    /// int_delta^r h(s) ds: log closed forms for d in {1,2}, cached adaptive
    /// quadrature with monotone cubic interpolation otherwise.
    double integral_h(double r) const;

    double phi_radial(double r) const;
    double phi_value(const Point& x) const;
    Point grad_phi_value(const Point& x) const;
    double laplacian_phi_value(const Point& x) const;

    /// Smallest radius at which the log-singular core Laplacian is evaluated;
    /// below it the value is clamped (a one-time warning is emitted).
    double origin_clamp_radius() const { return origin_clamp_; }

    /// Installs phi / grad phi / lap phi callables into the coefficient set
    /// and overwrites its dimension to match.
    void attach_to(CoefficientSet& cs) const;

private:
    double bracket(double r) const;  // h(r) = -1/(r * bracket(r))

    int d_;
    double alpha_, delta_, eta_, mu_, h_delta_, c0_;
    double origin_clamp_ = 1e-12;
    std::shared_ptr<CubicHermite> phi_cache_;  // d >= 3 only
    double cache_max_ = 0.0;
    mutable bool origin_warned_ = false;
};

struct BalanceReport {
    double max_value = 0.0;   ///< max over the lattice of gamma1 lap Phi - b0 |grad Phi|^2
    double worst_radius = 0.0;
    int n_radii = 0;
    double r_min = 0.0, r_max = 0.0;
    bool passed = false;      ///< max_value <= 1e-10
    std::string summary() const;
};

/// Evaluates the balance expression on a log-spaced radial lattice.
/// cs must carry the same gamma1/b0 the potential was built with.
BalanceReport verify_balance_condition(const AppendixPotential& pot, const CoefficientSet& cs,
                                       int n_radii, double r_min = 1e-3, double r_max = 100.0);

}  // namespace nfp
