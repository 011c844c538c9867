#include "nfp/appendix_potential.hpp"

#include "nfp/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace nfp {

AppendixPotential::AppendixPotential(int dimension, double b0, double gamma1,
                                     double eta_param, double mu_param)
    : d_(dimension)
{
    if (d_ < 1)
        throw UsageError("appendix potential: dimension must be >= 1");
    if (!(b0 > 0) || !(gamma1 > 0))
        throw UsageError("appendix potential: b0 and gamma1 must be positive");
    if (!(eta_param > 0) || !(mu_param > 0))
        throw UsageError("appendix potential: eta and mu must be positive");
    alpha_ = b0 / gamma1;
    delta_ = std::exp(-(d_ + 2.0) / (2.0 * d_));
    eta_ = eta_param;
    mu_ = mu_param;
    h_delta_ = delta_ * (2.0 * std::log(delta_) + 1.0) - eta_;  // = -(2 delta/d + eta)
    c0_ = 1.0 / (delta_ * (2.0 * delta_ / d_ + eta_));

    if (d_ >= 3) {
        // dense radial cache of int_delta^r h with exact slopes h(node)
        cache_max_ = 1024.0;
        std::vector<double> rs, vals, slopes;
        rs.push_back(delta_);
        vals.push_back(0.0);
        slopes.push_back(h_closed_form(delta_));
        double acc = 0.0;
        const int per_decade = 400;
        double lo = delta_;
        double ratio = std::pow(10.0, 1.0 / per_decade);
        for (double r = lo * ratio; r < cache_max_ * ratio; r *= ratio) {
            double rr = std::min(r, cache_max_);
            acc += integrate([this](double s) { return h_closed_form(s); }, rs.back(), rr);
            rs.push_back(rr);
            vals.push_back(acc);
            slopes.push_back(h_closed_form(rr));
            if (rr >= cache_max_) break;
        }
        phi_cache_ = std::make_shared<CubicHermite>(std::move(rs), std::move(vals), std::move(slopes));
    }
}

double AppendixPotential::bracket(double r) const
{
    if (d_ == 2) return c0_ + alpha_ * std::log(r / delta_);
    double p = std::pow(r / delta_, d_ - 2.0);
    double B = alpha_ / (d_ - 2.0);
    return (c0_ + B) * p - B;
}

double AppendixPotential::h_closed_form(double r) const
{
    if (r < delta_ * (1.0 - 1e-12))
        throw UsageError("h: argument below delta = " + std::to_string(delta_));
    r = std::max(r, delta_);
    return -1.0 / (r * bracket(r));
}

double AppendixPotential::h_prime(double r) const
{
    double h = h_closed_form(r);
    return alpha_ * h * h - (d_ - 1.0) / r * h;
}

double AppendixPotential::integral_h(double r) const
{
    if (r < delta_ * (1.0 - 1e-12))
        throw UsageError("integral_h: argument below delta");
    r = std::max(r, delta_);
    if (d_ == 1)
        return -std::log1p(alpha_ * (r - delta_) * (2.0 * delta_ + eta_)) / alpha_;
    if (d_ == 2)
        return -std::log1p(alpha_ * delta_ * (delta_ + eta_) * std::log(r / delta_)) / alpha_;
    if (r <= cache_max_)
        return (*phi_cache_)(r);
    return (*phi_cache_)(cache_max_) +
           integrate([this](double s) { return h_closed_form(s); }, cache_max_, r);
}

double AppendixPotential::phi_radial(double r) const
{
    if (r <= delta_)
        return (r == 0.0 ? 0.0 : r * r * std::log(r)) + mu_;
    return delta_ * delta_ * std::log(delta_) - eta_ * delta_ + integral_h(r) + eta_ * r + mu_;
}

double AppendixPotential::phi_value(const Point& x) const
{
    double r2 = 0;
    for (int k = 0; k < d_; ++k) r2 += x[k] * x[k];
    return phi_radial(std::sqrt(r2));
}

Point AppendixPotential::grad_phi_value(const Point& x) const
{
    double r2 = 0;
    for (int k = 0; k < d_; ++k) r2 += x[k] * x[k];
    double r = std::sqrt(r2);
    Point g{0, 0, 0};
    if (r == 0.0) return g;
    double slope;  // dPhi/dr
    if (r <= delta_)
        slope = r * (2.0 * std::log(r) + 1.0);
    else
        slope = h_closed_form(r) + eta_;
    for (int k = 0; k < d_; ++k) g[k] = slope * x[k] / r;
    return g;
}

double AppendixPotential::laplacian_phi_value(const Point& x) const
{
    double r2 = 0;
    for (int k = 0; k < d_; ++k) r2 += x[k] * x[k];
    double r = std::sqrt(r2);
    if (r < origin_clamp_) {
        if (!origin_warned_) {
            std::fprintf(stderr,
                         "appendix potential: Laplacian requested at |x| = %.3e < %.3e; "
                         "clamping to the log-singular core value at the clamp radius\n",
                         r, origin_clamp_);
            origin_warned_ = true;
        }
        r = origin_clamp_;
    }
    if (r <= delta_)
        return 2.0 * d_ * std::log(r) + d_ + 2.0;
    return h_prime(r) + (d_ - 1.0) / r * (h_closed_form(r) + eta_);
}

void AppendixPotential::attach_to(CoefficientSet& cs) const
{
    auto self = std::make_shared<AppendixPotential>(*this);
    cs.dimension = d_;
    cs.phi = [self](const Point& x) { return self->phi_value(x); };
    cs.grad_phi = [self](const Point& x) { return self->grad_phi_value(x); };
    cs.laplacian_phi = [self](const Point& x) { return self->laplacian_phi_value(x); };
}

AppendixPotential AppendixPotential::choose_parameters(int dimension, double b0, double gamma1,
                                                       double safety, int n_radii,
                                                       double r_min, double r_max)
{
    if (!(safety >= 1.0))
        throw UsageError("choose_parameters: safety must be >= 1");
    for (int k = 0; k <= 20; ++k) {
        double eta = safety * std::ldexp(1.0, k);
        AppendixPotential pot(dimension, b0, gamma1, eta, /*mu=*/1.0);
        double worst = -1e300;
        double ratio = std::pow(r_max / r_min, 1.0 / (n_radii - 1));
        double r = r_min;
        bool ok = true;
        double phi_pre_min = 0.0;  // pre-shift Phi has mu = 0; min(0, .) starts at 0
        for (int i = 0; i < n_radii; ++i, r *= ratio) {
            Point x{r, 0, 0};
            Point gp = pot.grad_phi_value(x);
            double g2 = 0;
            for (int kk = 0; kk < dimension; ++kk) g2 += gp[kk] * gp[kk];
            double balance = gamma1 * pot.laplacian_phi_value(x) - b0 * g2;
            if (balance > worst) worst = balance;
            if (balance > 1e-10) {
                ok = false;
                break;
            }
            phi_pre_min = std::min(phi_pre_min, pot.phi_radial(r) - pot.mu_param());
        }
        if (ok) {
            double mu = 1.0 - phi_pre_min;
            return AppendixPotential(dimension, b0, gamma1, eta, mu);
        }
    }
    std::ostringstream os;
    os << "choose_parameters: no eta <= 2^20 * " << safety
       << " certifies the balance condition on the " << n_radii << "-point lattice ["
       << r_min << ", " << r_max << "] (d=" << dimension << ", b0=" << b0
       << ", gamma1=" << gamma1 << ")";
    throw ConfigError(os.str());
}

std::string BalanceReport::summary() const
{
    std::ostringstream os;
    os << "balance condition gamma1 lap Phi - b0 |grad Phi|^2 <= 0 on " << n_radii
       << " log-spaced radii in [" << r_min << ", " << r_max << "]: max = " << max_value
       << " at r = " << worst_radius << " -> " << (passed ? "PASS" : "FAIL")
       << " (lattice certification, not a proof)\n";
    return os.str();
}

BalanceReport verify_balance_condition(const AppendixPotential& pot, const CoefficientSet& cs,
                                       int n_radii, double r_min, double r_max)
{
    if (std::abs(cs.b0 / cs.gamma1 - pot.alpha()) > 1e-12 * pot.alpha())
        throw UsageError("verify_balance_condition: coefficient set b0/gamma1 differs from the "
                         "alpha the potential was built with");
    if (n_radii < 2)
        throw UsageError("verify_balance_condition: need at least 2 radii");
    BalanceReport rep;
    rep.n_radii = n_radii;
    rep.r_min = r_min;
    rep.r_max = r_max;
    rep.max_value = -1e300;
    double ratio = std::pow(r_max / r_min, 1.0 / (n_radii - 1));
    double r = r_min;
    for (int i = 0; i < n_radii; ++i, r *= ratio) {
        Point x{r, 0, 0};
        Point gp = pot.grad_phi_value(x);
        double g2 = 0;
        for (int k = 0; k < pot.dimension(); ++k) g2 += gp[k] * gp[k];
        double balance = cs.gamma1 * pot.laplacian_phi_value(x) - cs.b0 * g2;
        if (balance > rep.max_value) {
            rep.max_value = balance;
            rep.worst_radius = r;
        }
    }
    rep.passed = rep.max_value <= 1e-10;
    return rep;
}

}  // namespace nfp
