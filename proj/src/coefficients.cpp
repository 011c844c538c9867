#include "nfp/coefficients.hpp"

#include "nfp/interpolation.hpp"
#include "nfp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nfp {

namespace {

constexpr double kBalanceTol = 1e-10;

std::string point_str(const Point& p, int dim)
{
    std::ostringstream os;
    os << "(";
    for (int k = 0; k < dim; ++k) os << (k ? ", " : "") << p[k];
    os << ")";
    return os.str();
}

/// Integrand of g in t = log s coordinates: d/dt g(e^t) = beta'(e^t)/b(e^t).
double g_slope_log(const CoefficientSet& cs, double t)
{
    double r = std::exp(t);
    return cs.beta.derivative(r) / cs.b.value(r);
}

}  // namespace

void validate(const CoefficientSet& cs)
{
    if (!(cs.gamma > 0) || !(cs.gamma1 >= cs.gamma))
        throw UsageError("coefficients: need 0 < gamma <= gamma1");
    if (!(cs.b0 > 0) || !(cs.b_sup >= cs.b0))
        throw UsageError("coefficients: need 0 < b0 <= b_sup");
    if (!(cs.m >= 2.0))
        throw UsageError("coefficients: weight exponent m must be >= 2");
    if (cs.dimension < 1 || cs.dimension > 3)
        throw UsageError("coefficients: dimension must be 1, 2 or 3");
    if (!cs.beta.value || !cs.beta.derivative || !cs.b.value || !cs.b.derivative)
        throw UsageError("coefficients: beta and b need value and derivative callables");
}

double g(const CoefficientSet& cs, double r)
{
    if (!(r > 0))
        throw UsageError("g: argument must be positive, got " + std::to_string(r));
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    return integrate([&cs](double t) { return g_slope_log(cs, t); }, 0.0, std::log(r), opt);
}

double g_inverse(const CoefficientSet& cs, double y)
{
    // A priori bracket in t = log r from the slope bounds
    // gamma/b_sup <= (g o exp)' <= gamma1/b0.
    double lo, hi;
    if (y >= 0) {
        lo = y / (cs.gamma1 / cs.b0);
        hi = y / (cs.gamma / cs.b_sup);
    } else {
        lo = y / (cs.gamma / cs.b_sup);
        hi = y / (cs.gamma1 / cs.b0);
    }
    double t = find_root_expanding(
        [&](double tt) {
            QuadratureOptions opt;
            opt.rel_tol = 1e-12;
            return integrate([&cs](double s) { return g_slope_log(cs, s); }, 0.0, tt, opt) - y;
        },
        lo - 1e-12, hi + 1e-12, "g_inverse(" + std::to_string(y) + ")");
    return std::exp(t);
}

double eta(const CoefficientSet& cs, double r)
{
    if (r < 0)
        throw UsageError("eta: argument must be nonnegative, got " + std::to_string(r));
    if (r == 0) return 0.0;
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    double B = integrate([&cs](double s) { return cs.beta.derivative(s) / cs.b.value(s); }, 0.0, r, opt);
    return r * g(cs, r) - B;
}

double j(const CoefficientSet& cs, double r)
{
    if (r < 0)
        throw UsageError("j: argument must be nonnegative, got " + std::to_string(r));
    if (r == 0) return 0.0;
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;
    return 2.0 * integrate(
        [&cs](double q) {
            double s = q * q;
            return cs.beta.derivative(s) / std::sqrt(cs.b.value(s));
        },
        0.0, std::sqrt(r), opt);
}

RegularizedCoefficients regularize(const CoefficientSet& cs, double epsilon)
{
    if (!(epsilon > 0))
        throw UsageError("regularize: epsilon must be positive");
    RegularizedCoefficients rc;
    rc.base = cs;
    rc.epsilon = epsilon;
    double m = cs.m;
    // b is already C^1 and bounded, so the mollified b_eps is b itself.
    rc.b_star_eps = [b = cs.b.value, epsilon](double r) {
        return b(r) * r / (1.0 + epsilon * std::abs(r));
    };
    rc.phi_eps = [phi = cs.phi, epsilon, m](const Point& x) {
        double p = phi(x);
        return p / std::pow(1.0 + epsilon * p, m);
    };
    rc.d_eps = [phi = cs.phi, grad = cs.grad_phi, epsilon, m](const Point& x) {
        double p = phi(x);
        double w = 1.0 + epsilon * p;
        double factor = std::pow(w, -m) - m * epsilon * p * std::pow(w, -(m + 1.0));
        Point gp = grad(x);
        return Point{-gp[0] * factor, -gp[1] * factor, -gp[2] * factor};
    };
    return rc;
}

bool HypothesisReport::passed() const
{
    for (const HypothesisCheck* c :
         {&diffusivity_bounds, &mobility_regularity, &drift_integrability,
          &potential_growth, &mobility_floor, &balance_condition})
        if (c->checked && !c->passed) return false;
    return true;
}

std::string HypothesisReport::summary() const
{
    std::ostringstream os;
    auto line = [&os](const char* name, const HypothesisCheck& c) {
        os << name << ": " << (c.checked ? (c.passed ? "pass" : "FAIL") : "skipped");
        if (c.sampled_only) os << " [sampled, not proven]";
        if (c.checked && !c.passed)
            os << "  worst violation " << c.worst_violation << " at " << c.worst_point[0]
               << "," << c.worst_point[1] << "," << c.worst_point[2];
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    };
    line("(i)   diffusivity bounds  ", diffusivity_bounds);
    line("(ii)  mobility regularity ", mobility_regularity);
    line("(iii) drift integrability ", drift_integrability);
    line("(iv)  potential growth    ", potential_growth);
    line("(v)   mobility floor      ", mobility_floor);
    line("(vi)  balance condition   ", balance_condition);
    os << "int Phi^-m (lattice estimate): " << phi_inv_m_integral << "\n";
    os << "sup|lap Phi| = " << sup_abs_laplacian << ", sup|D| = " << sup_abs_drift
       << ", rho = " << rho << "\n";
    os << "lattice: " << samples_per_axis << " samples/axis, d = " << dimension
       << ", density range [0, " << r_max << "]\n";
    os << "overall: " << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

HypothesisReport check_hypotheses(const CoefficientSet& cs, const SampleBox& box,
                                  int n_samples, double r_max)
{
    validate(cs);
    if (n_samples < 2)
        throw UsageError("check_hypotheses: need at least 2 samples per axis");
    if (!cs.phi || !cs.grad_phi || !cs.laplacian_phi)
        throw UsageError("check_hypotheses: coefficient set has no potential attached");

    HypothesisReport rep;
    rep.samples_per_axis = n_samples;
    rep.dimension = cs.dimension;
    rep.r_max = r_max;

    const int d = cs.dimension;
    auto require_finite = [d](double v, const Point& p, const char* what) {
        if (!std::isfinite(v))
            throw NumericalError(std::string("check_hypotheses: non-finite ") + what +
                                 " at sample point " + point_str(p, d));
    };

    // --- density-range checks (i), (ii), (v) on [-r_max, r_max] / [0, r_max]
    auto& hi_ = rep.diffusivity_bounds;
    hi_.checked = true;
    hi_.passed = true;
    {
        double beta0 = cs.beta.value(0.0);
        if (std::abs(beta0) > 1e-13) {
            hi_.passed = false;
            hi_.worst_violation = std::abs(beta0);
            hi_.note = "beta(0) != 0";
        }
    }
    auto& hii = rep.mobility_regularity;
    hii.checked = true;
    hii.passed = true;
    hii.sampled_only = true;
    double sup_b = 0.0, sup_bp = 0.0;
    auto& hv = rep.mobility_floor;
    hv.checked = true;
    hv.passed = true;
    for (int k = 0; k < n_samples; ++k) {
        double r = -r_max + 2.0 * r_max * k / (n_samples - 1);
        Point pr{r, 0, 0};
        double bp = cs.beta.derivative(r);
        require_finite(bp, pr, "beta'");
        double low = cs.gamma - bp, high = bp - cs.gamma1;
        double viol = std::max(low, high);
        if (viol > 1e-12 * std::max(1.0, cs.gamma1) && viol > hi_.worst_violation) {
            hi_.passed = false;
            hi_.worst_violation = viol;
            hi_.worst_point = pr;
        }
        double bv = cs.b.value(r), bd = cs.b.derivative(r);
        require_finite(bv, pr, "b");
        require_finite(bd, pr, "b'");
        sup_b = std::max(sup_b, std::abs(bv));
        sup_bp = std::max(sup_bp, std::abs(bd));
        if (r >= 0.0 && cs.b0 - bv > 1e-12 * cs.b0 && cs.b0 - bv > hv.worst_violation) {
            hv.passed = false;
            hv.worst_violation = cs.b0 - bv;
            hv.worst_point = pr;
        }
    }
    {
        std::ostringstream os;
        os << "sup|b|=" << sup_b << " sup|b'|=" << sup_bp;
        hii.note = os.str();
        if (sup_b > cs.b_sup * (1 + 1e-12)) {
            hii.passed = false;
            hii.worst_violation = sup_b - cs.b_sup;
            hii.note += " exceeds declared b_sup";
        }
    }

    // --- spatial lattice checks (iii), (iv), (vi)
    auto& hiii = rep.drift_integrability;
    hiii.checked = true;
    hiii.passed = true;
    hiii.sampled_only = true;
    auto& hiv = rep.potential_growth;
    hiv.checked = true;
    hiv.passed = true;
    auto& hvi = rep.balance_condition;
    hvi.checked = true;
    hvi.passed = true;
    hvi.worst_violation = -1e300;  // track the max of the balance expression

    double cell = 1.0;
    for (int k = 0; k < d; ++k)
        cell *= (box.hi[k] - box.lo[k]) / n_samples;
    if (!(cell > 0))
        throw UsageError("check_hypotheses: sample box is degenerate");

    long long total = 1;
    for (int k = 0; k < d; ++k) total *= n_samples;
    if (total > (1LL << 24))
        throw UsageError("check_hypotheses: lattice too large; reduce n_samples");

    double phi_min_interior = 1e300, phi_min_boundary = 1e300;
    double abs_div_integral = 0.0;
    double worst_balance = -1e300;
    Point worst_balance_pt{};

    for (long long idx = 0; idx < total; ++idx) {
        Point x{0, 0, 0};
        long long rem = idx;
        bool boundary = false;
        for (int k = 0; k < d; ++k) {
            int ik = static_cast<int>(rem % n_samples);
            rem /= n_samples;
            // midpoint lattice, so quadrature sums are plain cell sums
            x[k] = box.lo[k] + (box.hi[k] - box.lo[k]) * (ik + 0.5) / n_samples;
            if (ik == 0 || ik == n_samples - 1) boundary = true;
        }
        double p = cs.phi(x);
        require_finite(p, x, "Phi");
        Point gp = cs.grad_phi(x);
        double g2 = 0.0;
        for (int k = 0; k < d; ++k) g2 += gp[k] * gp[k];
        require_finite(g2, x, "grad Phi");
        double lp = cs.laplacian_phi(x);
        require_finite(lp, x, "lap Phi");

        rep.sup_abs_drift = std::max(rep.sup_abs_drift, std::sqrt(g2));
        rep.sup_abs_laplacian = std::max(rep.sup_abs_laplacian, std::abs(lp));
        abs_div_integral += std::abs(lp) * cell;
        rep.phi_inv_m_integral += std::pow(p, -cs.m) * cell;

        if (1.0 - p > 1e-12 && 1.0 - p > hiv.worst_violation) {
            hiv.passed = false;
            hiv.worst_violation = 1.0 - p;
            hiv.worst_point = x;
        }
        if (boundary)
            phi_min_boundary = std::min(phi_min_boundary, p);
        else
            phi_min_interior = std::min(phi_min_interior, p);

        double balance = cs.gamma1 * lp - cs.b0 * g2;
        if (balance > worst_balance) {
            worst_balance = balance;
            worst_balance_pt = x;
        }
    }

    hvi.worst_violation = std::max(0.0, worst_balance);
    hvi.worst_point = worst_balance_pt;
    hvi.passed = worst_balance <= kBalanceTol;
    {
        std::ostringstream os;
        os << "max of gamma1 lap Phi - b0 |grad Phi|^2 = " << worst_balance;
        hvi.note = os.str();
    }

    if (phi_min_boundary < phi_min_interior) {
        hiv.passed = false;
        hiv.worst_violation = std::max(hiv.worst_violation, phi_min_interior - phi_min_boundary);
        hiv.note = "potential does not grow toward the box boundary";
    }

    {
        std::ostringstream os;
        os << "int |div D| estimate = " << abs_div_integral << ", sup|D| = " << rep.sup_abs_drift;
        hiii.note = os.str();
        hiii.passed = std::isfinite(abs_div_integral) && std::isfinite(rep.sup_abs_drift);
    }

    rep.rho = cs.gamma1 * (cs.m + 1.0) * rep.sup_abs_laplacian +
              cs.b_sup * (1.0 + cs.m) * (1.0 + cs.m) * rep.sup_abs_drift * rep.sup_abs_drift;
    return rep;
}

// ---- presets ---------------------------------------------------------------

namespace {

void attach_flat_potential(CoefficientSet& cs)
{
    cs.phi = [](const Point&) { return 1.0; };
    cs.grad_phi = [](const Point&) { return Point{0, 0, 0}; };
    cs.laplacian_phi = [](const Point&) { return 0.0; };
}

}  // namespace

CoefficientSet make_linear(int dimension)
{
    CoefficientSet cs;
    cs.beta.value = [](double r) { return r; };
    cs.beta.derivative = [](double) { return 1.0; };
    cs.b.value = [](double) { return 1.0; };
    cs.b.derivative = [](double) { return 0.0; };
    cs.gamma = 1.0;
    cs.gamma1 = 1.0;
    cs.b0 = 1.0;
    cs.b_sup = 1.0;
    cs.m = 2.0;
    cs.dimension = dimension;
    attach_flat_potential(cs);
    validate(cs);
    return cs;
}

CoefficientSet make_smooth_nonlinear(double gamma, double gamma1, double b0, double b_sup,
                                     int dimension, double beta_scale)
{
    if (!(beta_scale > 0))
        throw UsageError("smooth-nonlinear: beta_scale must be positive");
    CoefficientSet cs;
    cs.beta.value = [gamma, gamma1, beta_scale](double r) {
        double a = std::abs(r) / beta_scale;
        double v = gamma * std::abs(r) + (gamma1 - gamma) * beta_scale * (a - std::log1p(a));
        return r < 0 ? -v : v;
    };
    cs.beta.derivative = [gamma, gamma1, beta_scale](double r) {
        double a = std::abs(r) / beta_scale;
        return gamma + (gamma1 - gamma) * a / (1.0 + a);
    };
    cs.b.value = [b0, b_sup](double r) { return b0 + (b_sup - b0) / (1.0 + r * r); };
    cs.b.derivative = [b0, b_sup](double r) {
        double w = 1.0 + r * r;
        return -(b_sup - b0) * 2.0 * r / (w * w);
    };
    cs.gamma = gamma;
    cs.gamma1 = gamma1;
    cs.b0 = b0;
    cs.b_sup = b_sup;
    cs.m = 2.0;
    cs.dimension = dimension;
    attach_flat_potential(cs);
    validate(cs);
    return cs;
}

CoefficientSet make_custom(const std::vector<std::pair<double, double>>& beta_samples,
                           const std::vector<std::pair<double, double>>& b_samples,
                           double gamma, double gamma1, double b0, double b_sup,
                           int dimension)
{
    auto build = [](const std::vector<std::pair<double, double>>& samples, const char* what) {
        if (samples.size() < 3)
            throw UsageError(std::string("custom preset: need at least 3 samples for ") + what);
        std::vector<double> xs, ys;
        for (const auto& [r, v] : samples) {
            if (!xs.empty() && r <= xs.back())
                throw UsageError(std::string("custom preset: sample abscissae for ") + what +
                                 " must be strictly increasing");
            xs.push_back(r);
            ys.push_back(v);
        }
        return CubicHermite(std::move(xs), std::move(ys));
    };
    auto beta_tab = std::make_shared<CubicHermite>(build(beta_samples, "beta"));
    auto b_tab = std::make_shared<CubicHermite>(build(b_samples, "b"));
    if (std::abs((*beta_tab)(0.0)) > 1e-12)
        throw UsageError("custom preset: beta table must pass through (0, 0)");

    auto clamp_eval = [](const std::shared_ptr<CubicHermite>& tab, double r) {
        // linear extension beyond the table with the end slopes
        if (r < tab->x_min())
            return (*tab)(tab->x_min()) + tab->derivative(tab->x_min()) * (r - tab->x_min());
        if (r > tab->x_max())
            return (*tab)(tab->x_max()) + tab->derivative(tab->x_max()) * (r - tab->x_max());
        return (*tab)(r);
    };
    auto clamp_deriv = [](const std::shared_ptr<CubicHermite>& tab, double r) {
        return tab->derivative(std::clamp(r, tab->x_min(), tab->x_max()));
    };

    CoefficientSet cs;
    cs.beta.value = [beta_tab, clamp_eval](double r) { return clamp_eval(beta_tab, r); };
    cs.beta.derivative = [beta_tab, clamp_deriv](double r) { return clamp_deriv(beta_tab, r); };
    cs.b.value = [b_tab, clamp_eval](double r) { return clamp_eval(b_tab, r); };
    cs.b.derivative = [b_tab, clamp_deriv](double r) { return clamp_deriv(b_tab, r); };
    cs.gamma = gamma;
    cs.gamma1 = gamma1;
    cs.b0 = b0;
    cs.b_sup = b_sup;
    cs.m = 2.0;
    cs.dimension = dimension;
    attach_flat_potential(cs);
    validate(cs);
    return cs;
}

void attach_quadratic_potential(CoefficientSet& cs)
{
    int d = cs.dimension;
    cs.phi = [d](const Point& x) {
        double r2 = 0;
        for (int k = 0; k < d; ++k) r2 += x[k] * x[k];
        return 1.0 + r2;
    };
    cs.grad_phi = [d](const Point& x) {
        Point g{0, 0, 0};
        for (int k = 0; k < d; ++k) g[k] = 2.0 * x[k];
        return g;
    };
    cs.laplacian_phi = [d](const Point&) { return 2.0 * d; };
}

}  // namespace nfp
