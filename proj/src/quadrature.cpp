#include "nfp/quadrature.hpp"

#include "nfp/common.hpp"

#include <algorithm>
#include <cmath>

namespace nfp {

namespace {

// Kronrod 15-point nodes/weights on [-1,1] and the embedded Gauss-7 weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double integral;
    double error;
};

Panel k15_panel(const std::function<double(double)>& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) resg += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    Panel p;
    p.integral = resk * h;
    p.error = std::abs((resk - resg) * h);
    if (!std::isfinite(p.integral))
        throw NumericalError("quadrature: non-finite integrand on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    return p;
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double tol, const QuadratureOptions& opt, int depth)
{
    Panel p = k15_panel(f, a, b);
    if (p.error <= tol || b - a < opt.abs_floor)
        return p.integral;
    if (depth >= opt.max_depth)
        throw NumericalError("quadrature: subdivision limit reached on [" + std::to_string(a) + ", " +
                             std::to_string(b) + "], err=" + std::to_string(p.error));
    const double c = 0.5 * (a + b);
    return integrate_rec(f, a, c, 0.5 * tol, opt, depth + 1) +
           integrate_rec(f, c, b, 0.5 * tol, opt, depth + 1);
}

}  // namespace

double kronrod15(const std::function<double(double)>& f, double a, double b, double* err_estimate)
{
    Panel p = k15_panel(f, a, b);
    if (err_estimate) *err_estimate = p.error;
    return p.integral;
}

double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opt)
{
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    // First pass fixes the tolerance scale off a coarse estimate.
    Panel coarse = k15_panel(f, a, b);
    double tol = std::max(opt.rel_tol * std::abs(coarse.integral), opt.abs_floor);
    return sign * integrate_rec(f, a, b, tol, opt, 0);
}

double find_root_bracketed(const std::function<double(double)>& f, double a, double b, const RootOptions& opt)
{
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0))
        throw NumericalError("root find: endpoints do not bracket a sign change");
    double c = a, fc = fa, d = b - a, e = d;
    for (int it = 0; it < opt.max_iter; ++it) {
        if ((fb > 0) == (fc > 0)) {
            c = a; fc = fa; d = b - a; e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double eps = 2.220446049250313e-16;
        double tol1 = 2.0 * eps * std::abs(b) + 0.5 * opt.x_tol;
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0 || std::abs(fb) <= opt.f_tol)
            return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double s = fb / fa, p, q;
            if (a == c) {  // secant
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {  // inverse quadratic
                double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d; d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw NumericalError("root find: iteration limit reached");
}

double find_root_expanding(const std::function<double(double)>& f, double lo, double hi,
                           const std::string& what, int max_expansions, const RootOptions& opt)
{
    if (lo > hi) std::swap(lo, hi);
    double flo = f(lo), fhi = f(hi);
    double width = std::max(hi - lo, 1e-8);
    for (int k = 0; k < max_expansions && (flo > 0) == (fhi > 0); ++k) {
        width *= 2.0;
        lo -= width;
        hi += width;
        flo = f(lo);
        fhi = f(hi);
    }
    if ((flo > 0) == (fhi > 0))
        throw NumericalError("root find: no sign change found while bracketing " + what);
    return find_root_bracketed(f, lo, hi, opt);
}

}  // namespace nfp
