#include "nfp/interpolation.hpp"

#include "nfp/common.hpp"

#include <algorithm>
#include <cmath>

namespace nfp {

namespace {

std::vector<double> fritsch_carlson_slopes(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    std::vector<double> d(n - 1), m(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i)
        m[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
    // limit to keep each piece monotone
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            m[i] = m[i + 1] = 0.0;
            continue;
        }
        double a = m[i] / d[i], b = d[i] == 0.0 ? 0.0 : m[i + 1] / d[i];
        double s = a * a + b * b;
        if (s > 9.0) {
            double t = 3.0 / std::sqrt(s);
            m[i] = t * a * d[i];
            m[i + 1] = t * b * d[i];
        }
    }
    return m;
}

}  // namespace

CubicHermite::CubicHermite(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y))
{
    if (x_.size() < 2 || x_.size() != y_.size())
        throw UsageError("interpolation: need at least two matching samples");
    m_ = fritsch_carlson_slopes(x_, y_);
}

CubicHermite::CubicHermite(std::vector<double> x, std::vector<double> y, std::vector<double> slope)
    : x_(std::move(x)), y_(std::move(y)), m_(std::move(slope))
{
    if (x_.size() < 2 || x_.size() != y_.size() || x_.size() != m_.size())
        throw UsageError("interpolation: size mismatch between nodes, values, slopes");
}

std::size_t CubicHermite::locate(double x) const
{
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin());
    if (i == 0) return 0;
    if (i >= x_.size()) return x_.size() - 2;
    return i - 1;
}

double CubicHermite::operator()(double x) const
{
    std::size_t i = locate(x);
    double h = x_[i + 1] - x_[i];
    double t = (x - x_[i]) / h;
    double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * m_[i] +
           (-2 * t3 + 3 * t2) * y_[i + 1] + (t3 - t2) * h * m_[i + 1];
}

double CubicHermite::derivative(double x) const
{
    std::size_t i = locate(x);
    double h = x_[i + 1] - x_[i];
    double t = (x - x_[i]) / h;
    double t2 = t * t;
    return ((6 * t2 - 6 * t) * y_[i] + (3 * t2 - 4 * t + 1) * h * m_[i] +
            (-6 * t2 + 6 * t) * y_[i + 1] + (3 * t2 - 2 * t) * h * m_[i + 1]) / h;
}

}  // namespace nfp
