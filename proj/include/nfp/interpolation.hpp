#pragma once

#include <vector>

namespace nfp {

/// Piecewise cubic Hermite interpolant on a strictly increasing node set.
/// When slopes are supplied they are used verbatim (C1 Hermite spline);
/// otherwise Fritsch--Carlson monotonicity-limited slopes are derived from
/// the data, which preserves monotone runs of the samples.
class CubicHermite {
public:
    CubicHermite() = default;
    CubicHermite(std::vector<double> x, std::vector<double> y);
    CubicHermite(std::vector<double> x, std::vector<double> y, std::vector<double> slope);

    double operator()(double x) const;
    double derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    bool covers(double x) const { return !x_.empty() && x >= x_.front() && x <= x_.back(); }

private:
    std::size_t locate(double x) const;
    std::vector<double> x_, y_, m_;
};

}  // namespace nfp
