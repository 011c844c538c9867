#pragma once

#include "nfp/common.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace nfp {

/// Tensor cell grid on an axis-aligned box, d in {1, 2}; zero-flux boundaries.
struct Grid {
    int dim = 1;
    std::array<double, 2> lo{}, hi{};
    std::array<int, 2> n{1, 1};
    std::array<double, 2> dx{1, 1};

    static std::shared_ptr<const Grid> make_1d(double lo, double hi, int cells);
    static std::shared_ptr<const Grid> make_2d(double lo_x, double hi_x, int cells_x,
                                               double lo_y, double hi_y, int cells_y);

    std::size_t cell_count() const { return static_cast<std::size_t>(n[0]) * (dim == 2 ? n[1] : 1); }
    double cell_volume() const { return dim == 2 ? dx[0] * dx[1] : dx[0]; }
    std::size_t index(int ix, int iy = 0) const { return static_cast<std::size_t>(iy) * n[0] + ix; }

    Point center(std::size_t idx) const
    {
        int ix = static_cast<int>(idx % n[0]);
        int iy = static_cast<int>(idx / n[0]);
        Point p{lo[0] + (ix + 0.5) * dx[0], 0, 0};
        if (dim == 2) p[1] = lo[1] + (iy + 0.5) * dx[1];
        return p;
    }

    bool same_layout(const Grid& o) const;
};

/// Nonnegative-by-convention cell density; negativity is tracked, not clamped.
struct DensityField {
    std::shared_ptr<const Grid> grid;
    std::vector<double> values;

    DensityField() = default;
    explicit DensityField(std::shared_ptr<const Grid> g, double fill = 0.0)
        : grid(std::move(g)), values(grid->cell_count(), fill) {}

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }
};

void require_same_grid(const DensityField& a, const DensityField& b, const char* what);

double mass(const DensityField& u);
double l1_norm(const DensityField& u);
double l1_distance(const DensityField& u, const DensityField& v);
/// Weighted L1 norm: sum of Phi(center) |u| over cells.
double weighted_norm(const DensityField& u, const std::function<double(const Point&)>& phi);

double min_value(const DensityField& u);
double max_value(const DensityField& u);

/// Columnar text format: a `# nfp-field ...` header carrying the grid layout,
/// then one row of coordinates and value per cell at 17 significant digits.
void save_field(const DensityField& u, const std::string& path);
DensityField load_field(const std::string& path);

}  // namespace nfp
