#include "nfp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nfp {

namespace {

std::shared_ptr<const Grid> finalize(Grid g)
{
    for (int k = 0; k < g.dim; ++k) {
        if (g.n[k] < 4)
            throw UsageError("grid: need at least 4 cells per axis");
        if (!(g.hi[k] > g.lo[k]))
            throw UsageError("grid: box must have positive extent");
        g.dx[k] = (g.hi[k] - g.lo[k]) / g.n[k];
    }
    return std::make_shared<const Grid>(g);
}

}  // namespace

std::shared_ptr<const Grid> Grid::make_1d(double lo, double hi, int cells)
{
    Grid g;
    g.dim = 1;
    g.lo = {lo, 0.0};
    g.hi = {hi, 1.0};
    g.n = {cells, 1};
    return finalize(g);
}

std::shared_ptr<const Grid> Grid::make_2d(double lo_x, double hi_x, int cells_x,
                                          double lo_y, double hi_y, int cells_y)
{
    Grid g;
    g.dim = 2;
    g.lo = {lo_x, lo_y};
    g.hi = {hi_x, hi_y};
    g.n = {cells_x, cells_y};
    return finalize(g);
}

bool Grid::same_layout(const Grid& o) const
{
    return dim == o.dim && lo == o.lo && hi == o.hi && n == o.n;
}

void require_same_grid(const DensityField& a, const DensityField& b, const char* what)
{
    if (!a.grid || !b.grid || !a.grid->same_layout(*b.grid))
        throw UsageError(std::string(what) + ": fields live on different grids");
}

double mass(const DensityField& u)
{
    double s = 0;
    for (double v : u.values) s += v;
    return s * u.grid->cell_volume();
}

double l1_norm(const DensityField& u)
{
    double s = 0;
    for (double v : u.values) s += std::abs(v);
    return s * u.grid->cell_volume();
}

double l1_distance(const DensityField& u, const DensityField& v)
{
    require_same_grid(u, v, "l1_distance");
    double s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += std::abs(u[i] - v[i]);
    return s * u.grid->cell_volume();
}

double weighted_norm(const DensityField& u, const std::function<double(const Point&)>& phi)
{
    double s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += phi(u.grid->center(i)) * std::abs(u[i]);
    return s * u.grid->cell_volume();
}

double min_value(const DensityField& u)
{
    return *std::min_element(u.values.begin(), u.values.end());
}

double max_value(const DensityField& u)
{
    return *std::max_element(u.values.begin(), u.values.end());
}

void save_field(const DensityField& u, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw UsageError("save_field: cannot open " + path);
    const Grid& g = *u.grid;
    char buf[256];
    if (g.dim == 1)
        std::snprintf(buf, sizeof buf, "# nfp-field dim=1 lo=%.17g hi=%.17g cells=%d\n",
                      g.lo[0], g.hi[0], g.n[0]);
    else
        std::snprintf(buf, sizeof buf,
                      "# nfp-field dim=2 lo=%.17g,%.17g hi=%.17g,%.17g cells=%d,%d\n",
                      g.lo[0], g.lo[1], g.hi[0], g.hi[1], g.n[0], g.n[1]);
    out << buf;
    for (std::size_t i = 0; i < u.size(); ++i) {
        Point c = u.grid->center(i);
        if (g.dim == 1)
            std::snprintf(buf, sizeof buf, "%.17g %.17g\n", c[0], u[i]);
        else
            std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", c[0], c[1], u[i]);
        out << buf;
    }
}

DensityField load_field(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("load_field: cannot open " + path);
    std::string header;
    std::getline(in, header);
    std::shared_ptr<const Grid> grid;
    {
        int dim = 0;
        if (std::sscanf(header.c_str(), "# nfp-field dim=%d", &dim) != 1)
            throw UsageError("load_field: missing nfp-field header in " + path);
        if (dim == 1) {
            double lo, hi;
            int cells;
            if (std::sscanf(header.c_str(), "# nfp-field dim=1 lo=%lf hi=%lf cells=%d", &lo, &hi,
                            &cells) != 3)
                throw UsageError("load_field: malformed 1d header in " + path);
            grid = Grid::make_1d(lo, hi, cells);
        } else if (dim == 2) {
            double lox, loy, hix, hiy;
            int nx, ny;
            if (std::sscanf(header.c_str(),
                            "# nfp-field dim=2 lo=%lf,%lf hi=%lf,%lf cells=%d,%d", &lox, &loy,
                            &hix, &hiy, &nx, &ny) != 6)
                throw UsageError("load_field: malformed 2d header in " + path);
            grid = Grid::make_2d(lox, hix, nx, loy, hiy, ny);
        } else {
            throw UsageError("load_field: unsupported dimension in " + path);
        }
    }
    DensityField u(grid);
    for (std::size_t i = 0; i < u.size(); ++i) {
        double c0, c1, v;
        if (grid->dim == 1) {
            if (!(in >> c0 >> v))
                throw UsageError("load_field: truncated data in " + path);
        } else {
            if (!(in >> c0 >> c1 >> v))
                throw UsageError("load_field: truncated data in " + path);
        }
        u[i] = v;
    }
    return u;
}

}  // namespace nfp
