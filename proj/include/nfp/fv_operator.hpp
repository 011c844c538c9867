#pragma once

#include "nfp/coefficients.hpp"
#include "nfp/grid.hpp"

#include <vector>

namespace nfp {

/// Face drift in potential-difference form: D_face = -(Phi_R - Phi_L)/dx,
/// so the discrete drift is a gradient flux of Phi. Interior faces only;
/// boundary faces carry zero flux.
struct FaceDrift {
    std::vector<double> x;  ///< 1d: n-1 faces; 2d: (nx-1)*ny, index iy*(nx-1)+ix
    std::vector<double> y;  ///< 2d: nx*(ny-1), index iy*nx+ix
};

FaceDrift make_face_drift(const CoefficientSet& cs, const Grid& grid);

struct OperatorOptions {
    /// Weight of the upwind face value in the drift flux; the remainder uses
    /// the arithmetic-mean face value. 1 = full upwind.
    double drift_blend = 1.0;
    int threads = 1;
};

/// A_h u = div_h F with F = -(beta(u_R)-beta(u_L))/dx + D_face * bstar_face,
/// bstar(r) = b(r) r; sign convention matches u' + A_h u = 0.
struct DiscreteOperatorOutput {
    DensityField values;        ///< per-cell A_h u
    FaceDrift flux;             ///< per-face flux record (interior faces)
};

DiscreteOperatorOutput apply_operator(const CoefficientSet& cs, const DensityField& u,
                                      const OperatorOptions& opt = {});
DiscreteOperatorOutput apply_operator(const CoefficientSet& cs, const DensityField& u,
                                      const FaceDrift& drift, const OperatorOptions& opt = {});

}  // namespace nfp
