#ifndef BICRIT_MODELSET_HPP
#define BICRIT_MODELSET_HPP

#include <complex>
#include <optional>
#include <vector>

#include "bicrit/curves.hpp"
#include "bicrit/ostrowski.hpp"

namespace bicrit {

// Radial model of M_{alpha,beta}: per-angle outer radius e^{-2 pi b_{-1}}
// and, when the Brjuno truncation is finite, the inner gap radius
// e^{-2 pi p_{-1}} bounding the Siegel disk model.
struct ModelSet {
    int depth = 0;
    std::vector<double> angles;  // in [0,1), turns
    std::vector<double> outer_radius;
    std::vector<double> inner_gap_radius;  // empty when peaks were not computed
    double beta_angle = 0;                 // candidate marker angles for e^{+-2 pi i beta}
    double beta_angle_alt = 0;

    bool has_inner() const { return !inner_gap_radius.empty(); }
};

// w = x + iy  ->  s(e^{2 pi i w}): radius e^{-2 pi y} at angle -x (turns).
std::complex<double> model_point(double x, double y);
// inverse: angle/radius back to the fundamental strip x in [0,1), y
void model_unproject(const std::complex<double>& z, double& x, double& y);

struct ModelOptions {
    int angle_samples = 1024;
    double c_seed = 2.0;
    bool with_inner = true;  // compute peak curve (requires one extra level)
};

ModelSet model_set(const OstrowskiSeq& seq, int depth, const ModelOptions& opt = {});

// Invariant sub-level model at t = e^{-2 pi y}; y = 0 reproduces model_set's
// outer boundary.
ModelSet sub_level_set(const OstrowskiSeq& seq, double y, int depth, const ModelOptions& opt = {});

std::vector<std::complex<double>> boundary_points(const ModelSet& m, bool inner = false);

double hausdorff_distance(const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b);

}  // namespace bicrit

#endif
