#include "bicrit/modelset.hpp"

#include <cmath>

namespace bicrit {

std::complex<double> model_point(double x, double y) {
    double rad = std::exp(-2 * M_PI * y);
    double th = -2 * M_PI * x;
    return {rad * std::cos(th), rad * std::sin(th)};
}

void model_unproject(const std::complex<double>& z, double& x, double& y) {
    y = -std::log(std::abs(z)) / (2 * M_PI);
    double t = -std::arg(z) / (2 * M_PI);
    x = t - std::floor(t);
}

namespace {

ModelSet build(const OstrowskiSeq& seq, int depth, const ModelOptions& opt, const double* sub_y) {
    if (depth < 1 || depth > seq.depth) throw UsageError("model_set: depth must be in [1, expansion depth]");
    auto ctx = make_tower_ctx<double>(seq, opt.c_seed);
    bool inner = opt.with_inner && !sub_y;
    if (sub_y) sublevel_seeds(ctx, *sub_y);

    ModelSet m;
    m.depth = depth;
    m.beta_angle = 1.0 - to_double(seq.beta(0));  // angle of e^{-2 pi i beta_0}
    m.beta_angle = m.beta_angle >= 1 ? m.beta_angle - 1 : m.beta_angle;
    m.beta_angle_alt = to_double(seq.beta(0));
    int N = opt.angle_samples;
    m.angles.resize(static_cast<size_t>(N));
    m.outer_radius.resize(static_cast<size_t>(N));
    if (inner) m.inner_gap_radius.resize(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
        double theta = static_cast<double>(k) / N;
        double x = theta == 0 ? 0.0 : 1.0 - theta;  // x = -theta mod 1
        m.angles[static_cast<size_t>(k)] = theta;
        double b = height_at(ctx, -1, x, depth, sub_y ? SeedKind::SubLevel : SeedKind::Base);
        m.outer_radius[static_cast<size_t>(k)] = std::exp(-2 * M_PI * b);
        if (inner) {
            double p = height_at(ctx, -1, x, depth, SeedKind::Peak);
            m.inner_gap_radius[static_cast<size_t>(k)] = std::exp(-2 * M_PI * p);
        }
    }
    return m;
}

}  // namespace

ModelSet model_set(const OstrowskiSeq& seq, int depth, const ModelOptions& opt) {
    return build(seq, depth, opt, nullptr);
}

ModelSet sub_level_set(const OstrowskiSeq& seq, double y, int depth, const ModelOptions& opt) {
    if (y < 0) throw DomainError("sub_level_set: y must be >= 0");
    return build(seq, depth, opt, &y);
}

std::vector<std::complex<double>> boundary_points(const ModelSet& m, bool inner) {
    const auto& rad = inner ? m.inner_gap_radius : m.outer_radius;
    std::vector<std::complex<double>> pts;
    pts.reserve(rad.size());
    for (size_t k = 0; k < rad.size(); ++k) {
        double th = 2 * M_PI * m.angles[k];
        pts.push_back({rad[k] * std::cos(th), rad[k] * std::sin(th)});
    }
    return pts;
}

double hausdorff_distance(const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b) {
    if (a.empty() || b.empty()) throw UsageError("hausdorff_distance: empty set");
    auto one_sided = [](const std::vector<std::complex<double>>& u, const std::vector<std::complex<double>>& v) {
        double worst = 0;
        for (const auto& p : u) {
            double best = 1e300;
            for (const auto& q : v) best = std::min(best, std::abs(p - q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace bicrit
