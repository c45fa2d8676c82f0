#include "bicrit/curves.hpp"

#include <algorithm>
#include <cmath>

namespace bicrit {

double HeightCurve::eval(double x) const {
    if (xs.empty()) throw UsageError("empty curve");
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    size_t i = static_cast<size_t>(it - xs.begin());
    double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

namespace {

HeightCurve sampled_curve(const OstrowskiSeq& seq, int n, int depth, int samples_per_unit, double c_seed,
                          SeedKind seed, CurveKind kind) {
    auto ctx = make_tower_ctx<double>(seq, c_seed);
    double width = n == -1 ? 1.0 : 1.0 / to_double(seq.alpha(n));
    int count = std::max(8, static_cast<int>(std::ceil(width * samples_per_unit))) + 1;
    HeightCurve c;
    c.level = n;
    c.stage = depth;
    c.kind = kind;
    c.xs.resize(static_cast<size_t>(count));
    c.ys.resize(static_cast<size_t>(count));
    double worst_delta = 0;
    for (int i = 0; i < count; ++i) {
        double x = width * i / (count - 1);
        c.xs[static_cast<size_t>(i)] = x;
        double y = height_at(ctx, n, x, depth, seed);
        c.ys[static_cast<size_t>(i)] = y;
        if (depth > 0) {
            double prev = height_at(ctx, n, x, depth - 1, seed);
            worst_delta = std::max(worst_delta, std::abs(y - prev));
        }
    }
    c.convergence_delta = worst_delta;
    return c;
}

}  // namespace

HeightCurve base_function(const OstrowskiSeq& seq, int n, int depth, int samples_per_unit, double c_seed) {
    return sampled_curve(seq, n, depth, samples_per_unit, c_seed, SeedKind::Base, CurveKind::Base);
}

HeightCurve peak_function(const OstrowskiSeq& seq, int n, int depth, int samples_per_unit, double c_seed) {
    return sampled_curve(seq, n, depth, samples_per_unit, c_seed, SeedKind::Peak, CurveKind::Peak);
}

HeightCurve push_height(const OstrowskiSeq& seq, int n, const HeightCurve& curve, int samples_out,
                        double c_seed) {
    if (curve.level != n + 1) throw UsageError("push_height: curve level must be n+1");
    if (curve.xs.size() < 2) throw GridTooCoarse("push_height: input needs at least two samples");
    double in_step = 0;
    for (size_t i = 1; i < curve.xs.size(); ++i) in_step = std::max(in_step, curve.xs[i] - curve.xs[i - 1]);
    if (in_step > 0.5) throw GridTooCoarse("push_height: input grid cannot resolve unit translates");

    auto ctx = make_tower_ctx<double>(seq, c_seed);
    double width = n == -1 ? 1.0 : 1.0 / to_double(seq.alpha(n));
    int count = std::max(8, samples_out) + 1;
    double out_step = width / (count - 1);
    if (out_step > 0.5) throw GridTooCoarse("push_height: output grid folds the translate structure");

    HeightCurve out;
    out.level = n;
    out.stage = curve.stage + 1;
    out.kind = curve.kind;
    out.xs.resize(static_cast<size_t>(count));
    out.ys.resize(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        double x = width * i / (count - 1);
        double xn;
        if (n == -1)
            xn = curves_detail::abscissa_top(ctx, x);
        else
            xn = curves_detail::abscissa_step(ctx, n, x);
        double h = curve.eval(xn);
        out.xs[static_cast<size_t>(i)] = x;
        out.ys[static_cast<size_t>(i)] = y_level_im(ctx.levels[static_cast<size_t>(n) + 1], xn, h);
    }
    return out;
}

HairReport hair_accumulation_check(const HeightCurve& curve, int window_cells) {
    HairReport rep;
    size_t n = curve.xs.size();
    rep.samples = static_cast<int>(n);
    if (n < 3) return rep;
    rep.window = window_cells * (curve.xs.back() - curve.xs.front()) / static_cast<double>(n - 1);
    double worst = 0;
    for (size_t i = 0; i < n; ++i) {
        double here = curve.ys[i];
        double left = 1e300, right = 1e300;
        for (int d = 1; d <= window_cells; ++d) {
            if (i >= static_cast<size_t>(d)) left = std::min(left, std::abs(curve.ys[i - static_cast<size_t>(d)] - here));
            if (i + static_cast<size_t>(d) < n)
                right = std::min(right, std::abs(curve.ys[i + static_cast<size_t>(d)] - here));
        }
        double gap = std::max(left == 1e300 ? 0 : left, right == 1e300 ? 0 : right);
        worst = std::max(worst, gap);
    }
    rep.worst_gap = worst;
    return rep;
}

}  // namespace bicrit
