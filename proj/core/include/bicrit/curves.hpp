#ifndef BICRIT_CURVES_HPP
#define BICRIT_CURVES_HPP

#include <cstddef>
#include <vector>

#include "bicrit/coords.hpp"
#include "bicrit/ostrowski.hpp"

namespace bicrit {

enum class CurveKind { Base, Peak, LevelSet };

// Sampled height function over [0, 1/alpha_n] (or [0,1] at level -1).
struct HeightCurve {
    int level = -1;
    int stage = 0;
    CurveKind kind = CurveKind::Base;
    std::vector<double> xs;
    std::vector<double> ys;
    double convergence_delta = 0;  // max pointwise change at the last stage

    double eval(double x) const;  // linear interpolation, clamped
};

enum class SeedKind { Base, Peak, SubLevel };

// Per-level evaluation contexts plus the seed data the descent needs.
// Levels index the expansion; level -1 is the unit-periodic top where the
// model set lives.
template <class T>
struct TowerCtx {
    const OstrowskiSeq* seq = nullptr;
    std::vector<LevelCtx<T>> levels;  // contexts for Y_0..Y_depth
    std::vector<T> alphas;            // alpha_0..alpha_depth
    std::vector<T> a_coefs;           // a_0..a_{depth-1} (level coefficients)
    std::vector<T> peak_seed;         // B(alpha_m,beta_m)/2pi + C_seed per level m
    std::vector<T> sub_seed;          // y_m chain for SeedKind::SubLevel (set by sublevel_seeds)
    int max_level = 0;

    T alpha(int n) const { return alphas[static_cast<size_t>(n)]; }
};

namespace curves_detail {

template <class T>
bool level_fits(const OstrowskiSeq& seq, int n);

template <>
inline bool level_fits<double>(const OstrowskiSeq& seq, int n) {
    // expansion levels with alpha below double range only feed the
    // multiprecision arithmetic side
    double a = to_double(seq.alpha(n));
    if (!(a > 1e-280)) return false;
    return n >= seq.depth || to_double(seq.a(n)) < 9e15;
}

template <>
inline bool level_fits<Real>(const OstrowskiSeq&, int) {
    return true;
}

}  // namespace curves_detail

template <class T>
TowerCtx<T> make_tower_ctx(const OstrowskiSeq& seq, double c_seed = 2.0) {
    TowerCtx<T> ctx;
    ctx.seq = &seq;
    std::vector<Real> B = brjuno_levels(seq, Weights::Bicritical);
    const T two_pi = 2 * Num<T>::pi();
    int top = seq.depth;
    for (int n = 0; n <= seq.depth; ++n) {
        if (!curves_detail::level_fits<T>(seq, n)) {
            top = n - 1;
            break;
        }
        ctx.levels.push_back(level_ctx<T>(seq, n));
        ctx.alphas.push_back(Num<T>::from(seq.alpha(n)));
        ctx.peak_seed.push_back(Num<T>::from(B[static_cast<size_t>(n)]) / two_pi + T(c_seed));
    }
    ctx.max_level = top;
    for (int n = 0; n + 1 <= top; ++n) ctx.a_coefs.push_back(Num<T>::from(seq.a(n)));
    return ctx;
}

namespace curves_detail {

// One abscissa step down the tower: level m -> m+1 for m >= 0, picking the
// integer translate from the I^{j+1} union (K-part for eps=-1 at a_m-1,
// J-part for eps=+1 at a_m+1).
template <class T>
T abscissa_step(const TowerCtx<T>& ctx, int m, const T& x, T* l_out = nullptr) {
    using std::ceil;
    using std::floor;
    const T& a = ctx.a_coefs[static_cast<size_t>(m)];
    int eps_next = ctx.levels[static_cast<size_t>(m) + 1].eps;
    T l;
    if (eps_next == -1) {
        l = floor(x);
        if (l < 0) l = 0;
        if (l > a - 1) l = a - 1;
        if (l_out) *l_out = l;
        return (x - l) / ctx.alpha(m + 1);
    }
    l = ceil(x);
    if (l < 1) l = 1;
    if (l > a + 1) l = a + 1;
    if (l_out) *l_out = l;
    return (l - x) / ctx.alpha(m + 1);
}

// Level -1 -> 0: the model window [0,1] is one full translate of the
// level-0 curve (integer translations of alpha drop out of the model).
template <class T>
T abscissa_top(const TowerCtx<T>& ctx, const T& x) {
    if (ctx.levels[0].eps == -1) return x / ctx.alpha(0);
    return (1 - x) / ctx.alpha(0);
}

}  // namespace curves_detail

// Height of the stage-j curve at level n and abscissa x, by exact pointwise
// descent: walk the abscissa down j levels, then push the seed height back
// up through Im Y.
template <class T>
T height_at(const TowerCtx<T>& ctx, int n, T x, int j, SeedKind seed) {
    if (n < -1) throw UsageError("height_at: bad level");
    int deepest = n + j;
    if (deepest > ctx.max_level || (seed == SeedKind::Peak && deepest + 1 > ctx.max_level))
        throw UsageError("height_at: depth exceeds the expansion");
    std::vector<T> xs(static_cast<size_t>(j) + 1);
    xs[0] = x;
    for (int i = 0; i < j; ++i) {
        int m = n + i;
        xs[static_cast<size_t>(i) + 1] = (m == -1) ? curves_detail::abscissa_top(ctx, xs[static_cast<size_t>(i)])
                                                   : curves_detail::abscissa_step(ctx, m, xs[static_cast<size_t>(i)]);
    }
    T h;
    switch (seed) {
        case SeedKind::Base:
            h = T(-1);
            break;
        case SeedKind::Peak:
            h = ctx.peak_seed[static_cast<size_t>(deepest) + 1];
            break;
        case SeedKind::SubLevel:
            h = ctx.sub_seed[static_cast<size_t>(deepest)] - 1;
            break;
    }
    for (int i = j - 1; i >= 0; --i) {
        int m = n + i;  // pushing level m+1 -> m uses Y_{m+1}
        h = y_level_im(ctx.levels[static_cast<size_t>(m) + 1], xs[static_cast<size_t>(i) + 1], h);
    }
    return h;
}

// y_n chain for the sub-level sets: y_{-1} = y, y_{n+1} = Im Y_{n+1}^{-1}(i y_n).
// Fills ctx.sub_seed with y_0..y_depth.
template <class T>
void sublevel_seeds(TowerCtx<T>& ctx, const T& y, int iters = 120) {
    ctx.sub_seed.assign(static_cast<size_t>(ctx.max_level) + 1, T(0));
    T cur = y;
    for (int n = 0; n <= ctx.max_level; ++n) {
        Cx<T> back = y_level_inverse(ctx.levels[static_cast<size_t>(n)], Cx<T>{T(0), cur}, iters);
        cur = back.im;
        ctx.sub_seed[static_cast<size_t>(n)] = cur;
    }
}

// Spec-level curve builders (double path; callers needing extreme parameters
// use height_at<Real> directly).
HeightCurve base_function(const OstrowskiSeq& seq, int n, int depth, int samples_per_unit = 512,
                          double c_seed = 2.0);
HeightCurve peak_function(const OstrowskiSeq& seq, int n, int depth, int samples_per_unit = 512,
                          double c_seed = 2.0);

// Grid pushforward of one level (the I^{j+1}_n union as a curve operation).
HeightCurve push_height(const OstrowskiSeq& seq, int n, const HeightCurve& curve, int samples_out,
                        double c_seed = 2.0);

struct HairReport {
    double worst_gap = 0;   // worst over samples of the best nearby height match
    double window = 0;      // abscissa window used
    int samples = 0;
};

// Finite-depth surrogate for hair accumulation: every sample must see a
// nearby height within delta on both sides.
HairReport hair_accumulation_check(const HeightCurve& curve, int window_cells = 64);

}  // namespace bicrit

#endif
