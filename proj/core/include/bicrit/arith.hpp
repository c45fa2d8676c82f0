#ifndef BICRIT_ARITH_HPP
#define BICRIT_ARITH_HPP

#include <string>
#include <vector>

#include "bicrit/errors.hpp"
#include "bicrit/ostrowski.hpp"
#include "bicrit/real.hpp"

namespace bicrit {

// Q_alpha(x) = 1/(1 + min{x, 1/|alpha| - x}), extended 1/|alpha|-periodically.
template <class T>
T q_alpha(const T& alpha, const T& x) {
    if (alpha == 0) throw DomainError("q_alpha: alpha must be nonzero");
    using std::abs;
    using std::floor;
    T period = 1 / abs(alpha);
    T xr = x - floor(x / period) * period;  // in [0, period)
    T m = xr < period - xr ? xr : period - xr;
    return 1 / (1 + m);
}

// M(r,s) = (1/2) log(1/r) + (1/2) log(1/(s+r)). M(r,0) = log(1/r).
template <class T>
T m_height(const T& r, const T& s) {
    using std::log;
    if (!(r > 0) || r > T(0.5) || s < 0 || s > T(0.5)) throw DomainError("m_height: (r,s) out of range");
    return (log(1 / r) + log(1 / (s + r))) / 2;
}

enum class Weights { Bicritical, Unicritical };

struct BrjunoEstimate {
    Real truncated_sum{0};
    Real tail_lower{0};
    Real tail_upper{0};
    int depth_used = 0;
};

// Truncated B(alpha,beta) = sum_n (prod_{i<n} alpha_i) M(alpha_n, beta_n);
// unicritical weights use log(1/alpha_n). The tail bracket assumes no
// deeper alpha can be smaller than 2^-precision_bits (crude but explicit):
// tail_upper = prod_{i<=N} alpha_i * 2 * precision_bits * log 2.
BrjunoEstimate brjuno_sum(const OstrowskiSeq& seq, Weights w);

// Truncated B(alpha_m, beta_m) for every level m = 0..depth (shared truncation
// at the sequence depth).
std::vector<Real> brjuno_levels(const OstrowskiSeq& seq, Weights w);

// Partial sums of the level-0 series by depth, for divergence diagnostics.
std::vector<Real> brjuno_partials(const OstrowskiSeq& seq, Weights w);

// Modified inverse Herman map. Three increasing branches glued at
// y = (1-s)/r and y = 1/r; the third branch uses f(r,s) = M(r,s), the unique
// continuous choice. s = 0 degenerates to log y / (ry + log(1/r) - 1).
// y = 0 maps to -infinity, represented by herman_neg_inf().
template <class T>
T herman_neg_inf() {
    return T(-1e300);
}

template <class T>
T herman_inv(const T& r, const T& s, const T& y) {
    using std::log;
    if (!(r > 0) || r > T(0.5) || s < 0 || s > T(0.5)) throw DomainError("herman_inv: (r,s) out of range");
    if (y < 0) throw DomainError("herman_inv: y must be >= 0");
    if (y == 0) return herman_neg_inf<T>();
    T knee1 = (1 - s) / r;
    T knee2 = 1 / r;
    if (y <= knee1) return (log(y) + log((s + r * y) / (s + r))) / 2;
    if (y <= knee2) return (log(y) + (r * y + log(1 / (s + r)) - (1 - s))) / 2;
    return r * y + m_height(r, s) - (1 - s / 2);
}

// Monotone bracketing inverse of herman_inv in y.
template <class T>
T herman_fwd(const T& r, const T& s, const T& t, const T& tol) {
    T lo = T(1e-12), hi = 2 / r;
    int guard = 0;
    while (herman_inv(r, s, lo) > t) {
        lo /= 1024;
        if (++guard > 100) throw NoConvergence("herman_fwd: lower bracket failed");
    }
    guard = 0;
    while (herman_inv(r, s, hi) < t) {
        hi *= 2;
        if (++guard > 4000) throw NoConvergence("herman_fwd: upper bracket failed");
    }
    for (int it = 0; it < 20000; ++it) {
        T mid = (lo + hi) / 2;
        if (hi - lo <= tol * (1 + abs(mid))) return mid;
        if (herman_inv(r, s, mid) < t)
            lo = mid;
        else
            hi = mid;
    }
    throw NoConvergence("herman_fwd: bisection failed");
}

enum class HermanConvention {
    ProofInverse,       // witness m: h^-1_{n+1} o ... o h^-1_{m} (B_trunc at level m) <= 0
    DefinitionForward,  // witness m: h_{m-1} o ... o h_n (0) >= B_trunc at level n
};

struct HermanVerdict {
    int level = 0;
    bool witnessed = false;
    int m = -1;  // witness depth when found
};

struct HermanOptions {
    int m_limit = 24;
    HermanConvention convention = HermanConvention::ProofInverse;
    Weights weights = Weights::Bicritical;
};

// Per-level Herman* verdicts at truncation. "undecided" (witnessed=false)
// means the search space at this truncation is exhausted, not a proof.
std::vector<HermanVerdict> herman_star_check(const OstrowskiSeq& seq, const HermanOptions& opt = {});

}  // namespace bicrit

#endif
