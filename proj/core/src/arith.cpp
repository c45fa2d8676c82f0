#include "bicrit/arith.hpp"

#include <algorithm>

namespace bicrit {

namespace {

Real weight_term(const OstrowskiSeq& seq, int n, Weights w) {
    Real r = seq.alpha(n);
    if (w == Weights::Unicritical) return log(1 / r);
    return m_height(r, seq.beta(n));
}

}  // namespace

BrjunoEstimate brjuno_sum(const OstrowskiSeq& seq, Weights w) {
    PrecisionGuard guard(seq.precision_bits);
    BrjunoEstimate est;
    Real prod = 1;
    for (int n = 0; n <= seq.depth; ++n) {
        est.truncated_sum += prod * weight_term(seq, n, w);
        prod *= seq.alpha(n);
    }
    est.depth_used = seq.depth;
    est.tail_lower = 0;
    est.tail_upper = prod * 2 * static_cast<int>(seq.precision_bits) * log(Real(2));
    return est;
}

std::vector<Real> brjuno_levels(const OstrowskiSeq& seq, Weights w) {
    PrecisionGuard guard(seq.precision_bits);
    std::vector<Real> B(static_cast<size_t>(seq.depth) + 2, Real(0));
    for (int m = seq.depth; m >= 0; --m)
        B[static_cast<size_t>(m)] = weight_term(seq, m, w) + seq.alpha(m) * B[static_cast<size_t>(m) + 1];
    B.pop_back();
    return B;
}

std::vector<Real> brjuno_partials(const OstrowskiSeq& seq, Weights w) {
    PrecisionGuard guard(seq.precision_bits);
    std::vector<Real> out;
    Real prod = 1, sum = 0;
    for (int n = 0; n <= seq.depth; ++n) {
        sum += prod * weight_term(seq, n, w);
        prod *= seq.alpha(n);
        out.push_back(sum);
    }
    return out;
}

std::vector<HermanVerdict> herman_star_check(const OstrowskiSeq& seq, const HermanOptions& opt) {
    PrecisionGuard guard(seq.precision_bits);
    std::vector<Real> B = brjuno_levels(seq, opt.weights);
    auto level_s = [&](int k) -> Real {
        return opt.weights == Weights::Unicritical ? Real(0) : seq.beta(k);
    };

    std::vector<HermanVerdict> out;
    for (int n = 0; n <= seq.depth; ++n) {
        HermanVerdict v;
        v.level = n;
        if (opt.convention == HermanConvention::ProofInverse) {
            // chain h^-1_{alpha_k,beta_k} applied from the deep level m down
            // to n+1, started at the level-m Brjuno value; witness when the
            // final value drops to <= 0
            for (int m = n + 1; m <= std::min(seq.depth, n + opt.m_limit); ++m) {
                Real val = B[static_cast<size_t>(m)];
                bool neg_inf = false;
                for (int k = m; k >= n + 1; --k) {
                    if (neg_inf) break;
                    if (val <= 0) {
                        neg_inf = true;  // h^-1 of a nonpositive value stays -inf
                        break;
                    }
                    val = herman_inv(seq.alpha(k), level_s(k), val);
                }
                if (neg_inf || val <= 0) {
                    v.witnessed = true;
                    v.m = m;
                    break;
                }
            }
        } else {
            // literal definition: forward tower from level n against B at level n
            Real target = B[static_cast<size_t>(n)];
            Real tower = 0;
            for (int m = n + 1; m <= std::min(seq.depth + 1, n + opt.m_limit); ++m) {
                // tower after applying h_{m-1}: h_r(y) = e^y below log(1/r),
                // else (y - log(1/r) + 1)/r
                Real r = seq.alpha(m - 1);
                Real s = level_s(m - 1);
                // forward map = functional inverse of herman_inv at level m-1
                Real knee = m_height(r, s) + s / 2;  // value of herman_inv at y=1/r
                if (tower <= 0) {
                    tower = herman_fwd(r, s, tower, Real(1e-30));
                } else if (tower >= knee) {
                    tower = (tower - m_height(r, s) + (1 - s / 2)) / r;  // linear branch
                } else {
                    tower = herman_fwd(r, s, tower, Real(1e-30));
                }
                if (tower >= target) {
                    v.witnessed = true;
                    v.m = m;
                    break;
                }
            }
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace bicrit
