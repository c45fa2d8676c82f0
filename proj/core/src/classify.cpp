#include "bicrit/classify.hpp"

#include <algorithm>
#include <cmath>

#include "bicrit/curves.hpp"

namespace bicrit {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::JordanCurve: return "JordanCurve";
        case Verdict::OneSidedHairyJordan: return "OneSidedHairyJordan";
        case Verdict::CantorBouquet: return "CantorBouquet";
        case Verdict::Undecided: return "Undecided";
    }
    return "?";
}

namespace {

bool divergent_at_truncation(const OstrowskiSeq& seq, const ClassifyPolicy& policy, const BrjunoEstimate& est) {
    if (to_double(est.truncated_sum) <= policy.divergence_threshold) return false;
    std::vector<Real> partials = brjuno_partials(seq, Weights::Bicritical);
    size_t n = partials.size();
    size_t back = std::min<size_t>(static_cast<size_t>(policy.trend_levels), n - 1);
    return partials[n - 1] > partials[n - 1 - back];
}

}  // namespace

TrichotomyVerdict classify(const OstrowskiSeq& seq, int depth, const ClassifyPolicy& policy) {
    PrecisionGuard guard(seq.precision_bits);
    OstrowskiSeq work = seq;
    work.depth = std::min(seq.depth, depth);  // deeper data stays but is not consulted

    TrichotomyVerdict out;
    out.depth_used = work.depth;
    out.brjuno_bi = brjuno_sum(work, Weights::Bicritical);
    out.brjuno_uni = brjuno_sum(work, Weights::Unicritical);
    out.divergent_at_truncation = divergent_at_truncation(work, policy, out.brjuno_bi);

    HermanOptions hopt;
    hopt.m_limit = policy.herman_m_limit;
    hopt.convention = policy.convention;
    hopt.weights = Weights::Bicritical;
    out.herman_bi = herman_star_check(work, hopt);
    hopt.weights = Weights::Unicritical;
    out.herman_uni = herman_star_check(work, hopt);

    int levels = std::min(policy.herman_levels, work.depth - 1);
    out.herman_all_witnessed = levels >= 0;
    for (int n = 0; n <= levels; ++n)
        if (!out.herman_bi[static_cast<size_t>(n)].witnessed) out.herman_all_witnessed = false;

    bool certified_bounded = seq.exact && seq.alpha_period > 0;

    if (out.divergent_at_truncation) {
        out.verdict = Verdict::CantorBouquet;
        out.tier = CertTier::AtTruncation;
    } else if (certified_bounded) {
        // periodic exact expansion: bounded type, hence Brjuno and Herman
        out.verdict = Verdict::JordanCurve;
        out.tier = CertTier::Certified;
        out.notes = "periodic exact expansion: bounded type implies Brjuno and Herman";
        if (!out.herman_all_witnessed)
            out.notes += "; warning: finite Herman search disagrees with the certificate";
    } else if (out.herman_all_witnessed) {
        out.verdict = Verdict::JordanCurve;
        out.tier = CertTier::AtTruncation;
    } else if (work.depth >= 2) {
        out.verdict = Verdict::OneSidedHairyJordan;
        out.tier = CertTier::AtTruncation;
    } else {
        out.verdict = Verdict::Undecided;
    }

    if (policy.gap_diagnostic && !out.divergent_at_truncation) {
        int safe = work.double_safe_depth();
        int gap_depth = std::min(work.depth, safe);
        if (gap_depth >= 1) {
            auto ctx = make_tower_ctx<double>(work, policy.c_seed);
            double worst = 0;
            for (int i = 0; i < policy.gap_samples; ++i) {
                double x = static_cast<double>(i) / policy.gap_samples;
                double b = height_at(ctx, -1, x, gap_depth, SeedKind::Base);
                double p = height_at(ctx, -1, x, gap_depth, SeedKind::Peak);
                worst = std::max(worst, p - b);
            }
            out.gap_max = worst;
            out.gap_depth = gap_depth;
        }
    }
    return out;
}

SiegelBracket siegel_bracket(const OstrowskiSeq& seq, int depth, const ClassifyPolicy& policy) {
    PrecisionGuard guard(seq.precision_bits);
    BrjunoEstimate est = brjuno_sum(seq, Weights::Bicritical);
    if (divergent_at_truncation(seq, policy, est))
        throw NotBrjuno("siegel_bracket: Brjuno sum diverges at truncation");
    int use_depth = std::min(depth, seq.depth);
    if (use_depth < 1) throw UsageError("siegel_bracket: depth too small");

    auto ctx = make_tower_ctx<double>(seq, policy.c_seed);
    int N = std::max(64, policy.gap_samples);
    double sup_p = -1e300, p0 = 0;
    for (int i = 0; i <= N; ++i) {
        double x = static_cast<double>(i) / N;
        double p = height_at(ctx, -1, x, use_depth, SeedKind::Peak);
        sup_p = std::max(sup_p, p);
        if (i == 0) p0 = p;
    }
    SiegelBracket out;
    double B = to_double(est.truncated_sum);
    out.predicted_radius = std::exp(-B);
    out.predicted_lo = std::exp(-(B + to_double(est.tail_upper)));
    out.predicted_hi = std::exp(-(B + to_double(est.tail_lower)));
    out.predicted_radius_2pi = std::exp(-2 * M_PI * B);
    out.r_inscribed = std::exp(-2 * M_PI * sup_p);
    out.r_at_zero = std::exp(-2 * M_PI * p0);
    out.factor = out.r_inscribed / out.predicted_radius;
    return out;
}

WitnessReport nonequivalence_witness(const OstrowskiSeq& alpha_seq, int depth, const ClassifyPolicy& policy) {
    PrecisionGuard guard(alpha_seq.precision_bits);
    BrjunoEstimate est = brjuno_sum(alpha_seq, Weights::Bicritical);
    if (!divergent_at_truncation(alpha_seq, policy, est))
        throw AlphaLooksBrjuno("nonequivalence_witness: alpha shows no divergence at truncation");

    int N = std::min(depth, alpha_seq.depth) - 1;
    if (N < 1) throw UsageError("nonequivalence_witness: depth too small");

    // backward construction: beta_n = alpha_n (b_n + beta_{n+1}) with
    // b_n = floor(1/(2 alpha_n) - beta_{n+1}) pins beta_n into [1/2-alpha_n, 1/2]
    std::vector<Real> beta(static_cast<size_t>(N) + 2), bcoef(static_cast<size_t>(N) + 1);
    beta[static_cast<size_t>(N) + 1] = Real(1) / 2;
    for (int n = N; n >= 0; --n) {
        Real an = alpha_seq.alpha(n);
        Real b = floor(1 / (2 * an) - beta[static_cast<size_t>(n) + 1]);
        if (b < 0) b = 0;
        bcoef[static_cast<size_t>(n)] = b;
        beta[static_cast<size_t>(n)] = an * (b + beta[static_cast<size_t>(n) + 1]);
    }

    // assemble the witness pair as one sequence (deltas all +1)
    OstrowskiSeq wit = alpha_seq;
    wit.betas.assign(wit.alphas.size(), Real(0));
    wit.delta.assign(wit.alphas.size(), 1);
    wit.b_coef.assign(wit.alphas.size() - 1, Real(0));
    wit.beta_surd.clear();
    wit.exact = false;
    for (int n = 0; n <= N && n < static_cast<int>(wit.betas.size()); ++n)
        wit.betas[static_cast<size_t>(n)] = beta[static_cast<size_t>(n)];
    for (int n = N + 1; n < static_cast<int>(wit.betas.size()); ++n) wit.betas[static_cast<size_t>(n)] = Real(1) / 2;
    for (int n = 0; n <= N && n < static_cast<int>(wit.b_coef.size()); ++n)
        wit.b_coef[static_cast<size_t>(n)] = bcoef[static_cast<size_t>(n)];

    WitnessReport rep;
    rep.beta = beta[0];
    rep.x = beta[0];
    rep.windows_ok = true;
    for (int n = 0; n <= N; ++n) {
        Real lo = Real(1) / 2 - alpha_seq.alpha(n);
        if (wit.betas[static_cast<size_t>(n)] < lo - Real(1e-30) || wit.betas[static_cast<size_t>(n)] > Real(1) / 2)
            rep.windows_ok = false;
    }

    OstrowskiSeq zero = alpha_seq;
    zero.betas.assign(zero.alphas.size(), Real(0));
    zero.delta.assign(zero.alphas.size(), 1);
    zero.b_coef.assign(zero.alphas.size() - 1, Real(0));
    zero.beta_surd.clear();
    zero.exact = false;

    auto wit_ctx = make_tower_ctx<Real>(wit, policy.c_seed);
    auto zero_ctx = make_tower_ctx<Real>(zero, policy.c_seed);
    Real x = rep.x;
    for (int j = std::min(4, depth); j <= depth && j <= alpha_seq.depth; ++j) {
        rep.depths.push_back(j);
        rep.height_witness.push_back(to_double(height_at(wit_ctx, -1, x, j, SeedKind::Base)));
        rep.height_zero.push_back(to_double(height_at(zero_ctx, -1, x, j, SeedKind::Base)));
    }
    double h0 = std::max(1e-6, rep.height_zero.front());
    double h1 = rep.height_zero.back();
    rep.doublings = h1 > h0 ? static_cast<int>(std::floor(std::log2(h1 / h0))) : 0;
    return rep;
}

}  // namespace bicrit
