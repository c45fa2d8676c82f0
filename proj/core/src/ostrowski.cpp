#include "bicrit/ostrowski.hpp"

#include <algorithm>
#include <cmath>

#include "bicrit/errors.hpp"

namespace bicrit {

namespace mp = boost::multiprecision;

RealParam RealParam::from_decimal(const std::string& text, unsigned bits) {
    if (bits < 64) throw UsageError("precision_bits must be >= 64");
    RealParam p;
    p.source = ParamSource::Decimal;
    p.precision_bits = bits;
    PrecisionGuard g(bits);
    p.value = Real(text);
    return p;
}

RealParam RealParam::from_double(double x, unsigned bits) {
    if (bits < 64) throw UsageError("precision_bits must be >= 64");
    RealParam p;
    p.source = ParamSource::Decimal;
    p.precision_bits = bits;
    p.value = Real(x);
    return p;
}

RealParam RealParam::from_surd(const Surd& s, unsigned bits) {
    RealParam p;
    p.source = ParamSource::SurdExact;
    p.surd = s;
    p.precision_bits = bits;
    PrecisionGuard g(bits);
    p.value = s.to_real();
    return p;
}

NearestIntResult nearest_int_dist(const Real& x) {
    if (!mp::isfinite(x)) throw DomainError("nearest_int_dist: non-finite input");
    Real n = round(x);
    Real frac = x - n;  // in [-1/2, 1/2]
    NearestIntResult out;
    out.n = n;
    if (frac * 2 == -1) {
        // tie at exactly -1/2: break toward eps = +1 with n = round-down
        out.n = n - 1;
        out.dist = Real(0.5);
        out.eps = 1;
        out.tie = true;
    } else if (frac >= 0) {
        out.dist = frac;
        out.eps = 1;
        out.tie = (frac * 2 == 1);
    } else {
        out.dist = -frac;
        out.eps = -1;
    }
    return out;
}

OstrowskiSeq::Level OstrowskiSeq::level(int n) const {
    return Level{alpha(n), beta(n), eps_at(n), delta_at(n)};
}

Real OstrowskiSeq::prod_alpha(int n) const {
    Real p = 1;
    for (int i = 0; i <= n; ++i) p *= alpha(i);
    return p;
}

int OstrowskiSeq::double_safe_depth() const {
    int j = -1;
    for (int n = 0; n <= depth; ++n) {
        double a = to_double(alphas[static_cast<size_t>(n)]);
        if (a < 1e-250 || a == 0.0) break;
        if (n < depth && to_double(a_coef[static_cast<size_t>(n + 1)]) > 9e15) break;
        j = n;
    }
    return j;
}

namespace {

long bit_loss(const Real& alpha_n) {
    // each Gauss step divides by alpha_n, amplifying absolute error
    double l = to_double(-log2(alpha_n));
    return static_cast<long>(std::ceil(std::max(1.0, l))) + 2;
}

}  // namespace

OstrowskiSeq ostrowski_expand(const RealParam& alpha, const RealParam& beta, int depth,
                              const ExpandOptions& opt) {
    if (depth < 0) throw UsageError("depth must be >= 0");
    unsigned bits = std::max(alpha.precision_bits, beta.precision_bits);
    PrecisionGuard guard(bits);

    OstrowskiSeq seq;
    seq.precision_bits = bits;
    seq.exact = alpha.exact() && beta.exact();
    bool alpha_exact = alpha.exact();

    // level -1 -> 0 reduction
    Real av = alpha.exact() ? alpha.surd->to_real() : alpha.value;
    Real bv = beta.exact() ? beta.surd->to_real() : beta.value;
    long trusted = static_cast<long>(bits);

    Surd as = alpha.exact() ? *alpha.surd : Surd();
    Surd bs;
    if (seq.exact) {
        bs = *beta.surd;
        if (bs.d != as.d) {
            // promote a rational beta into alpha's field
            if (!bs.is_rational()) throw UsageError("alpha and beta surds live in different fields");
            bs = Surd(bs.p, BigInt(0), bs.e, as.d);
        }
    }

    {
        NearestIntResult r;
        if (alpha_exact) {
            auto ni = as.nearest();
            as = ni.dist;
            seq.a_coef.push_back(Real(ni.n.str()));
            seq.eps.push_back(ni.eps);
            seq.alphas.push_back(as.to_real());
        } else {
            r = nearest_int_dist(av);
            seq.a_coef.push_back(r.n);
            seq.eps.push_back(r.eps);
            seq.alphas.push_back(r.dist);
        }
        if (seq.exact) {
            auto ni = bs.nearest();
            bs = ni.dist;
            seq.delta.push_back(ni.eps);
            seq.betas.push_back(bs.to_real());
        } else {
            auto rb = nearest_int_dist(bv);
            seq.delta.push_back(rb.eps);
            seq.betas.push_back(rb.dist);
        }
    }
    if (alpha_exact) seq.alpha_surd.push_back(as);
    if (seq.exact) seq.beta_surd.push_back(bs);
    seq.trusted_bits.push_back(trusted);

    auto alpha_is_zero = [&](int n) -> bool {
        if (alpha_exact) return seq.alpha_surd[static_cast<size_t>(n)].is_zero();
        return seq.alphas[static_cast<size_t>(n)] == 0 ||
               seq.alphas[static_cast<size_t>(n)] < ldexp(Real(1), -static_cast<int>(trusted));
    };

    for (int n = 0; n < depth; ++n) {
        if (alpha_is_zero(n)) throw RationalAlpha("alpha_" + std::to_string(n) + " vanished: rational parameter");

        if (!alpha_exact) {
            trusted -= bit_loss(seq.alphas[static_cast<size_t>(n)]);
            if (trusted < opt.min_trusted_bits) {
                if (opt.throw_on_precision)
                    throw PrecisionExhausted("trusted bits fell to " + std::to_string(trusted) + " at level " +
                                             std::to_string(n));
                seq.truncated_early = true;
                seq.truncation_reason =
                    "precision exhausted at level " + std::to_string(n) + " (trusted bits " + std::to_string(trusted) + ")";
                break;
            }
        }

        // alpha step
        if (alpha_exact) {
            Surd inv = seq.alpha_surd[static_cast<size_t>(n)].recip();
            auto ni = inv.nearest();
            seq.a_coef.push_back(Real(ni.n.str()));
            seq.eps.push_back(ni.eps);
            seq.alpha_surd.push_back(ni.dist);
            seq.alphas.push_back(ni.dist.to_real());
        } else {
            Real inv = 1 / seq.alphas[static_cast<size_t>(n)];
            auto r = nearest_int_dist(inv);
            seq.a_coef.push_back(r.n);
            seq.eps.push_back(r.eps);
            seq.alphas.push_back(r.dist);
        }

        // beta step
        if (seq.exact) {
            Surd ratio = seq.beta_surd[static_cast<size_t>(n)].div(seq.alpha_surd[static_cast<size_t>(n)]);
            auto ni = ratio.nearest();
            seq.b_coef.push_back(Real(ni.n.str()));
            seq.delta.push_back(ni.eps);
            seq.beta_surd.push_back(ni.dist);
            seq.betas.push_back(ni.dist.to_real());
        } else {
            Real ratio = seq.betas[static_cast<size_t>(n)] / seq.alphas[static_cast<size_t>(n)];
            auto r = nearest_int_dist(ratio);
            seq.b_coef.push_back(r.n);
            seq.delta.push_back(r.eps);
            seq.betas.push_back(r.dist);
        }
        seq.trusted_bits.push_back(trusted);

        // periodicity detection on the exact path
        int m = static_cast<int>(seq.alphas.size()) - 1;
        if (alpha_exact && seq.alpha_period == 0) {
            for (int k = 0; k < m; ++k) {
                if (seq.alpha_surd[static_cast<size_t>(k)].eq(seq.alpha_surd[static_cast<size_t>(m)])) {
                    seq.alpha_period_start = k;
                    seq.alpha_period = m - k;
                    break;
                }
            }
        }
        if (seq.exact && seq.pair_period == 0) {
            for (int k = 0; k < m; ++k) {
                if (seq.alpha_surd[static_cast<size_t>(k)].eq(seq.alpha_surd[static_cast<size_t>(m)]) &&
                    seq.beta_surd[static_cast<size_t>(k)].eq(seq.beta_surd[static_cast<size_t>(m)])) {
                    seq.pair_period_start = k;
                    seq.pair_period = m - k;
                    break;
                }
            }
        }
    }

    seq.depth = static_cast<int>(seq.alphas.size()) - 1;
    return seq;
}

OstrowskiSeq seq_from_expansion(const ExplicitExpansion& in) {
    size_t L = in.a.size();
    if (in.eps.size() != L || in.b.size() != L || in.delta.size() != L)
        throw UsageError("expansion arrays a/eps/b/delta must have equal length");

    // Precision must cover the coefficient magnitudes: descent abscissae
    // cancel against integer translates of size prod a_n. Coefficients beyond
    // the cap stay representable but are out of reach for descents (their
    // levels only feed the arithmetic side).
    constexpr double kBoostCap = 32768;
    double need = 256;
    for (const Real& a : in.a) need += std::max(1.0, to_double(log2(a + 1)));
    need = std::min(need, kBoostCap);
    unsigned bits = std::max<unsigned>(in.precision_bits, static_cast<unsigned>(need) + 64);
    PrecisionGuard guard(bits);

    OstrowskiSeq seq;
    seq.precision_bits = bits;
    seq.depth = static_cast<int>(L);
    seq.trusted_bits.assign(L + 1, static_cast<long>(bits));

    // tail closure
    Real tail_alpha = sqrt(Real(2)) - 1;
    Real tail_beta = 0;

    std::vector<Real> alphas(L + 1), betas(L + 1);
    alphas[L] = tail_alpha;
    betas[L] = tail_beta;
    for (size_t n = L; n-- > 0;) {
        Real denom = in.a[n] + Real(in.eps[n]) * alphas[n + 1];
        if (denom <= 2) throw UsageError("expansion level " + std::to_string(n) + ": a_n + eps*alpha exceeds alpha_n<1/2 range");
        alphas[n] = 1 / denom;
        betas[n] = alphas[n] * (in.b[n] + Real(in.delta[n]) * betas[n + 1]);
        if (betas[n] < 0 || betas[n] > Real(1) / 2)
            throw UsageError("expansion level " + std::to_string(n) + ": beta_n outside [0,1/2]");
    }

    seq.alphas = std::move(alphas);
    seq.betas = std::move(betas);
    seq.a_coef.push_back(Real(0));  // a_{-1}
    seq.eps.push_back(in.eps0);
    seq.delta.push_back(in.delta0);
    for (size_t n = 0; n < L; ++n) {
        seq.a_coef.push_back(in.a[n]);
        seq.b_coef.push_back(in.b[n]);
        seq.eps.push_back(in.eps[n]);
        seq.delta.push_back(in.delta[n]);
    }
    return seq;
}

Real reconstruct_beta(const OstrowskiSeq& seq) {
    PrecisionGuard guard(seq.precision_bits);
    Real sum = 0;
    Real prod = 1;
    Real sign = 1;
    for (size_t n = 0; n < seq.b_coef.size(); ++n) {
        prod *= seq.alphas[n];
        if (n > 0) sign *= seq.delta[n];  // cumulative delta_1..delta_n
        sum += sign * seq.b_coef[n] * prod;
    }
    return sum;
}

OstrowskiSeq shift_seq(const OstrowskiSeq& seq, int k) {
    if (k < 0 || k > seq.depth) throw UsageError("shift_seq: k out of range");
    OstrowskiSeq out;
    out.precision_bits = seq.precision_bits;
    out.exact = seq.exact;
    out.truncated_early = seq.truncated_early;
    out.truncation_reason = seq.truncation_reason;
    size_t uk = static_cast<size_t>(k);
    out.alphas.assign(seq.alphas.begin() + uk, seq.alphas.end());
    out.betas.assign(seq.betas.begin() + uk, seq.betas.end());
    out.eps.assign(seq.eps.begin() + uk, seq.eps.end());
    out.delta.assign(seq.delta.begin() + uk, seq.delta.end());
    out.trusted_bits.assign(seq.trusted_bits.begin() + uk, seq.trusted_bits.end());
    out.a_coef.assign(seq.a_coef.begin() + uk, seq.a_coef.end());
    out.a_coef[0] = 0;  // a_{-1} of the shifted pair is not represented
    out.b_coef.assign(seq.b_coef.begin() + std::min(seq.b_coef.size(), uk), seq.b_coef.end());
    if (!seq.alpha_surd.empty())
        out.alpha_surd.assign(seq.alpha_surd.begin() + uk, seq.alpha_surd.end());
    if (!seq.beta_surd.empty()) out.beta_surd.assign(seq.beta_surd.begin() + uk, seq.beta_surd.end());
    out.depth = seq.depth - k;
    if (seq.alpha_period > 0) {
        out.alpha_period = seq.alpha_period;
        out.alpha_period_start = std::max(0, seq.alpha_period_start - k);
    }
    if (seq.pair_period > 0) {
        out.pair_period = seq.pair_period;
        out.pair_period_start = std::max(0, seq.pair_period_start - k);
    }
    return out;
}

}  // namespace bicrit
