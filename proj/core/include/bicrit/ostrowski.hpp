#ifndef BICRIT_OSTROWSKI_HPP
#define BICRIT_OSTROWSKI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bicrit/param.hpp"
#include "bicrit/real.hpp"
#include "bicrit/surd.hpp"

namespace bicrit {

struct NearestIntResult {
    Real dist;  // in [0, 1/2]
    Real n;     // integer-valued
    int eps;    // x = n + eps*dist
    bool tie = false;
};

NearestIntResult nearest_int_dist(const Real& x);

// Truncated expansion of (alpha, beta) under (a,b) -> (d(1/a,Z), d(b/a,Z)).
//
// Index conventions, for n = 0..depth:
//   1/alpha_n = a_n + eps_{n+1} alpha_{n+1}
//   beta_n/alpha_n = b_n + delta_{n+1} beta_{n+1}
//   alpha = a_{-1} + eps_0 alpha_0,   beta = (integer) + delta_0 beta_0
// a_n and b_n are stored as integer-valued Reals so that expansion-input
// coefficients far beyond 2^63 stay representable.
struct OstrowskiSeq {
    int depth = 0;                    // N: levels 0..N are populated
    std::vector<Real> alphas, betas;  // size N+1
    std::vector<int> eps, delta;      // size N+1, eps[n] = eps_n
    std::vector<Real> a_coef;         // size N+1, a_coef[n] = a_{n-1}
    std::vector<Real> b_coef;         // size N, b_coef[n] = b_n

    unsigned precision_bits = 256;
    std::vector<long> trusted_bits;  // per level, decimal path bookkeeping
    bool truncated_early = false;
    std::string truncation_reason;

    bool exact = false;  // both components on the surd path
    std::vector<Surd> alpha_surd, beta_surd;
    int alpha_period = 0;       // >0 once the alpha state repeats (exact path)
    int alpha_period_start = 0;
    int pair_period = 0;        // >0 once the (alpha,beta) state repeats
    int pair_period_start = 0;

    struct Level {
        Real r, s;
        int eps, delta;
    };
    // Parameters of the level-n change of coordinates Y_n.
    Level level(int n) const;

    Real alpha(int n) const { return alphas.at(static_cast<size_t>(n)); }
    Real beta(int n) const { return betas.at(static_cast<size_t>(n)); }
    Real a(int n) const { return a_coef.at(static_cast<size_t>(n + 1)); }  // n in [-1, N-1]
    Real b(int n) const { return b_coef.at(static_cast<size_t>(n)); }
    int eps_at(int n) const { return eps.at(static_cast<size_t>(n)); }
    int delta_at(int n) const { return delta.at(static_cast<size_t>(n)); }

    // prod_{i=0}^{n} alpha_i; n = -1 gives 1
    Real prod_alpha(int n) const;

    // Deepest level j such that every alpha_n (n <= j) and a_n is safely
    // representable in double for the fast evaluation path.
    int double_safe_depth() const;
};

struct ExpandOptions {
    bool throw_on_precision = false;  // else truncate with a flag
    long min_trusted_bits = 32;
};

OstrowskiSeq ostrowski_expand(const RealParam& alpha, const RealParam& beta, int depth,
                              const ExpandOptions& opt = {});

// Explicit-expansion input. a/b hold a_0.., b_0..; eps/delta hold
// eps_1.., delta_1.. (the leading signs default to +1). The tail beyond the
// given coefficients is closed with alpha = sqrt(2)-1, beta = 0.
struct ExplicitExpansion {
    std::vector<Real> a;
    std::vector<int> eps;
    std::vector<Real> b;
    std::vector<int> delta;
    int eps0 = 1, delta0 = 1;
    unsigned precision_bits = 256;  // raised automatically if coefficients demand it
};

OstrowskiSeq seq_from_expansion(const ExplicitExpansion& in);

// Partial sum of beta_0 = sum_n (delta_1...delta_n) b_n prod_{i<=n} alpha_i.
Real reconstruct_beta(const OstrowskiSeq& seq);

// The expansion of (-1/alpha, -beta/alpha) is the level shift; signs and
// coefficients carry over unchanged (integer translations are dropped).
OstrowskiSeq shift_seq(const OstrowskiSeq& seq, int k = 1);

}  // namespace bicrit

#endif
