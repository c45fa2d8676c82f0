#ifndef BICRIT_CLASSIFY_HPP
#define BICRIT_CLASSIFY_HPP

#include <string>
#include <vector>

#include "bicrit/arith.hpp"
#include "bicrit/ostrowski.hpp"

namespace bicrit {

enum class Verdict { JordanCurve, OneSidedHairyJordan, CantorBouquet, Undecided };

std::string verdict_name(Verdict v);

enum class CertTier { Certified, AtTruncation };

struct ClassifyPolicy {
    double divergence_threshold = 50.0;  // truncated sum above this reads as divergent
    int trend_levels = 5;                // ...provided the sum still grows over these levels
    int herman_m_limit = 24;
    int herman_levels = 8;  // levels n = 0..herman_levels checked
    HermanConvention convention = HermanConvention::ProofInverse;
    double c_seed = 2.0;
    bool gap_diagnostic = true;
    int gap_samples = 256;
};

struct TrichotomyVerdict {
    Verdict verdict = Verdict::Undecided;
    CertTier tier = CertTier::AtTruncation;
    BrjunoEstimate brjuno_bi, brjuno_uni;
    bool divergent_at_truncation = false;
    std::vector<HermanVerdict> herman_bi, herman_uni;
    bool herman_all_witnessed = false;
    double gap_max = -1;  // max_x (p_{-1} - b_{-1}) at the diagnostic depth; -1 when skipped
    int gap_depth = 0;
    int depth_used = 0;
    std::string notes;
};

TrichotomyVerdict classify(const OstrowskiSeq& seq, int depth, const ClassifyPolicy& policy = {});

struct SiegelBracket {
    // model heights are 2*pi*Im w, so the Brjuno-size prediction for the
    // inner radius is e^{-B}; e^{-2 pi B} is reported alongside for reference
    double predicted_radius = 0;       // e^{-B_trunc}
    double predicted_lo = 0;           // e^{-(B_trunc + tail_upper)}
    double predicted_hi = 0;           // e^{-(B_trunc + tail_lower)}
    double predicted_radius_2pi = 0;   // e^{-2 pi B_trunc}, the literal corollary scale
    double r_inscribed = 0;            // e^{-2 pi sup_x p_{-1}(x)}
    double r_at_zero = 0;              // e^{-2 pi p_{-1}(0)}, the invariant-set radius r_{alpha,beta}
    double factor = 0;                 // r_inscribed / predicted_radius
};

SiegelBracket siegel_bracket(const OstrowskiSeq& seq, int depth, const ClassifyPolicy& policy = {});

struct WitnessReport {
    Real beta{0};
    Real x{0};  // common abscissa (= beta_0)
    std::vector<int> depths;
    std::vector<double> height_witness;  // base height at x, witness-beta model
    std::vector<double> height_zero;     // base height at x, beta = 0 model
    bool windows_ok = false;             // beta_n in [1/2 - alpha_n, 1/2] at every level
    int doublings = 0;                   // of the beta=0 heights across the depth range
};

// The non-equivalence construction: beta with beta_n pinned to
// [1/2 - alpha_n, 1/2]; the shared abscissa tracks the maximum column of the
// beta = 0 model and the preserved column of the witness model.
WitnessReport nonequivalence_witness(const OstrowskiSeq& alpha_seq, int depth,
                                     const ClassifyPolicy& policy = {});

}  // namespace bicrit

#endif
