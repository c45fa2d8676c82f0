#ifndef BICRIT_DYNAMICS_HPP
#define BICRIT_DYNAMICS_HPP

#include <complex>
#include <optional>
#include <vector>

#include "bicrit/curves.hpp"
#include "bicrit/modelset.hpp"
#include "bicrit/ostrowski.hpp"

namespace bicrit {

// Descent of a point through the tower levels: w_i lives at level i with
// Re w_i in [0, 1/alpha_i], and Y_{i+1}(w_{i+1}) + l_i = w_i.
struct Trajectory {
    std::vector<std::complex<double>> points;  // w_{-1}..w_N
    std::vector<double> shifts;                // l_{-1}..l_{N-1}
    int entered_k_at = -1;                     // first level with w_n in K_n, or -1
    bool depth_exhausted = false;
};

struct DynOptions {
    int max_depth = 10;
    double membership_slack = 5e-3;  // below-curve slack for "w in I_{-1}"
    int membership_depth = 8;
    double c_seed = 2.0;
    int inverse_iters = 90;
};

class ToyDynamics {
  public:
    ToyDynamics(const OstrowskiSeq& seq, const DynOptions& opt = {});

    Trajectory trajectory(std::complex<double> w, int max_depth) const;

    // One step of the lifted toy map T~ on I_{-1} (Re reduced mod 1).
    // err_bound, when given, receives the contraction-chain bound for the
    // truncated infinite-descent case (0 when case 1 applied).
    std::complex<double> step(std::complex<double> w, double* err_bound = nullptr) const;

    // The disk map T on the model set; fixes 0, rotates by alpha tangentially.
    std::complex<double> disk_step(const std::complex<double>& z, double* err_bound = nullptr) const;

    // membership probe against the finite-depth base curve
    bool in_model(std::complex<double> w) const;

    const OstrowskiSeq& seq() const { return *seq_; }
    const TowerCtx<double>& tower() const { return ctx_; }
    double base_height(double x) const;  // level -1 base curve at the working depth

  private:
    const OstrowskiSeq* seq_;
    DynOptions opt_;
    TowerCtx<double> ctx_;
};

struct OrbitRecord {
    int k = 0;
    std::complex<double> point;
    double modulus = 0;
    double predicted = 0;  // Theorem A(iv) envelope value
    double ratio = 0;
};

// Orbit of the critical point +1 under the disk map, with the quadratic
// arithmetic envelope sqrt(|a| Q_a(k) Q_a(k - b/a) / (|b|+|a|)).
std::vector<OrbitRecord> orbit_of_one(const OstrowskiSeq& seq, int K, const DynOptions& opt = {});

struct RenormReport {
    int depth = 0;
    int samples = 0;
    double point_mismatch_max = 0;
    double point_mismatch_mean = 0;
    double hausdorff = 0;
    double grid_cell = 0;
    int return_time_min = 0;
    int return_time_max = 0;
};

// Realises the sector return map through psi/phi, projects it to the plane
// and measures its distance to the directly-built shifted model, point-wise
// and as a set.
RenormReport renorm_verify(const OstrowskiSeq& seq, int depth, int samples, const DynOptions& opt = {});

struct RecurrenceResult {
    bool returned = false;
    int steps = 0;
};

RecurrenceResult recurrence_probe(const OstrowskiSeq& seq, std::complex<double> z, double eps, int cap,
                                  const DynOptions& opt = {});

}  // namespace bicrit

#endif
