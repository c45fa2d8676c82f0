#include "bicrit/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "bicrit/arith.hpp"

namespace bicrit {

namespace {

Cx<double> to_cx(const std::complex<double>& z) { return {z.real(), z.imag()}; }
std::complex<double> from_cx(const Cx<double>& z) { return {z.re, z.im}; }

}  // namespace

ToyDynamics::ToyDynamics(const OstrowskiSeq& seq, const DynOptions& opt)
    : seq_(&seq), opt_(opt), ctx_(make_tower_ctx<double>(seq, opt.c_seed)) {
    opt_.max_depth = std::min(opt_.max_depth, seq.depth - 1);
    opt_.membership_depth = std::min(opt_.membership_depth, seq.depth);
}

double ToyDynamics::base_height(double x) const {
    x -= std::floor(x);
    return height_at(ctx_, -1, x, opt_.membership_depth, SeedKind::Base);
}

bool ToyDynamics::in_model(std::complex<double> w) const {
    return w.imag() >= base_height(w.real()) - opt_.membership_slack;
}

Trajectory ToyDynamics::trajectory(std::complex<double> w, int max_depth) const {
    if (!in_model(w)) throw NotInSet("trajectory: point below the base curve");
    Trajectory tr;
    // reduce to the fundamental window of I_{-1}
    double l0 = std::floor(w.real());
    w -= l0;
    tr.points.push_back(w);
    std::complex<double> cur = w;
    for (int i = -1; i < max_depth; ++i) {
        int lvl = i + 1;  // descending through Y_{i+1}
        if (lvl > seq_->depth) break;
        const auto& lc = ctx_.levels[static_cast<size_t>(lvl)];
        double l;
        if (lc.eps == -1) {
            l = std::floor(cur.real());
        } else {
            l = std::ceil(cur.real());
        }
        std::complex<double> arg = cur - l;
        Cx<double> back;
        try {
            back = y_level_inverse(lc, to_cx(arg), opt_.inverse_iters);
        } catch (const DomainError&) {
            throw NotInSet("trajectory: level " + std::to_string(lvl) + " left the tower image");
        }
        cur = from_cx(back);
        tr.shifts.push_back(l);
        tr.points.push_back(cur);
        double bound = 1.0 / to_double(seq_->alpha(lvl));
        if (lvl <= seq_->depth && tr.entered_k_at < 0 && cur.real() <= bound - 1.0) tr.entered_k_at = lvl;
        if (tr.entered_k_at >= 0) break;
    }
    tr.depth_exhausted = tr.entered_k_at < 0;
    return tr;
}

std::complex<double> ToyDynamics::step(std::complex<double> w, double* err_bound) const {
    Trajectory tr = trajectory(w, opt_.max_depth);
    int n = tr.entered_k_at;
    std::complex<double> u;
    double err = 0;
    if (n >= 0) {
        u = tr.points[static_cast<size_t>(n) + 1] + 1.0;
    } else {
        n = static_cast<int>(tr.points.size()) - 2;  // deepest level reached
        double bound = 1.0 / to_double(seq_->alpha(n));
        u = tr.points[static_cast<size_t>(n) + 1] + (1.0 - bound);
        err = std::pow(0.9, n + 1) * 4.0;  // contraction chain, crude diameter 4
    }
    for (int i = n; i >= 0; --i) {
        const auto& lc = ctx_.levels[static_cast<size_t>(i)];
        u = from_cx(y_level(lc, to_cx(u))) + std::complex<double>((lc.eps + 1) / 2, 0.0);
    }
    u -= std::floor(u.real());
    if (err_bound) *err_bound = err;
    return u;
}

std::complex<double> ToyDynamics::disk_step(const std::complex<double>& z, double* err_bound) const {
    if (z == std::complex<double>(0, 0)) {
        if (err_bound) *err_bound = 0;
        return z;
    }
    double x, y;
    model_unproject(z, x, y);
    std::complex<double> w = step({x, y}, err_bound);
    return model_point(w.real(), w.imag());
}

std::vector<OrbitRecord> orbit_of_one(const OstrowskiSeq& seq, int K, const DynOptions& opt) {
    ToyDynamics dyn(seq, opt);
    double a0 = to_double(seq.alpha(0));
    double b0 = to_double(seq.beta(0));
    double alpha_signed = seq.eps_at(0) * a0;
    double beta_signed = seq.delta_at(0) * b0;
    double ratio_shift = beta_signed / alpha_signed;
    std::vector<OrbitRecord> orbit;
    std::complex<double> w{0.0, 0.0};  // +1 in model coordinates
    for (int k = 0; k <= K; ++k) {
        OrbitRecord rec;
        rec.k = k;
        rec.point = model_point(w.real(), w.imag());
        rec.modulus = std::abs(rec.point);
        double qa = q_alpha(alpha_signed, static_cast<double>(k));
        double qb = q_alpha(alpha_signed, k - ratio_shift);
        rec.predicted = std::sqrt(a0 * qa * qb / (b0 + a0));
        rec.ratio = rec.modulus / rec.predicted;
        orbit.push_back(rec);
        w = dyn.step(w);
    }
    return orbit;
}

namespace {

// angle of z in turns, in [0,1)
double angle_of(const std::complex<double>& z) {
    double t = std::arg(z) / (2 * M_PI);
    return t - std::floor(t);
}

}  // namespace

RenormReport renorm_verify(const OstrowskiSeq& seq, int depth, int samples, const DynOptions& opt) {
    if (seq.depth < depth + 1) throw UsageError("renorm_verify: expansion too shallow");
    DynOptions o = opt;
    o.max_depth = std::max(o.max_depth, depth);
    o.membership_depth = depth;
    ToyDynamics dyn(seq, o);
    OstrowskiSeq shifted = shift_seq(seq, 1);

    double a0 = to_double(seq.alpha(0));
    double big_a0 = to_double(seq.a(0));
    int cap = static_cast<int>(4 * (big_a0 + 2));

    // The level-0 coordinate change for lifting sector points.
    const auto& lc0 = dyn.tower().levels[0];

    RenormReport rep;
    rep.depth = depth;
    rep.samples = samples;

    ModelOptions mo;
    mo.angle_samples = std::max(256, samples * 4);
    mo.with_inner = false;
    mo.c_seed = opt.c_seed;
    ModelSet shifted_model = model_set(shifted, depth, mo);

    // Sample points of the shifted model boundary; drive each through the
    // tower return map and compare with the direct shifted dynamics
    // T_{-1/a,-b/a} = conj . T_shift . conj.
    ToyDynamics dyn_shift(shifted, o);
    double mism_sum = 0;
    int mism_count = 0;
    rep.return_time_min = cap;
    rep.return_time_max = 0;
    for (int i = 0; i < samples; ++i) {
        size_t idx = static_cast<size_t>(i) * shifted_model.angles.size() / static_cast<size_t>(samples);
        double th = shifted_model.angles[idx];
        double rad = shifted_model.outer_radius[idx];
        std::complex<double> zeta = std::polar(rad, 2 * M_PI * th);

        // direct side
        std::complex<double> direct = std::conj(dyn_shift.disk_step(std::conj(zeta)));

        // tower side: lift zeta = e^{2 pi i w}, w in the phi window
        double x = angle_of(zeta);
        double y = -std::log(std::abs(zeta)) / (2 * M_PI);
        // map into the original model through psi = s(e^{2 pi i Y_0})
        Cx<double> v = y_level(lc0, Cx<double>{x, y});
        std::complex<double> z = model_point(v.re, v.im);
        // iterate the original toy map until the angle returns to [0, alpha_0)
        int k = 0;
        std::complex<double> zr = z;
        bool found = false;
        for (; k < cap; ++k) {
            zr = dyn.disk_step(zr);
            double ang = angle_of(zr);
            if (ang < a0 || ang > 1 - 1e-12) {
                found = true;
                ++k;
                break;
            }
        }
        if (!found) throw ReturnNotFound("renorm_verify: no sector return within the iterate cap");
        rep.return_time_min = std::min(rep.return_time_min, k);
        rep.return_time_max = std::max(rep.return_time_max, k);
        // phi: invert Y_0 on the lift of the returned point
        double xr, yr;
        model_unproject(zr, xr, yr);
        // choose the Re Y_0 representative inside the level-0 image window
        double re_target = lc0.eps == -1 ? a0 * xr : -a0 * xr;
        if (lc0.eps == -1 && re_target >= a0) re_target -= a0;  // guard
        Cx<double> back = y_level_inverse(lc0, Cx<double>{re_target, yr}, o.inverse_iters);
        // project by w -> e^{2 pi i w}
        double xb = back.re - std::floor(back.re);
        std::complex<double> tower_img =
            std::polar(std::exp(-2 * M_PI * back.im), 2 * M_PI * xb);
        double d = std::abs(tower_img - direct);
        rep.point_mismatch_max = std::max(rep.point_mismatch_max, d);
        mism_sum += d;
        ++mism_count;
    }
    rep.point_mismatch_mean = mism_count ? mism_sum / mism_count : 0;

    // set-level: exp of the alpha_0-scaled level-0 curve vs the conj of the
    // shifted model
    HeightCurve b0curve = base_function(seq, 0, depth, 512, opt.c_seed);
    std::vector<std::complex<double>> renorm_set;
    for (size_t i = 0; i < b0curve.xs.size(); ++i) {
        double xx = a0 * b0curve.xs[i];
        double yy = a0 * b0curve.ys[i];
        renorm_set.push_back(std::polar(std::exp(-2 * M_PI * yy), 2 * M_PI * xx));
    }
    std::vector<std::complex<double>> direct_set = boundary_points(shifted_model);
    for (auto& p : direct_set) p = std::conj(p);
    rep.hausdorff = hausdorff_distance(renorm_set, direct_set);
    rep.grid_cell = 2 * M_PI / shifted_model.angles.size();
    return rep;
}

RecurrenceResult recurrence_probe(const OstrowskiSeq& seq, std::complex<double> z, double eps, int cap,
                                  const DynOptions& opt) {
    ToyDynamics dyn(seq, opt);
    RecurrenceResult res;
    std::complex<double> cur = z;
    for (int k = 1; k <= cap; ++k) {
        cur = dyn.disk_step(cur);
        if (std::abs(cur - z) < eps) {
            res.returned = true;
            res.steps = k;
            return res;
        }
    }
    res.steps = cap;
    return res;
}

}  // namespace bicrit
