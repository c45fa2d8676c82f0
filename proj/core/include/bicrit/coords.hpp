#ifndef BICRIT_COORDS_HPP
#define BICRIT_COORDS_HPP

#include <cmath>

#include "bicrit/arith.hpp"
#include "bicrit/errors.hpp"
#include "bicrit/ostrowski.hpp"
#include "bicrit/real.hpp"

namespace bicrit {

template <class T>
struct Cx {
    T re{0};
    T im{0};
};

template <class T>
Cx<T> operator+(const Cx<T>& a, const Cx<T>& b) {
    return {a.re + b.re, a.im + b.im};
}
template <class T>
Cx<T> operator-(const Cx<T>& a, const Cx<T>& b) {
    return {a.re - b.re, a.im - b.im};
}
template <class T>
T cx_abs(const Cx<T>& a) {
    using std::sqrt;
    return sqrt(a.re * a.re + a.im * a.im);
}

namespace coords_detail {

// log g_r evaluated at a point with r*Re(w) = u (x enters only through the
// 1-periodic trigonometric factor, so callers can form u from exact products
// and stay accurate at abscissae of any magnitude). The quadratic form is
// expanded as
//   g_r^2 / e^{4 pi r y} = (1 - ee)^2 + 4 ee sin^2(pi u),  ee = e^{-3 pi r - 2 pi r y}
// which is a sum of nonnegative terms, stable down to r near the precision
// floor (1 - ee goes through expm1).
template <class T>
T logg(const T& r, const T& u, const T& y) {
    using std::expm1;
    using std::log;
    using std::round;
    using std::sin;
    const T pi = Num<T>::pi();
    T um = u - round(u);  // in [-1/2, 1/2]
    T sp = sin(pi * um);
    T one_m_ee = -expm1(-3 * pi * r - 2 * pi * r * y);
    T ee = 1 - one_m_ee;
    T inner = one_m_ee * one_m_ee + 4 * ee * sp * sp;
    if (inner <= 0) throw SingularPoint("g_r vanished to working precision");
    return 2 * pi * r * y + log(inner) / 2;
}

}  // namespace coords_detail

// g_r(w) = |e^{-3 pi r} - e^{-2 pi r i w}|, 1/r-periodic in Re w.
template <class T>
T g_r(const T& r, const Cx<T>& w) {
    using std::exp;
    return exp(coords_detail::logg(r, r * w.re, w.im));
}

// Unicritical change of coordinates Y_r(w) = r Re w + (i/2pi) log(g_r(w+1/2)/g_r(1/2)).
template <class T>
Cx<T> y_unicritical(const T& r, const Cx<T>& w) {
    using coords_detail::logg;
    const T pi = Num<T>::pi();
    T im = (logg(r, r * w.re + r / 2, w.im) - logg(r, r / 2, T(0))) / (2 * pi);
    return {r * w.re, im};
}

// Evaluation context for one (r,s) cell; caches the normalisation value.
template <class T>
struct YrsCtx {
    T r{};
    T s{};
    T im0{};  // Im of pre2 at w = 0
};

namespace coords_detail {

// Im G_{r,s} at a point with r*Re(w) = u.
template <class T>
T img_u(const T& r, const T& s, const T& u, const T& y) {
    const T pi = Num<T>::pi();
    return (logg(r, u + r / 2, y) + logg(r, u - s + r / 2, y)) / (4 * pi);
}

// pre_1: clamp the imaginary part from below by the boundary column x = -1
// (u = -r), compared at the same height.
template <class T>
T pre1_im(const T& r, const T& s, const T& u, const T& y) {
    T a = img_u(r, s, u, y);
    T b = img_u(r, s, -r, y);
    return a > b ? a : b;
}

// pre_2 strip table on the fundamental window u = r x in (0, 1]. Each strip
// re-reads G at a horizontally shifted argument; the paired real shift keeps
// Re = r x, so only Im is computed here. Strips are half-open as printed,
// with the window's right endpoint closed so the u = 1 column (x = 1/r,
// identified with x = 0) carries the +s/r translate that the F2/F3 column
// identities require.
template <class T>
T pre2_im(const T& r, const T& s, const T& u, const T& y) {
    if (s >= r) {
        if (u > s - r && u <= s - r / 2) return img_u(r, s, u - s, y);
        if (u >= s - r / 2 && u < s) return img_u(r, s, u, y);
        if (u > 1 - r && u <= 1 - r / 2) return img_u(r, s, u, y);
        if (u >= 1 - r / 2) return img_u(r, s, u + s, y);
    } else {
        if (s > 0) {
            if (u > 0 && u <= s / 2) return img_u(r, s, u - r, y);
            if (u >= s / 2 && u < s) return img_u(r, s, u, y);
        }
        if (u > 1 - r && u <= 1 - r + s / 2) return img_u(r, s, u, y);
        if (u > 1 - r + s / 2 && u <= 1 - r + s) return img_u(r, s, u + r, y);
        // the fifth strip reads G at u - s: the printed u + s - r shift fails
        // the seam-matching symmetry Im G(v) = Im G(s - r - v) except at
        // s = r/2, while u - s matches at both printed seams
        if (u > 1 - r + s && u <= 1 + (s - r) / 2) return img_u(r, s, u - s, y);
        if (u > 1 + (s - r) / 2) return img_u(r, s, u + s, y);
    }
    return pre1_im(r, s, u, y);
}

// window reduction for the strip table: u_raw = u + k with u in (0, 1]
template <class T>
T window_offset(const T& u_raw) {
    using std::ceil;
    return ceil(u_raw) - 1;
}

template <class T>
T pre2_im_raw(const T& r, const T& s, const T& u_raw, const T& y) {
    T k = window_offset(u_raw);
    return pre2_im(r, s, u_raw - k, y);
}

}  // namespace coords_detail

template <class T>
YrsCtx<T> make_yrs_ctx(const T& r, const T& s) {
    if (!(r > 0) || r > T(0.5) || s < 0 || s > T(0.5)) throw DomainError("Y_{r,s}: (r,s) out of range");
    YrsCtx<T> c;
    c.r = r;
    c.s = s;
    c.im0 = coords_detail::pre2_im_raw(r, s, T(0), T(0));
    return c;
}

// Y_{r,s}(w) = pre2(w) - pre2(0). Re part is exactly r*Re(w). The low-level
// entry takes u_raw = r*Re(w) so callers with huge abscissae can pass exact
// products.
template <class T>
Cx<T> y_rs_u(const YrsCtx<T>& c, const T& u_raw, const T& y) {
    return {u_raw, coords_detail::pre2_im_raw(c.r, c.s, u_raw, y) - c.im0};
}

template <class T>
Cx<T> y_rs(const YrsCtx<T>& c, const Cx<T>& w) {
    return y_rs_u(c, c.r * w.re, w.im);
}

// G_{r,s}(w) = r x + (i/4pi)(log g_r(w + 1/2) + log g_r(w - s/r + 1/2)).
template <class T>
Cx<T> g_big(const T& r, const T& s, const Cx<T>& w) {
    return {r * w.re, coords_detail::img_u(r, s, r * w.re, w.im)};
}

// pre-adjusted value before normalisation (the table above, pre_1 fallback).
template <class T>
Cx<T> y_pre(const T& r, const T& s, const Cx<T>& w) {
    T u_raw = r * w.re;
    T k = coords_detail::window_offset(u_raw);
    return {u_raw, coords_detail::pre2_im(r, s, u_raw - k, w.im)};
}

// Oriented per-level map (the four-case table keyed by (eps, delta)):
//   (-1,-1): Y_{r,s}(w)
//   (+1,+1): -conj(Y_{r,s}(w))
//   (-1,+1): Y_{r,s}(w - s/r) + s
//   (+1,-1): -conj(Y_{r,s}(w - s/r) + s)
template <class T>
struct LevelCtx {
    YrsCtx<T> yc;
    int eps = -1;
    int delta = -1;
    bool shifted() const { return eps * delta < 0; }
    bool negated() const { return eps > 0; }
};

template <class T>
LevelCtx<T> make_level_ctx(const T& r, const T& s, int eps, int delta) {
    return LevelCtx<T>{make_yrs_ctx(r, s), eps, delta};
}

template <class T>
T y_level_im(const LevelCtx<T>& lc, const T& x, const T& y) {
    T u_raw = lc.yc.r * x - (lc.shifted() ? lc.yc.s : T(0));
    return coords_detail::pre2_im_raw(lc.yc.r, lc.yc.s, u_raw, y) - lc.yc.im0;
}

template <class T>
Cx<T> y_level(const LevelCtx<T>& lc, const Cx<T>& w) {
    T im = y_level_im(lc, w.re, w.im);
    T re = lc.yc.r * w.re;
    if (lc.negated()) re = -re;
    return {re, im};
}

// Vertical-line inverse: Re fixes x, Im is solved by monotone bisection.
template <class T>
Cx<T> y_level_inverse(const LevelCtx<T>& lc, const Cx<T>& z, int iters) {
    T x = (lc.negated() ? -z.re : z.re) / lc.yc.r;
    T lo = T(-1);
    T flo = y_level_im(lc, x, lo);
    if (z.im < flo - T(1e-12)) throw DomainError("y_level_inverse: target below the image of H'");
    if (z.im <= flo) return {x, lo};
    T hi = 1;
    int guard = 0;
    while (y_level_im(lc, x, hi) < z.im) {
        hi = hi * 2 + 1;
        if (++guard > 600) throw NoConvergence("y_level_inverse: bracket failed");
    }
    for (int i = 0; i < iters; ++i) {
        T mid = (lo + hi) / 2;
        if (y_level_im(lc, x, mid) < z.im)
            lo = mid;
        else
            hi = mid;
    }
    return {x, (lo + hi) / 2};
}

// Level contexts out of an expansion (level n uses (alpha_n, beta_n, eps_n, delta_n)).
template <class T>
LevelCtx<T> level_ctx(const OstrowskiSeq& seq, int n);

template <>
inline LevelCtx<double> level_ctx<double>(const OstrowskiSeq& seq, int n) {
    auto L = seq.level(n);
    return make_level_ctx(to_double(L.r), to_double(L.s), L.eps, L.delta);
}

template <>
inline LevelCtx<Real> level_ctx<Real>(const OstrowskiSeq& seq, int n) {
    auto L = seq.level(n);
    return make_level_ctx(L.r, L.s, L.eps, L.delta);
}

enum class GrandDirection { Forward, Inverse };

// Grand change of coordinates Y_{n,n+k} between tower levels, with the
// integer-translation bookkeeping of the inductive definition.
template <class T>
Cx<T> grand_coords(const OstrowskiSeq& seq, int n, int k, Cx<T> w, GrandDirection dir, int inverse_iters = 120) {
    using std::floor;
    if (n < 0 || n + k > seq.depth) throw UsageError("grand_coords: levels out of range");
    if (dir == GrandDirection::Forward) {
        for (int j = k; j >= 1; --j) {
            auto lc = level_ctx<T>(seq, n + j);
            T alpha = lc.yc.r;
            T m = floor(w.re * alpha);
            if (m < 0) m = 0;
            Cx<T> arg{w.re - m / alpha, w.im};
            if (arg.re < 0 || arg.re > 1 / alpha + T(1e-9)) throw DomainError("grand_coords: strip membership failed");
            w = y_level(lc, arg);
            w.re = w.re + m;
        }
        return w;
    }
    for (int j = 1; j <= k; ++j) {
        auto lc = level_ctx<T>(seq, n + j);
        T m = floor(w.re);
        if (m < 0) m = 0;
        Cx<T> arg{w.re - m, w.im};
        Cx<T> back = y_level_inverse(lc, arg, inverse_iters);
        w = Cx<T>{back.re + m / lc.yc.r, back.im};
    }
    return w;
}

template <class T>
struct Extrema {
    T x_max;
    T x_min0, x_min1;
    T im_at_max, im_at_min0, im_at_min1;
};

// Near-extremal abscissae of x -> Im Y_{r,s}(x+iy): the maximum window centre
// (1+s)/2r - 1/2 and the probe minima {0, s/r}.
template <class T>
Extrema<T> extrema_locations(const YrsCtx<T>& c, const T& y) {
    Extrema<T> e;
    e.x_max = (1 + c.s) / (2 * c.r) - T(0.5);
    e.x_min0 = 0;
    e.x_min1 = c.s / c.r;
    e.im_at_max = y_rs_u(c, (1 + c.s) / 2 - c.r / 2, y).im;
    e.im_at_min0 = y_rs_u(c, T(0), y).im;
    e.im_at_min1 = y_rs_u(c, c.s, y).im;
    return e;
}

// Model height at the near-maximum strip, in the 2*pi-scaled height units
// used throughout (heights h and Im w are related by h = 2*pi*Im w).
template <class T>
T height_estimate(const T& r, const T& s, const T& y) {
    const T pi = Num<T>::pi();
    return 2 * pi * r * y + m_height(r, s);
}

}  // namespace bicrit

#endif
