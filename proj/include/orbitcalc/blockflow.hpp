#pragma once

// Numerical dynamics of the model block: the flow on [-pi/2, pi/2]^2 x S^1
// with
//     x' = 0,
//     y' = cos^2(x) + sin^2(y) sin^2(x),
//     z' = lambda sin(x) cos(y),
// entered through the face y = -pi/2 and left through y = +pi/2. x is a first
// integral, so the system separates; transit time and shear have the closed
// forms T(x) = pi / cos(x) and dz(x) = 2 lambda x / cos(x), which the tests
// use as ground truth. z is kept as a real lift so the shear never wraps.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <orbitcalc/errors.hpp>

namespace orbitcalc {

struct BlockParams {
    double lambda = 2.0; // shear strength, > 1
};

struct BlockState {
    double x = 0.0; // [-pi/2, pi/2]
    double y = 0.0; // [-pi/2, pi/2]
    double z = 0.0; // real lift of the circle coordinate
};

struct TransitRecord {
    BlockState entry; // y = -pi/2
    BlockState exit;  // y = +pi/2 (within event tolerance)
    double time = 0.0;
    double delta_z = 0.0;
};

struct IntegratorConfig {
    double step = 1e-3;
    double event_tol = 1e-10;
    double max_time = 1e4;
};

namespace block_detail {

constexpr double half_pi = 1.5707963267948966;

inline void check_params(const BlockParams& p) {
    if (!(p.lambda > 1.0))
        throw validation_error("InvalidParameter",
                               "block shear lambda must exceed 1, got " + std::to_string(p.lambda));
}

inline void check_config(const IntegratorConfig& cfg) {
    if (!(cfg.step > 0.0) || !(cfg.event_tol > 0.0) || !(cfg.max_time > 0.0))
        throw validation_error("InvalidParameter",
                               "integrator step, event_tol, and max_time must be positive");
}

inline void check_state(const BlockState& s) {
    if (!(std::abs(s.x) <= half_pi) || !(std::abs(s.y) <= half_pi))
        throw validation_error("OutOfBlock", "state lies outside [-pi/2, pi/2]^2");
}

// One RK4 step of the (y, z) subsystem at frozen x.
struct YZ {
    double y, z;
};

struct Field {
    double cos2x, sin2x, lam_sinx;

    explicit Field(double x, double lambda) {
        const double cx = std::cos(x), sx = std::sin(x);
        cos2x = cx * cx;
        sin2x = sx * sx;
        lam_sinx = lambda * sx;
    }
    double fy(double y) const {
        const double sy = std::sin(y);
        return cos2x + sy * sy * sin2x;
    }
    double fz(double y) const { return lam_sinx * std::cos(y); }
};

inline YZ rk4_step(const Field& f, YZ s, double h) {
    const double k1y = f.fy(s.y), k1z = f.fz(s.y);
    const double y2 = s.y + 0.5 * h * k1y;
    const double k2y = f.fy(y2), k2z = f.fz(y2);
    const double y3 = s.y + 0.5 * h * k2y;
    const double k3y = f.fy(y3), k3z = f.fz(y3);
    const double y4 = s.y + h * k3y;
    const double k4y = f.fy(y4), k4z = f.fz(y4);
    return {s.y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
            s.z + h / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z)};
}

} // namespace block_detail

// Exact evaluation of the field; the x-component is identically zero.
inline std::array<double, 3> vector_field(const BlockState& s, const BlockParams& p) {
    block_detail::check_params(p);
    block_detail::check_state(s);
    const block_detail::Field f(s.x, p.lambda);
    return {0.0, f.fy(s.y), f.fz(s.y)};
}

struct TrajectorySample {
    double t = 0.0;
    BlockState state;
};

// Fixed-step integration from s0 for time t_end, sampled once per step.
// x never changes (it is not even integrated). The trajectory is clipped at
// the outgoing face: when a step would leave y > pi/2 the crossing is
// bisected to event_tol and recording stops there.
inline std::vector<TrajectorySample> integrate_orbit(const BlockState& s0, double t_end,
                                                     const BlockParams& p,
                                                     const IntegratorConfig& cfg = {}) {
    using namespace block_detail;
    check_params(p);
    check_config(cfg);
    check_state(s0);
    if (!(t_end >= 0.0)) throw validation_error("InvalidParameter", "t_end must be nonnegative");
    if (t_end > cfg.max_time)
        throw numeric_error("MaxTimeExceeded",
                            "requested time " + std::to_string(t_end) + " exceeds max_time " +
                                std::to_string(cfg.max_time));

    const Field f(s0.x, p.lambda);
    std::vector<TrajectorySample> out;
    YZ s{s0.y, s0.z};
    double t = 0.0;
    out.push_back({t, {s0.x, s.y, s.z}});
    while (t < t_end) {
        const double h = std::min(cfg.step, t_end - t);
        const YZ next = rk4_step(f, s, h);
        if (next.y > half_pi) {
            // bisect the exit crossing within this step
            double lo = 0.0, hi = h;
            YZ at_hi = next;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const YZ sm = rk4_step(f, s, mid);
                if (std::abs(sm.y - half_pi) <= cfg.event_tol) {
                    out.push_back({t + mid, {s0.x, sm.y, sm.z}});
                    return out;
                }
                if (sm.y < half_pi)
                    lo = mid;
                else {
                    hi = mid;
                    at_hi = sm;
                }
            }
            out.push_back({t + hi, {s0.x, at_hi.y, at_hi.z}});
            return out;
        }
        s = next;
        t += h;
        out.push_back({t, {s0.x, s.y, s.z}});
    }
    return out;
}

// Entry-to-exit map of the block: start on the incoming face y = -pi/2 and
// integrate until the outgoing face y = +pi/2, refining the crossing time by
// bisection. The faces x = +-pi/2 carry the periodic orbits and never transit.
inline TransitRecord transit_map(double x, double z, const BlockParams& p,
                                 const IntegratorConfig& cfg = {}) {
    using namespace block_detail;
    check_params(p);
    check_config(cfg);
    if (!(std::abs(x) < half_pi))
        throw validation_error("NonTransitingInput",
                               "|x| must be < pi/2 for a transit; the faces x = +-pi/2 are "
                               "invariant");

    const Field f(x, p.lambda);
    TransitRecord rec;
    rec.entry = {x, -half_pi, z};
    YZ s{-half_pi, z};
    double t = 0.0;
    while (true) {
        if (t > cfg.max_time)
            throw numeric_error("MaxTimeExceeded",
                                "transit did not complete within max_time " +
                                    std::to_string(cfg.max_time));
        const YZ next = rk4_step(f, s, cfg.step);
        if (next.y >= half_pi) {
            double lo = 0.0, hi = cfg.step;
            YZ best = next;
            double best_dt = cfg.step;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const YZ sm = rk4_step(f, s, mid);
                if (sm.y < half_pi) {
                    lo = mid;
                } else {
                    hi = mid;
                    best = sm;
                    best_dt = mid;
                }
                if (std::abs(best.y - half_pi) <= cfg.event_tol) break;
            }
            rec.exit = {x, best.y, best.z};
            rec.time = t + best_dt;
            rec.delta_z = best.z - z;
            return rec;
        }
        s = next;
        t += cfg.step;
    }
}

// Batch transit over a list of entry x-coordinates (z = 0).
inline std::vector<TransitRecord> shear_profile(const BlockParams& p, const std::vector<double>& xs,
                                                const IntegratorConfig& cfg = {}) {
    std::vector<TransitRecord> rows;
    rows.reserve(xs.size());
    for (double x : xs) rows.push_back(transit_map(x, 0.0, p, cfg));
    return rows;
}

// Central-difference d(delta_z)/dx, a hyperbolicity diagnostic: the shear
// derivative is strictly positive and diverges toward the tangent faces.
inline double transit_derivative(double x, const BlockParams& p, const IntegratorConfig& cfg = {},
                                 double h = 1e-3) {
    using namespace block_detail;
    if (!(h > 0.0)) throw validation_error("InvalidParameter", "difference width must be positive");
    if (std::abs(x) + h >= half_pi)
        throw numeric_error("StepTooLarge",
                            "difference stencil leaves the transit region; reduce h or |x|");
    const TransitRecord hi = transit_map(x + h, 0.0, p, cfg);
    const TransitRecord lo = transit_map(x - h, 0.0, p, cfg);
    return (hi.delta_z - lo.delta_z) / (2.0 * h);
}

} // namespace orbitcalc
