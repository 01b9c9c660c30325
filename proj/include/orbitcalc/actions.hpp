#pragma once

// Concrete Anosov-like group actions on the trivial and skew planes:
//
//  * AffineElement     — (x, y) |-> (ax + b, cy + d) on the trivial plane;
//  * SuspensionElement — p |-> A^n p + v for a fixed hyperbolic integer
//                        matrix A (exact integer linear algebra);
//  * SkewLiftElement   — a Mobius transformation acting on the boundary
//                        circle of the skew strip {x < y < x + 1}, carried as
//                        an explicit lift of the circle action to R.
//
// Circle coordinate convention: theta(x) = 1/2 + arctan(x)/pi with
// theta(infinity) = 0, so the circle is R/Z and diagonal matrices fix
// theta in {0, 1/2}. Lifts are normalized so the base lift has value in
// [0, 1) at 0; an element carries an extra integer offset k, which makes the
// one-step-up map eta the pair (identity, k = 1) and gives well-defined
// translation numbers.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <orbitcalc/chain.hpp>
#include <orbitcalc/errors.hpp>
#include <orbitcalc/format.hpp>

namespace orbitcalc {

// ---------------------------------------------------------------------------
// Shared fixed-point report

struct FixedPointReport {
    enum class Kind { Free, Unique, CornerChain };
    Kind kind = Kind::Free;

    // Unique (affine / suspension): the plane fixed point and the coordinate
    // multipliers (a, c) or the matrix eigenvalue pair.
    std::array<double, 2> point{0.0, 0.0};
    std::array<double, 2> multipliers{0.0, 0.0};
    std::string expanding; // "x", "y", "eigen", or "none"

    // CornerChain (skew): circle fixed points in [0, 1) and the chain of
    // plane fixed points they generate.
    struct CircleFixedPoint {
        double t = 0.0;
        double multiplier = 1.0;
        bool attracting = false;
    };
    std::vector<CircleFixedPoint> circle_fixed_points;
    std::optional<Chain> chain;
};

struct A1Report {
    bool pass = false;
    std::string detail;
};

// ---------------------------------------------------------------------------
// Affine actions on the trivial plane

struct AffineElement {
    double a = 1.0, b = 0.0; // x |-> ax + b
    double c = 1.0, d = 0.0; // y |-> cy + d
};

// Per-element admissibility: one coordinate strictly expands while the other
// strictly contracts, or both multipliers are unimodular and any reflection
// (multiplier -1) carries a nontrivial translation part.
inline bool affine_admissible(const AffineElement& g) {
    const double ma = std::abs(g.a), mc = std::abs(g.c);
    if (g.a == 0.0 || g.c == 0.0) return false;
    if (ma > 1.0 && mc < 1.0) return true;
    if (ma < 1.0 && mc > 1.0) return true;
    if (ma == 1.0 && mc == 1.0)
        return !(g.a == -1.0 && g.b == 0.0) && !(g.c == -1.0 && g.d == 0.0);
    return false;
}

inline std::array<double, 2> affine_act(const AffineElement& g, std::array<double, 2> p) {
    return {g.a * p[0] + g.b, g.c * p[1] + g.d};
}

inline AffineElement affine_compose(const AffineElement& g, const AffineElement& h) {
    // g after h
    return {g.a * h.a, g.a * h.b + g.b, g.c * h.c, g.c * h.d + g.d};
}

inline FixedPointReport affine_fixed_point(const AffineElement& g) {
    if (!affine_admissible(g))
        throw validation_error("Inadmissible",
                               "affine element is not Anosov-like admissible (multipliers " +
                                   num12(g.a) + ", " + num12(g.c) + ")");
    const bool x_id = g.a == 1.0 && g.b == 0.0;
    const bool y_id = g.c == 1.0 && g.d == 0.0;
    if (x_id && y_id) throw validation_error("IdentityElement", "the identity fixes everything");
    const bool x_free = g.a == 1.0 && g.b != 0.0;
    const bool y_free = g.c == 1.0 && g.d != 0.0;

    FixedPointReport rep;
    rep.multipliers = {g.a, g.c};
    if (x_free || y_free) {
        rep.kind = FixedPointReport::Kind::Free;
        return rep;
    }
    if (x_id || y_id)
        throw validation_error("Inadmissible",
                               "element fixes a coordinate leaf pointwise; not Anosov-like");
    rep.kind = FixedPointReport::Kind::Unique;
    rep.point = {g.b / (1.0 - g.a), g.d / (1.0 - g.c)};
    rep.expanding = std::abs(g.a) > 1.0 ? "x" : (std::abs(g.c) > 1.0 ? "y" : "none");
    return rep;
}

// Leaf-by-leaf reading of the axiom: every leaf the element fixes must carry
// a fixed point that expands along one coordinate leaf and contracts along
// the other. Multiplier 1 fixes a leaf family; multiplier -1 always fixes
// one leaf; neither can expand or contract.
inline A1Report check_axiom_A1(const AffineElement& g) {
    const double ma = std::abs(g.a), mc = std::abs(g.c);
    const bool x_id = g.a == 1.0 && g.b == 0.0;
    const bool y_id = g.c == 1.0 && g.d == 0.0;
    if (x_id && y_id) return {true, "identity"};
    if ((ma > 1.0 && mc < 1.0) || (ma < 1.0 && mc > 1.0))
        return {true, "multipliers " + num12(g.a) + " and " + num12(g.c) +
                          " straddle 1 at the unique fixed point"};
    const bool x_none = g.a == 1.0 && g.b != 0.0; // no fixed vertical leaf
    const bool y_none = g.c == 1.0 && g.d != 0.0; // no fixed horizontal leaf
    if (x_none && y_none) return {true, "fixes no leaf; acts freely"};
    if (x_none || y_none)
        return {false, "fixes a leaf but translates along it without a fixed point"};
    if (x_id || y_id)
        return {false, "fixes a coordinate foliation without expansion or contraction"};
    return {false,
            "fixed point has multipliers " + num12(g.a) + " and " + num12(g.c) +
                "; expansion/contraction must pair"};
}

// ---------------------------------------------------------------------------
// Suspension actions: p |-> A^n p + v, exact integer arithmetic

using Mat2i = std::array<std::array<long long, 2>, 2>;
using Vec2i = std::array<long long, 2>;

inline constexpr Mat2i kDefaultSuspensionMatrix{{{2, 1}, {1, 1}}};

struct SuspensionElement {
    long long n = 0;
    Vec2i v{0, 0};
    Mat2i A = kDefaultSuspensionMatrix;
};

namespace action_detail {

inline long long det2(const Mat2i& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

inline Mat2i mul2(const Mat2i& p, const Mat2i& q) {
    return {{{p[0][0] * q[0][0] + p[0][1] * q[1][0], p[0][0] * q[0][1] + p[0][1] * q[1][1]},
             {p[1][0] * q[0][0] + p[1][1] * q[1][0], p[1][0] * q[0][1] + p[1][1] * q[1][1]}}};
}

inline Vec2i mulv(const Mat2i& m, const Vec2i& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

inline void check_suspension_matrix(const Mat2i& A) {
    if (det2(A) != 1)
        throw validation_error("Inadmissible", "suspension matrix must have determinant 1");
    if (std::abs(A[0][0] + A[1][1]) <= 2)
        throw validation_error("Inadmissible", "suspension matrix must be hyperbolic (|trace| > 2)");
}

// A^n for |n| <= 45 (entries grow like 2.6^n; beyond that they overflow).
inline Mat2i powA(const Mat2i& A, long long n) {
    if (std::abs(n) > 45)
        throw numeric_error("Overflow", "matrix power exceeds exact integer range");
    Mat2i base = A;
    if (n < 0) base = {{{A[1][1], -A[0][1]}, {-A[1][0], A[0][0]}}}; // adjugate = inverse (det 1)
    Mat2i acc{{{1, 0}, {0, 1}}};
    for (long long i = 0; i < std::abs(n); ++i) acc = mul2(acc, base);
    return acc;
}

} // namespace action_detail

inline std::array<double, 2> suspension_act(const SuspensionElement& g, std::array<double, 2> p) {
    action_detail::check_suspension_matrix(g.A);
    const Mat2i An = action_detail::powA(g.A, g.n);
    return {static_cast<double>(An[0][0]) * p[0] + static_cast<double>(An[0][1]) * p[1] +
                static_cast<double>(g.v[0]),
            static_cast<double>(An[1][0]) * p[0] + static_cast<double>(An[1][1]) * p[1] +
                static_cast<double>(g.v[1])};
}

inline SuspensionElement suspension_compose(const SuspensionElement& g, const SuspensionElement& h) {
    if (g.A != h.A)
        throw validation_error("Inadmissible", "suspension elements must share the matrix A");
    const Vec2i moved = action_detail::mulv(action_detail::powA(g.A, g.n), h.v);
    return {g.n + h.n, {moved[0] + g.v[0], moved[1] + g.v[1]}, g.A};
}

inline FixedPointReport suspension_fixed_points(const SuspensionElement& g) {
    using namespace action_detail;
    check_suspension_matrix(g.A);
    if (g.n == 0 && g.v[0] == 0 && g.v[1] == 0)
        throw validation_error("IdentityElement", "the identity fixes everything");

    FixedPointReport rep;
    if (g.n == 0) {
        rep.kind = FixedPointReport::Kind::Free;
        return rep;
    }
    const Mat2i An = powA(g.A, g.n);
    const Mat2i D{{{1 - An[0][0], -An[0][1]}, {-An[1][0], 1 - An[1][1]}}}; // I - A^n
    const long long det = det2(D);
    // det(I - A^n) = 2 - trace(A^n) is never 0 for hyperbolic A and n != 0.
    rep.kind = FixedPointReport::Kind::Unique;
    rep.point = {static_cast<double>(D[1][1] * g.v[0] - D[0][1] * g.v[1]) / static_cast<double>(det),
                 static_cast<double>(-D[1][0] * g.v[0] + D[0][0] * g.v[1]) /
                     static_cast<double>(det)};
    const double tr = static_cast<double>(g.A[0][0] + g.A[1][1]);
    const double lam = (tr + std::sqrt(tr * tr - 4.0)) / 2.0;
    rep.multipliers = {std::pow(lam, static_cast<double>(g.n)),
                       std::pow(lam, -static_cast<double>(g.n))};
    rep.expanding = "eigen";
    return rep;
}

// Number of period-n orbit points of the suspension: fixed points of A^n on
// the torus, counted by the Lefschetz-style determinant |det(A^n - I)|.
inline long long suspension_orbit_count(long long n, const Mat2i& A = kDefaultSuspensionMatrix) {
    using namespace action_detail;
    check_suspension_matrix(A);
    if (n < 1) throw validation_error("InvalidParameter", "orbit counts need n >= 1");
    const Mat2i An = powA(A, n);
    const Mat2i D{{{An[0][0] - 1, An[0][1]}, {An[1][0], An[1][1] - 1}}};
    return std::abs(det2(D));
}

inline A1Report check_axiom_A1(const SuspensionElement& g) {
    action_detail::check_suspension_matrix(g.A);
    if (g.n == 0 && g.v[0] == 0 && g.v[1] == 0) return {true, "identity"};
    if (g.n == 0) return {true, "acts freely"};
    const FixedPointReport rep = suspension_fixed_points(g);
    const bool ok = (rep.multipliers[0] > 1.0) != (rep.multipliers[1] > 1.0);
    return {ok, "eigenvalue pair " + num12(rep.multipliers[0]) + ", " +
                    num12(rep.multipliers[1]) + " at the unique fixed point"};
}

// ---------------------------------------------------------------------------
// Skew plane: lifted Mobius actions on the boundary circle

struct SkewLiftElement {
    std::array<double, 4> m{1.0, 0.0, 0.0, 1.0}; // row-major (a, b, c, d), det = +-1
    long long k = 0;                             // integer lift offset
    bool orientation_preserving = true;
    double base_at_zero = 0.0; // base lift value at t = 0, in [0, 1)
};

namespace action_detail {

constexpr double kPiD = 3.141592653589793;

inline bool scalar_matrix(const std::array<double, 4>& m) {
    return m[1] == 0.0 && m[2] == 0.0 && m[0] == m[3];
}

// Raw circle map in the theta chart: t and the image both live in [0, 1).
inline double skew_raw(const std::array<double, 4>& m, double s) {
    const double ux = -std::cos(kPiD * s), uy = std::sin(kPiD * s);
    const double vx = m[0] * ux + m[1] * uy;
    const double vy = m[2] * ux + m[3] * uy;
    const double psi = std::atan2(vy, vx); // (-pi, pi]
    double raw = 1.0 - psi / kPiD;         // [0, 2)
    if (raw >= 1.0) raw -= 1.0;
    return raw;
}

// The cyclic 2-lozenge string with regular corners at the attracting and
// repelling circle points (the eta-quotient of the bi-infinite diagonal
// string fixed by a non-free element).
inline Chain two_corner_string(double attracting_t, double repelling_t) {
    const double a = attracting_t;
    double r = repelling_t;
    if (r < a) r += 1.0;
    std::string ida = num12(a);
    std::string idr = num12(r >= 1.0 ? r - 1.0 : r);

    Chain out;
    out.topology = ChainTopology::Cyclic;
    out.corners = {{ida, 2}, {idr, 2}};
    out.lozenges.resize(2);
    out.lozenges[0].corners = {ida, idr};
    out.lozenges[0].quadrants = {0, 2};
    out.lozenges[1].corners = {idr, ida};
    out.lozenges[1].quadrants = {0, 2};
    Junction j0;
    j0.kind = Junction::Kind::CornerOnly;
    j0.corner = idr;
    j0.gap = 1;
    Junction j1;
    j1.kind = Junction::Kind::CornerOnly;
    j1.corner = ida;
    j1.gap = 1;
    out.junctions = {j0, j1};
    validate_chain(out);
    return out;
}

} // namespace action_detail

// Construct a lifted element from a matrix (any nonzero determinant; it is
// rescaled to +-1 and sign-canonicalized) and an integer lift offset.
// Parabolic matrices are rejected: skew Anosov-like actions require each
// non-free element to carry an attracting/repelling fixed-point pair.
inline SkewLiftElement skew_element(const std::array<double, 4>& matrix, long long k = 0) {
    SkewLiftElement g;
    const double det = matrix[0] * matrix[3] - matrix[1] * matrix[2];
    if (std::abs(det) < 1e-12)
        throw validation_error("Inadmissible", "matrix is singular; not a Mobius transformation");
    const double scale = 1.0 / std::sqrt(std::abs(det));
    for (int i = 0; i < 4; ++i) g.m[i] = matrix[i] * scale;
    // canonical projective representative: first nonzero of (a, b, c) positive
    const bool flip = g.m[0] < 0.0 || (g.m[0] == 0.0 && g.m[1] < 0.0) ||
                      (g.m[0] == 0.0 && g.m[1] == 0.0 && g.m[2] < 0.0);
    if (flip)
        for (int i = 0; i < 4; ++i) g.m[i] = -g.m[i];
    g.orientation_preserving = det > 0.0;
    // Snap near-scalar products (e.g. g composed with its inverse) to the
    // exact identity so they act as exact integer translations and do not
    // trip the parabolic gate on rounding residue.
    if (g.orientation_preserving && std::abs(g.m[1]) <= 1e-9 && std::abs(g.m[2]) <= 1e-9 &&
        std::abs(g.m[0] - g.m[3]) <= 1e-9)
        g.m = {1.0, 0.0, 0.0, 1.0};
    if (g.orientation_preserving && !action_detail::scalar_matrix(g.m)) {
        const double tr = g.m[0] + g.m[3];
        if (std::abs(std::abs(tr) - 2.0) < 1e-12)
            throw validation_error("Inadmissible",
                                   "parabolic boundary action (|trace| = 2); skew actions "
                                   "exclude parabolic elements");
    }
    g.k = k;
    g.base_at_zero = action_detail::scalar_matrix(g.m) ? 0.0 : action_detail::skew_raw(g.m, 0.0);
    return g;
}

inline SkewLiftElement eta() { return skew_element({1.0, 0.0, 0.0, 1.0}, 1); }

// Value of the lift at t: base lift (continuous, value in [0,1) at 0) plus k.
inline double skew_eval(const SkewLiftElement& g, double t) {
    using namespace action_detail;
    if (scalar_matrix(g.m)) return t + static_cast<double>(g.k);
    const double n = std::floor(t);
    const double s = t - n;
    const double raw = skew_raw(g.m, s);
    double lifted;
    if (g.orientation_preserving)
        lifted = n + raw + (raw < g.base_at_zero ? 1.0 : 0.0);
    else
        lifted = -n + raw + (raw > g.base_at_zero ? -1.0 : 0.0);
    return lifted + static_cast<double>(g.k);
}

inline SkewLiftElement skew_compose(const SkewLiftElement& g, const SkewLiftElement& h) {
    const std::array<double, 4> prod{
        g.m[0] * h.m[0] + g.m[1] * h.m[2], g.m[0] * h.m[1] + g.m[1] * h.m[3],
        g.m[2] * h.m[0] + g.m[3] * h.m[2], g.m[2] * h.m[1] + g.m[3] * h.m[3]};
    SkewLiftElement out = skew_element(prod, 0);
    const double value = skew_eval(g, skew_eval(h, 0.0)); // the true lift at 0
    out.k = std::llround(value - skew_eval(out, 0.0));
    return out;
}

inline SkewLiftElement skew_inverse(const SkewLiftElement& g) {
    const std::array<double, 4> adj{g.m[3], -g.m[1], -g.m[2], g.m[0]};
    SkewLiftElement out = skew_element(adj, 0);
    const double image = skew_eval(g, 0.0);
    out.k = std::llround(0.0 - skew_eval(out, image));
    return out;
}

// Translation number as the finite-N Birkhoff quotient g~^N(0)/N; the lift
// commutes with integer translation, so the a-posteriori error is 1/N.
inline double translation_number(const SkewLiftElement& g, long long N) {
    if (!g.orientation_preserving)
        throw validation_error("OrientationReversing",
                               "translation numbers require an orientation-preserving lift");
    if (N < 1) throw validation_error("InvalidParameter", "iteration count must be >= 1");
    double t = 0.0;
    for (long long i = 0; i < N; ++i) t = skew_eval(g, t);
    return t / static_cast<double>(N);
}

// Circle fixed points in [0, 1) with attract/repel tags, located on a 4096
// grid refined by bisection; multipliers are exact Mobius derivatives (the
// chart factors cancel at a fixed point).
inline FixedPointReport skew_fixed_points(const SkewLiftElement& g) {
    using namespace action_detail;
    if (!g.orientation_preserving)
        throw validation_error("OrientationReversing",
                               "fixed-point reports are defined for orientation-preserving "
                               "elements");
    FixedPointReport rep;
    const auto F = [&](double t) { return skew_eval(g, t) - t; };

    std::vector<double> zeros;
    const int grid = 4096;
    for (int i = 0; i < grid; ++i) {
        const double t0 = static_cast<double>(i) / grid;
        const double t1 = static_cast<double>(i + 1) / grid;
        const double f0 = F(t0), f1 = F(t1);
        if (f0 == 0.0) {
            zeros.push_back(t0);
            continue;
        }
        if (f0 * f1 < 0.0) {
            double lo = t0, hi = t1, flo = f0;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = F(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm > 0.0) == (flo > 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
    }

    if (zeros.empty()) {
        rep.kind = FixedPointReport::Kind::Free;
        return rep;
    }
    rep.kind = FixedPointReport::Kind::CornerChain;
    for (double t : zeros) {
        FixedPointReport::CircleFixedPoint fp;
        fp.t = t;
        if (t == 0.0) {
            // fixed point at theta = 0 is x = infinity; its multiplier in the
            // reciprocal chart is d/a (only matrices with c = 0 fix it)
            fp.multiplier = g.m[3] / g.m[0];
        } else {
            const double x = -std::cos(kPiD * t) / std::sin(kPiD * t);
            const double denom = g.m[2] * x + g.m[3];
            fp.multiplier = 1.0 / (denom * denom);
        }
        fp.attracting = fp.multiplier < 1.0;
        rep.circle_fixed_points.push_back(fp);
    }
    if (rep.circle_fixed_points.size() == 2 &&
        rep.circle_fixed_points[0].attracting != rep.circle_fixed_points[1].attracting) {
        const auto& p0 = rep.circle_fixed_points[0];
        const auto& p1 = rep.circle_fixed_points[1];
        rep.chain = action_detail::two_corner_string(p0.attracting ? p0.t : p1.t,
                                                     p0.attracting ? p1.t : p0.t);
    }
    return rep;
}

// The plane fixed set of a non-free element is the corner set of a
// bi-infinite diagonal string of lozenges; its quotient by the one-step-up
// map eta is a cyclic 2-lozenge string with corner-gap-1 junctions.
inline Chain lozenge_string_of(const SkewLiftElement& g) {
    const FixedPointReport rep = skew_fixed_points(g);
    if (rep.kind == FixedPointReport::Kind::Free)
        throw validation_error("FreeElement", "element has no plane fixed points");
    if (!rep.chain)
        throw validation_error("FreeElement",
                               "expected an attracting/repelling circle pair, found " +
                                   std::to_string(rep.circle_fixed_points.size()));
    return *rep.chain;
}

inline A1Report check_axiom_A1(const SkewLiftElement& g) {
    if (!g.orientation_preserving)
        return {false, "orientation-reversing boundary action"};
    const FixedPointReport rep = skew_fixed_points(g);
    if (rep.kind == FixedPointReport::Kind::Free)
        return {true, "acts freely on the strip"};
    if (rep.circle_fixed_points.size() != 2)
        return {false, "expected exactly two circle fixed points, found " +
                           std::to_string(rep.circle_fixed_points.size())};
    const bool paired = rep.circle_fixed_points[0].attracting !=
                        rep.circle_fixed_points[1].attracting;
    return {paired, paired ? "attracting/repelling pair on the boundary circle"
                           : "fixed points do not pair expansion with contraction"};
}

// ---------------------------------------------------------------------------
// The half-step-up map on the skew strip {x < y < x + 1}

inline std::array<double, 2> half_step_up(std::array<double, 2> p) {
    if (!(p[0] < p[1] && p[1] < p[0] + 1.0))
        throw validation_error("OutOfStrip", "point violates x < y < x + 1");
    return {p[1], p[0] + 1.0};
}

} // namespace orbitcalc
