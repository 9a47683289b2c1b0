#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <utility>
#include <vector>

#include "cuboid/curve.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/rational.hpp"

// The correspondence between non-torsion points on E1(s) and face-cuboid
// parameters (t, gamma):
//
//   forward:  t = (s a - 2s(s^2-1)) / (a + 2s^2(s^2-1)),  gamma = t^2 (s - 1/s)^2
//   fiber:    s = (+-sqrt(gamma) +- sqrt(gamma + (2t)^2)) / (2t),
//             a = 2s(s^2-1)(1 + s t) / (s - t)
//
// A Klein four-group acts on the (s, a) side by
//
//   sigma(s, a) = (-s, -(s^2-1)^2 (a - (2s)^2) / (a + (s^2-1)^2))
//   tau(s, a)   = (-1/s, -(1/s^2) 4(s^2-1)^2 / a)
//
// and the forward map is constant on orbits; each fiber is exactly one orbit.
// (tau must carry s to -1/s, not 1/s: paired fiber elements multiply to -1,
// and under s -> 1/s alone the image's t-coordinate flips sign.)
// The scaling isomorphism E2(t) ~ E1((t+1)/(t-1)) turns all of this into a
// self-map of the E1 side that emits fresh positive-rank parameters.

namespace cuboid {

// (s, alpha) with a positive square beta^2 = alpha(alpha-(2s)^2)(alpha+(s^2-1)^2)
// and alpha off the order-4 x-coordinates, so the lifted point exists and is
// non-torsion.
class PairA {
public:
    PairA(Rational s, Rational alpha) : s_(std::move(s)), alpha_(std::move(alpha)) {
        if (s_ == 0 || s_ == 1 || s_ == -1)
            throw DomainError("PairA: s must avoid {0, 1, -1}, got " + to_string(s_));
        Rational radicand = beta_squared();
        if (sgn(radicand) <= 0)
            throw DomainError("PairA: alpha(alpha-(2s)^2)(alpha+(s^2-1)^2) = " +
                              to_string(radicand) + " is not positive at (s, alpha) = (" +
                              to_string(s_) + ", " + to_string(alpha_) + ")");
        if (!is_perfect_square(radicand))
            throw DomainError("PairA: alpha(alpha-(2s)^2)(alpha+(s^2-1)^2) = " +
                              to_string(radicand) + " is not a square at (s, alpha) = (" +
                              to_string(s_) + ", " + to_string(alpha_) + ")");
        if (alpha_ == 2 * s_ * square(s_ + 1) || alpha_ == -2 * s_ * square(s_ - 1))
            throw DomainError("PairA: (s, alpha) = (" + to_string(s_) + ", " + to_string(alpha_) +
                              ") is the x-coordinate of a torsion point");
    }

    const Rational& s() const { return s_; }
    const Rational& alpha() const { return alpha_; }

    Rational beta_squared() const {
        return alpha_ * (alpha_ - square(2 * s_)) * (alpha_ + square(s_ * s_ - 1));
    }

    friend bool operator==(const PairA& lhs, const PairA& rhs) {
        return lhs.s_ == rhs.s_ && lhs.alpha_ == rhs.alpha_;
    }
    friend bool operator<(const PairA& lhs, const PairA& rhs) {
        int c = cmp(lhs.s_, rhs.s_);
        if (c != 0)
            return c < 0;
        return cmp(lhs.alpha_, rhs.alpha_) < 0;
    }

private:
    Rational s_;
    Rational alpha_;
};

// (s, alpha, beta): a non-torsion point (alpha, beta) on E1(s), beta != 0.
class TripleA {
public:
    TripleA(Rational s, Rational alpha, Rational beta)
        : s_(std::move(s)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
        if (s_ == 0 || s_ == 1 || s_ == -1)
            throw DomainError("TripleA: s must avoid {0, 1, -1}, got " + to_string(s_));
        if (beta_ == 0)
            throw DomainError("TripleA: beta must be nonzero");
        CurveParams curve = CurveParams::e1(s_);
        CurvePoint p(alpha_, beta_);
        if (!contains(curve, p))
            throw DomainError("TripleA: (" + to_string(alpha_) + ", " + to_string(beta_) +
                              ") is not on E1(" + to_string(s_) + ")");
        if (is_torsion(curve, p))
            throw DomainError("TripleA: (" + to_string(alpha_) + ", " + to_string(beta_) +
                              ") is a torsion point of E1(" + to_string(s_) + ")");
    }

    const Rational& s() const { return s_; }
    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

    CurveParams curve() const { return CurveParams::e1(s_); }
    CurvePoint point() const { return CurvePoint(alpha_, beta_); }
    PairA pair() const { return PairA(s_, alpha_); }

    friend bool operator==(const TripleA& lhs, const TripleA& rhs) {
        return lhs.s_ == rhs.s_ && lhs.alpha_ == rhs.alpha_ && lhs.beta_ == rhs.beta_;
    }
    friend bool operator<(const TripleA& lhs, const TripleA& rhs) {
        int c = cmp(lhs.s_, rhs.s_);
        if (c != 0)
            return c < 0;
        c = cmp(lhs.alpha_, rhs.alpha_);
        if (c != 0)
            return c < 0;
        return cmp(lhs.beta_, rhs.beta_) < 0;
    }

private:
    Rational s_;
    Rational alpha_;
    Rational beta_;
};

// (t, gamma) with gamma, gamma-(t^2-1)^2, gamma+(2t)^2 all nonzero squares.
class PairB {
public:
    PairB(Rational t, Rational gamma) : t_(std::move(t)), gamma_(std::move(gamma)) {
        if (t_ == 0 || t_ == 1 || t_ == -1)
            throw DomainError("PairB: t must avoid {0, 1, -1}, got " + to_string(t_));
        check_square("gamma", gamma_);
        check_square("gamma - (t^2-1)^2", gamma_ - square(t_ * t_ - 1));
        check_square("gamma + (2t)^2", gamma_ + square(2 * t_));
    }

    const Rational& t() const { return t_; }
    const Rational& gamma() const { return gamma_; }

    friend bool operator==(const PairB& lhs, const PairB& rhs) {
        return lhs.t_ == rhs.t_ && lhs.gamma_ == rhs.gamma_;
    }
    friend bool operator<(const PairB& lhs, const PairB& rhs) {
        int c = cmp(lhs.t_, rhs.t_);
        if (c != 0)
            return c < 0;
        return cmp(lhs.gamma_, rhs.gamma_) < 0;
    }

private:
    void check_square(const char* what, const Rational& value) const {
        if (value == 0)
            throw DomainError("PairB: " + std::string(what) + " vanishes at (t, gamma) = (" +
                              to_string(t_) + ", " + to_string(gamma_) + ")");
        if (!is_perfect_square(value))
            throw DomainError("PairB: " + std::string(what) + " = " + to_string(value) +
                              " is not a square at (t, gamma) = (" + to_string(t_) + ", " +
                              to_string(gamma_) + ")");
    }

    Rational t_;
    Rational gamma_;
};

// (t, gamma, delta): a non-torsion point (gamma, delta) on E2(t).
class TripleB {
public:
    TripleB(Rational t, Rational gamma, Rational delta)
        : t_(std::move(t)), gamma_(std::move(gamma)), delta_(std::move(delta)) {
        if (t_ == 0 || t_ == 1 || t_ == -1)
            throw DomainError("TripleB: t must avoid {0, 1, -1}, got " + to_string(t_));
        CurveParams curve = CurveParams::e2(t_);
        CurvePoint p(gamma_, delta_);
        if (!contains(curve, p))
            throw DomainError("TripleB: (" + to_string(gamma_) + ", " + to_string(delta_) +
                              ") is not on E2(" + to_string(t_) + ")");
        if (is_torsion(curve, p))
            throw DomainError("TripleB: (" + to_string(gamma_) + ", " + to_string(delta_) +
                              ") is a torsion point of E2(" + to_string(t_) + ")");
    }

    const Rational& t() const { return t_; }
    const Rational& gamma() const { return gamma_; }
    const Rational& delta() const { return delta_; }

    CurveParams curve() const { return CurveParams::e2(t_); }
    CurvePoint point() const { return CurvePoint(gamma_, delta_); }

    friend bool operator==(const TripleB& lhs, const TripleB& rhs) {
        return lhs.t_ == rhs.t_ && lhs.gamma_ == rhs.gamma_ && lhs.delta_ == rhs.delta_;
    }

private:
    Rational t_;
    Rational gamma_;
    Rational delta_;
};

//  The Klein four-group {id, sigma, tau, sigma tau}.
enum class GammaElement { identity, sigma, tau, sigma_tau };

inline GammaElement compose(GammaElement lhs, GammaElement rhs) {
    return static_cast<GammaElement>(static_cast<int>(lhs) ^ static_cast<int>(rhs));
}

inline PairA sigma(const PairA& p) {
    const Rational& s = p.s();
    const Rational& a = p.alpha();
    Rational s2m1_sq = square(s * s - 1);
    return PairA(-s, -s2m1_sq * (a - square(2 * s)) / (a + s2m1_sq));
}

inline PairA tau(const PairA& p) {
    const Rational& s = p.s();
    const Rational& a = p.alpha();
    return PairA(-1 / s, -(4 * square(s * s - 1)) / (s * s * a));
}

inline PairA apply_gamma(GammaElement g, const PairA& p) {
    switch (g) {
        case GammaElement::identity:
            return p;
        case GammaElement::sigma:
            return sigma(p);
        case GammaElement::tau:
            return tau(p);
        case GammaElement::sigma_tau:
            return sigma(tau(p));
    }
    throw InternalError("apply_gamma: bad tag");
}

// The orbit {p, sigma p, tau p, sigma tau p}, sorted. Always four distinct
// elements; a collision means broken arithmetic.
inline std::vector<PairA> gamma_orbit(const PairA& p) {
    std::vector<PairA> orbit{p, sigma(p), tau(p), sigma(tau(p))};
    std::sort(orbit.begin(), orbit.end());
    if (std::adjacent_find(orbit.begin(), orbit.end()) != orbit.end())
        throw InternalError("gamma_orbit: orbit of (s, alpha) = (" + to_string(p.s()) + ", " +
                            to_string(p.alpha()) + ") has fewer than 4 elements");
    return orbit;
}

// (s, alpha) -> (t, gamma). Total on valid pairs: the excluded denominators
// and t in {0, +-1} all force beta^2 <= 0 or torsion input.
inline PairB forward_map(const PairA& p) {
    const Rational& s = p.s();
    const Rational& a = p.alpha();
    Rational s2m1 = s * s - 1;
    Rational den = a + 2 * s * s * s2m1;
    if (den == 0)
        throw InternalError("forward_map: alpha + 2s^2(s^2-1) = 0 at a valid pair");
    Rational t = (s * a - 2 * s * s2m1) / den;
    if (t == 0 || t == 1 || t == -1)
        throw InternalError("forward_map: t = " + to_string(t) + " at a valid pair");
    Rational gamma = square(t) * square(s - 1 / s);
    try {
        return PairB(std::move(t), std::move(gamma));
    } catch (const DomainError& e) {
        throw InternalError(std::string("forward_map: image violates the square conditions: ") +
                            e.what());
    }
}

// The four preimages of (t, gamma): s from the sign choices of
// (+-sqrt(gamma) +- sqrt(gamma + (2t)^2)) / (2t), then the linear solve for
// alpha. Equals one full orbit.
inline std::vector<PairA> fiber_map(const PairB& q) {
    const Rational& t = q.t();
    Rational r_gamma = exact_sqrt(q.gamma());
    Rational r_disc = exact_sqrt(q.gamma() + square(2 * t));
    std::vector<PairA> fiber;
    fiber.reserve(4);
    for (int sign_gamma : {+1, -1}) {
        for (int sign_disc : {+1, -1}) {
            Rational s = (sign_gamma * r_gamma + sign_disc * r_disc) / (2 * t);
            if (s == 0 || s == 1 || s == -1 || s == t)
                throw InternalError("fiber_map: degenerate s = " + to_string(s) +
                                    " for (t, gamma) = (" + to_string(t) + ", " +
                                    to_string(q.gamma()) + ")");
            Rational alpha = 2 * s * (s * s - 1) * (1 + s * t) / (s - t);
            try {
                fiber.emplace_back(std::move(s), std::move(alpha));
            } catch (const DomainError& e) {
                throw InternalError(std::string("fiber_map: preimage is not a valid pair: ") +
                                    e.what());
            }
        }
    }
    std::sort(fiber.begin(), fiber.end());
    if (std::adjacent_find(fiber.begin(), fiber.end()) != fiber.end())
        throw InternalError("fiber_map: fiber has fewer than 4 elements at (t, gamma) = (" +
                            to_string(t) + ", " + to_string(q.gamma()) + ")");
    return fiber;
}

// The two lifts (s, alpha, +-beta), positive beta first.
inline std::array<TripleA, 2> lift_a(const PairA& p) {
    Rational beta = exact_sqrt(p.beta_squared());
    return {TripleA(p.s(), p.alpha(), beta), TripleA(p.s(), p.alpha(), -beta)};
}

// The lift (t, gamma, +delta) with delta^2 = gamma(gamma-(t^2-1)^2)(gamma+(2t)^2).
// The lifted point is never torsion: the torsion x-coordinates of E2(t) fail
// the square conditions.
inline TripleB lift_b(const PairB& q) {
    const Rational& t = q.t();
    const Rational& g = q.gamma();
    Rational delta = exact_sqrt(g * (g - square(t * t - 1)) * (g + square(2 * t)));
    try {
        return TripleB(t, g, std::move(delta));
    } catch (const DomainError& e) {
        throw InternalError(std::string("lift_b: lifted point rejected: ") + e.what());
    }
}

// (s, alpha, beta) -> (t, gamma, delta) with delta carrying beta's sign, so
// that the four orbit lifts sharing a sign collapse to one triple.
inline TripleB map_a_to_b(const TripleA& a) {
    PairB q = forward_map(a.pair());
    TripleB plus = lift_b(q);
    if (sgn(a.beta()) >= 0)
        return plus;
    return TripleB(plus.t(), plus.gamma(), -plus.delta());
}

// The scaling isomorphism E2(t) -> E1((t+1)/(t-1)): (x, y) -> (u^2 x, u^3 y)
// with u = 2/(t-1)^2.
inline CurvePoint transport_point_e2_to_e1(const Rational& t, const CurvePoint& p) {
    if (t == 1)
        throw DomainError("transport_point_e2_to_e1: t = 1");
    if (p.is_identity())
        return p;
    Rational u = 2 / square(t - 1);
    return CurvePoint(square(u) * p.x(), u * square(u) * p.y());
}

inline TripleA transport_to_e1(const TripleB& b) {
    Rational s_out = (b.t() + 1) / (b.t() - 1);
    CurvePoint moved = transport_point_e2_to_e1(b.t(), b.point());
    try {
        return TripleA(std::move(s_out), moved.x(), moved.y());
    } catch (const DomainError& e) {
        throw InternalError(std::string("transport_to_e1: image rejected: ") + e.what());
    }
}

// The round trip E1-point -> cuboid parameters -> E2-point -> E1-point. Not
// the identity; its s-coordinate is
//   ((s+1) alpha + 2s(s-1)^2(s+1)) / ((s-1) alpha - 2s(s-1)(s+1)^2),
// which is how fresh positive-rank parameters are produced.
inline TripleA composite_self_map(const TripleA& a) {
    return transport_to_e1(map_a_to_b(a));
}

struct RankFamilyEntry {
    Rational s;
    TripleA witness;
};

// Pushes the multiples [n] (seed point) through the composite self-map until
// `count` pairwise-distinct s-values have been produced, each certified by a
// non-torsion witness on its curve. Duplicate s-values are skipped (and
// reported through `skipped` when provided); distinct multiples have distinct
// x-coordinates, so in practice none occur.
inline std::vector<RankFamilyEntry> rank_family(const TripleA& seed, int count,
                                                std::vector<Rational>* skipped = nullptr) {
    if (count <= 0)
        throw DomainError("rank_family: count must be positive");
    CurveParams curve = seed.curve();
    CurvePoint base = seed.point();
    CurvePoint multiple = base;
    std::vector<RankFamilyEntry> out;
    out.reserve(static_cast<std::size_t>(count));
    std::set<Rational, bool (*)(const Rational&, const Rational&)> seen(rational_less);
    const long long limit = 4LL * count + 16;
    for (long long n = 1; static_cast<int>(out.size()) < count; ++n) {
        if (n > limit)
            throw InternalError("rank_family: no " + std::to_string(count) +
                                " distinct parameters among the first " + std::to_string(limit) +
                                " multiples");
        if (multiple.is_identity())
            throw InternalError("rank_family: seed multiple hit the identity");
        TripleA element(seed.s(), multiple.x(), multiple.y());
        TripleA image = composite_self_map(element);
        if (seen.insert(image.s()).second)
            out.push_back(RankFamilyEntry{image.s(), std::move(image)});
        else if (skipped != nullptr)
            skipped->push_back(image.s());
        multiple = detail::add_raw(curve, multiple, base);
    }
    return out;
}

}  // namespace cuboid
