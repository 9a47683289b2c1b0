#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "cuboid/errors.hpp"
#include "cuboid/rational.hpp"

// Elliptic curves y^2 = x(x - a)(x + b) over Q with the exact chord-tangent
// group law. Two parametrized shapes cover everything this library needs:
//
//   E1(s): a = (2s)^2,      b = (s^2 - 1)^2,   s not in {0, +-1}
//   E2(t): a = (t^2 - 1)^2, b = (2t)^2,        t not in {0, +-1}
//
// Both families have full rational torsion Z/2 x Z/4 with closed-form
// coordinates, so torsion membership is a constant-time lookup.

namespace cuboid {

enum class CurveFamily { e1, e2, generic };

class CurveParams {
public:
    static CurveParams e1(const Rational& s) {
        if (s == 0 || s == 1 || s == -1)
            throw DomainError("E1 parameter must avoid {0, 1, -1}, got s = " + to_string(s));
        Rational two_s = 2 * s;
        Rational s2m1 = s * s - 1;
        return CurveParams(square(two_s), square(s2m1), CurveFamily::e1, s);
    }

    static CurveParams e2(const Rational& t) {
        if (t == 0 || t == 1 || t == -1)
            throw DomainError("E2 parameter must avoid {0, 1, -1}, got t = " + to_string(t));
        Rational t2m1 = t * t - 1;
        Rational two_t = 2 * t;
        return CurveParams(square(t2m1), square(two_t), CurveFamily::e2, t);
    }

    static CurveParams generic(const Rational& a, const Rational& b) {
        return CurveParams(a, b, CurveFamily::generic, Rational(0));
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    CurveFamily family() const { return family_; }

    // s for E1, t for E2.
    const Rational& parameter() const { return param_; }

    // Expanded form y^2 = x^3 + A x^2 + B x.
    Rational coeff_a2() const { return b_ - a_; }
    Rational coeff_a4() const { return -a_ * b_; }

    friend bool operator==(const CurveParams& lhs, const CurveParams& rhs) {
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
    }

private:
    CurveParams(Rational a, Rational b, CurveFamily family, Rational param)
        : a_(std::move(a)), b_(std::move(b)), param_(std::move(param)), family_(family) {
        if (a_ == 0 || b_ == 0 || a_ == -b_)
            throw DomainError("singular curve: roots 0, a, -b must be distinct (a = " +
                              to_string(a_) + ", b = " + to_string(b_) + ")");
    }

    Rational a_;
    Rational b_;
    Rational param_;
    CurveFamily family_;
};

// Identity marker or exact affine coordinates.
class CurvePoint {
public:
    CurvePoint() : identity_(true) {}
    CurvePoint(Rational x, Rational y)
        : identity_(false), x_(std::move(x)), y_(std::move(y)) {}

    bool is_identity() const { return identity_; }

    const Rational& x() const {
        if (identity_)
            throw InternalError("x() on the identity point");
        return x_;
    }
    const Rational& y() const {
        if (identity_)
            throw InternalError("y() on the identity point");
        return y_;
    }

    friend bool operator==(const CurvePoint& lhs, const CurvePoint& rhs) {
        if (lhs.identity_ || rhs.identity_)
            return lhs.identity_ && rhs.identity_;
        return lhs.x_ == rhs.x_ && lhs.y_ == rhs.y_;
    }

    friend bool operator!=(const CurvePoint& lhs, const CurvePoint& rhs) {
        return !(lhs == rhs);
    }

    // Identity first, then lexicographic by (x, y).
    friend bool operator<(const CurvePoint& lhs, const CurvePoint& rhs) {
        if (lhs.identity_ || rhs.identity_)
            return lhs.identity_ && !rhs.identity_;
        int cx = cmp(lhs.x_, rhs.x_);
        if (cx != 0)
            return cx < 0;
        return cmp(lhs.y_, rhs.y_) < 0;
    }

private:
    bool identity_;
    Rational x_;
    Rational y_;
};

inline bool contains(const CurveParams& curve, const CurvePoint& p) {
    if (p.is_identity())
        return true;
    Rational rhs = p.x() * (p.x() - curve.a()) * (p.x() + curve.b());
    return p.y() * p.y() == rhs;
}

inline CurvePoint negate(const CurvePoint& p) {
    if (p.is_identity())
        return p;
    return CurvePoint(p.x(), -p.y());
}

namespace detail {

inline void require_on_curve(const CurveParams& curve, const CurvePoint& p, const char* who) {
    if (!contains(curve, p))
        throw DomainError(std::string(who) + ": point is not on the curve");
}

// Chord-tangent addition without the entry check; callers have already
// validated membership.
inline CurvePoint add_raw(const CurveParams& curve, const CurvePoint& p, const CurvePoint& q) {
    if (p.is_identity())
        return q;
    if (q.is_identity())
        return p;
    Rational slope;
    if (p.x() == q.x()) {
        if (p.y() + q.y() == 0)
            return CurvePoint();  // vertical chord or 2-torsion tangent
        slope = (3 * p.x() * p.x() + 2 * curve.coeff_a2() * p.x() + curve.coeff_a4()) /
                (2 * p.y());
    } else {
        slope = (q.y() - p.y()) / (q.x() - p.x());
    }
    Rational x3 = slope * slope - curve.coeff_a2() - p.x() - q.x();
    Rational y3 = slope * (p.x() - x3) - p.y();
    return CurvePoint(std::move(x3), std::move(y3));
}

}  // namespace detail

inline CurvePoint add(const CurveParams& curve, const CurvePoint& p, const CurvePoint& q) {
    detail::require_on_curve(curve, p, "add");
    detail::require_on_curve(curve, q, "add");
    return detail::add_raw(curve, p, q);
}

// Double-and-add. Coordinate size grows quadratically with |n|; cost grows
// with digit length accordingly.
inline CurvePoint scalar_mul(const CurveParams& curve, long long n, const CurvePoint& p) {
    detail::require_on_curve(curve, p, "scalar_mul");
    bool negate_result = n < 0;
    unsigned long long k = negate_result ? -static_cast<unsigned long long>(n)
                                         : static_cast<unsigned long long>(n);
    CurvePoint acc;
    CurvePoint base = p;
    while (k > 0) {
        if (k & 1ULL)
            acc = detail::add_raw(curve, acc, base);
        k >>= 1;
        if (k > 0)
            base = detail::add_raw(curve, base, base);
    }
    return negate_result ? negate(acc) : acc;
}

// The full rational torsion of E1(s): Z/2 x Z/4, eight points.
//   x = 0, (2s)^2, -(s^2-1)^2          (order 2)
//   x = 2s(s+1)^2, y = +-2s(s+1)^2(s^2+1)    (order 4)
//   x = -2s(s-1)^2, y = +-2s(s-1)^2(s^2+1)   (order 4)
inline std::vector<CurvePoint> torsion_points_e1(const Rational& s) {
    if (s == 0 || s == 1 || s == -1)
        throw DomainError("torsion_points_e1: s must avoid {0, 1, -1}");
    Rational zero(0);
    Rational s2p1 = s * s + 1;
    Rational x_plus = 2 * s * square(s + 1);
    Rational x_minus = -2 * s * square(s - 1);
    Rational y_plus = x_plus * s2p1;
    Rational y_minus = -x_minus * s2p1;
    std::vector<CurvePoint> pts;
    pts.reserve(8);
    pts.emplace_back();
    pts.emplace_back(zero, zero);
    pts.emplace_back(square(2 * s), zero);
    pts.emplace_back(-square(s * s - 1), zero);
    pts.emplace_back(x_plus, y_plus);
    pts.emplace_back(x_plus, -y_plus);
    pts.emplace_back(x_minus, y_minus);
    pts.emplace_back(x_minus, -y_minus);
    std::sort(pts.begin(), pts.end());
    return pts;
}

// The E2(t) torsion, the image of the E1 list under the scaling isomorphism
// x -> x (t-1)^4 / 4, y -> y (t-1)^6 / 8 with s = (t+1)/(t-1):
//   x = 0, (t^2-1)^2, -(2t)^2                          (order 2)
//   x = 2t^2(t^2-1),  y = +-2t^2(t^2-1)(t^2+1)         (order 4)
//   x = -2(t^2-1),    y = +-2(t^2-1)(t^2+1)            (order 4)
inline std::vector<CurvePoint> torsion_points_e2(const Rational& t) {
    if (t == 0 || t == 1 || t == -1)
        throw DomainError("torsion_points_e2: t must avoid {0, 1, -1}");
    Rational zero(0);
    Rational t2m1 = t * t - 1;
    Rational t2p1 = t * t + 1;
    Rational x_plus = 2 * t * t * t2m1;
    Rational x_minus = -2 * t2m1;
    Rational y_plus = x_plus * t2p1;
    Rational y_minus = -x_minus * t2p1;
    std::vector<CurvePoint> pts;
    pts.reserve(8);
    pts.emplace_back();
    pts.emplace_back(zero, zero);
    pts.emplace_back(square(t2m1), zero);
    pts.emplace_back(-square(2 * t), zero);
    pts.emplace_back(x_plus, y_plus);
    pts.emplace_back(x_plus, -y_plus);
    pts.emplace_back(x_minus, y_minus);
    pts.emplace_back(x_minus, -y_minus);
    std::sort(pts.begin(), pts.end());
    return pts;
}

// Membership in the explicit torsion list of the point's family. The list is
// complete for E1/E2, so no multiple-of-point search is needed.
inline bool is_torsion(const CurveParams& curve, const CurvePoint& p) {
    detail::require_on_curve(curve, p, "is_torsion");
    std::vector<CurvePoint> torsion;
    switch (curve.family()) {
        case CurveFamily::e1:
            torsion = torsion_points_e1(curve.parameter());
            break;
        case CurveFamily::e2:
            torsion = torsion_points_e2(curve.parameter());
            break;
        case CurveFamily::generic:
            throw DomainError("is_torsion: unsupported for generic curves");
    }
    return std::binary_search(torsion.begin(), torsion.end(), p);
}

// Independent oracle: p is torsion iff [n]p = O for some n <= bound. Mazur's
// bound caps rational torsion orders at 12, hence the default.
inline bool torsion_brute_check(const CurveParams& curve, const CurvePoint& p, int bound = 12) {
    detail::require_on_curve(curve, p, "torsion_brute_check");
    CurvePoint acc = p;
    for (int n = 1; n <= bound; ++n) {
        if (acc.is_identity())
            return true;
        acc = detail::add_raw(curve, acc, p);
    }
    return false;
}

}  // namespace cuboid
