#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "cuboid/correspondence.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/rational.hpp"

// Rational face cuboids: boxes whose edges, exactly two face diagonals and
// the space diagonal are rational. Parameters (t, gamma) build the box
//
//   BF = 2|t|, EF = |t^2-1|, GF = sqrt(gamma - (t^2-1)^2)
//   BE = t^2+1 over (BF, EF), HF = sqrt(gamma) over (EF, GF),
//   DF = sqrt(gamma + (2t)^2)
//
// with EF the edge shared by the two rational face diagonals. Two parameter
// pairs give similar boxes (with corresponding labels) exactly when they lie
// in one orbit {(+-t, gamma), (+-1/t, gamma/t^4)}; the member with t > 1 is
// the canonical representative.

namespace cuboid {

struct FaceCuboid {
    Rational bf;  // vertical edge
    Rational ef;  // base edge shared by the two rational face diagonals
    Rational gf;  // the other base edge
    Rational be;  // face diagonal over (bf, ef)
    Rational hf;  // face diagonal over (ef, gf)
    Rational df;  // space diagonal
};

// Whether the third face diagonal sqrt(bf^2 + gf^2) is rational too. Reported
// only; a true value would be a perfect cuboid.
inline bool third_diagonal_rational(const FaceCuboid& c) {
    return is_perfect_square(square(c.bf) + square(c.gf));
}

inline FaceCuboid cuboid_from_pair_b(const PairB& q) {
    const Rational& t = q.t();
    const Rational& g = q.gamma();
    try {
        FaceCuboid c;
        c.bf = abs(2 * t);
        c.ef = abs(t * t - 1);
        c.gf = exact_sqrt(g - square(t * t - 1));
        c.be = t * t + 1;
        c.hf = exact_sqrt(g);
        c.df = exact_sqrt(g + square(2 * t));
        return c;
    } catch (const DomainError& e) {
        throw InternalError(std::string("cuboid_from_pair_b: square root failed on a valid "
                                        "parameter pair: ") +
                            e.what());
    }
}

// The four parameter pairs building similar boxes, starting from q.
inline std::array<PairB, 4> parameter_orbit(const PairB& q) {
    const Rational& t = q.t();
    const Rational& g = q.gamma();
    Rational t_inv = 1 / t;
    Rational g_inv = g / square(t * t);
    return {PairB(t, g), PairB(-t, g), PairB(t_inv, g_inv), PairB(-t_inv, g_inv)};
}

class CuboidClass {
public:
    CuboidClass(PairB canonical, std::array<Integer, 3> primitive_edges)
        : canonical_(std::move(canonical)), primitive_edges_(std::move(primitive_edges)) {}

    const PairB& canonical() const { return canonical_; }
    const std::array<Integer, 3>& primitive_edges() const { return primitive_edges_; }

    friend bool operator==(const CuboidClass& lhs, const CuboidClass& rhs) {
        return lhs.canonical_ == rhs.canonical_;
    }
    friend bool operator!=(const CuboidClass& lhs, const CuboidClass& rhs) {
        return !(lhs == rhs);
    }
    friend bool operator<(const CuboidClass& lhs, const CuboidClass& rhs) {
        return lhs.canonical_ < rhs.canonical_;
    }

private:
    PairB canonical_;
    std::array<Integer, 3> primitive_edges_;
};

// The coprime integer triple proportional to (bf, ef, gf), labels preserved.
inline std::array<Integer, 3> primitive_edge_triple(const FaceCuboid& c) {
    Integer common_den = lcm(lcm(c.bf.get_den(), c.ef.get_den()), c.gf.get_den());
    Integer e0 = c.bf.get_num() * (common_den / c.bf.get_den());
    Integer e1 = c.ef.get_num() * (common_den / c.ef.get_den());
    Integer e2 = c.gf.get_num() * (common_den / c.gf.get_den());
    Integer g = gcd(gcd(e0, e1), e2);
    return {e0 / g, e1 / g, e2 / g};
}

// The orbit representative with t > 1 (exactly one of |t|, 1/|t| exceeds 1),
// plus the primitive integer edges.
inline CuboidClass canonicalize(const PairB& q) {
    Rational t_abs = abs(q.t());
    PairB canonical = t_abs > 1 ? PairB(t_abs, q.gamma())
                                : PairB(1 / t_abs, q.gamma() / square(q.t() * q.t()));
    FaceCuboid box = cuboid_from_pair_b(canonical);
    std::array<Integer, 3> edges = primitive_edge_triple(box);
    return CuboidClass(std::move(canonical), std::move(edges));
}

// Inversion: edges in (bf, ef, gf) order with ef the edge shared by the two
// rational face diagonals. Recovers t from bf : ef = 2t : (t^2 - 1) and gamma
// from the (ef, gf) diagonal at unit scale.
inline PairB pair_b_from_cuboid(const Rational& bf, const Rational& ef, const Rational& gf) {
    if (sgn(bf) <= 0 || sgn(ef) <= 0 || sgn(gf) <= 0)
        throw DomainError("pair_b_from_cuboid: edges must be positive");
    Rational be_sq = square(bf) + square(ef);
    if (!is_perfect_square(be_sq))
        throw DomainError("pair_b_from_cuboid: the (bf, ef) face diagonal is irrational: bf^2 + "
                          "ef^2 = " +
                          to_string(be_sq));
    Rational hf_sq = square(ef) + square(gf);
    if (!is_perfect_square(hf_sq))
        throw DomainError("pair_b_from_cuboid: the (ef, gf) face diagonal is irrational: ef^2 + "
                          "gf^2 = " +
                          to_string(hf_sq));
    Rational df_sq = square(bf) + square(ef) + square(gf);
    if (!is_perfect_square(df_sq))
        throw DomainError("pair_b_from_cuboid: the space diagonal is irrational: bf^2 + ef^2 + "
                          "gf^2 = " +
                          to_string(df_sq));
    Rational be = exact_sqrt(be_sq);
    Rational t = bf / (be - ef);  // be > ef, so t > 0; t = 1 would force bf*ef = 0
    Rational scale = ef / (t * t - 1);
    Rational gamma = square(exact_sqrt(hf_sq) / scale);
    return PairB(std::move(t), std::move(gamma));
}

// All 32 point-level preimages of q's cuboid class: 4 parameter-orbit
// representatives x 4 fiber elements x 2 beta signs, pairwise distinct,
// sorted.
inline std::vector<TripleA> class_fiber_32(const PairB& q) {
    std::vector<TripleA> out;
    out.reserve(32);
    for (const PairB& rep : parameter_orbit(q)) {
        for (const PairA& p : fiber_map(rep)) {
            for (TripleA& lift : lift_a(p))
                out.push_back(std::move(lift));
        }
    }
    std::sort(out.begin(), out.end());
    if (out.size() != 32 || std::adjacent_find(out.begin(), out.end()) != out.end())
        throw InternalError("class_fiber_32: expected 32 distinct triples over (t, gamma) = (" +
                            to_string(q.t()) + ", " + to_string(q.gamma()) + ")");
    return out;
}

}  // namespace cuboid
