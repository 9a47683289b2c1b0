#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "cuboid/errors.hpp"
#include "cuboid/face_cuboid.hpp"

// Brute-force enumeration of integer face cuboids, independent of the curve
// machinery, for cross-validation. A hit is a primitive integer edge triple
// whose space diagonal and at least two face diagonals are integers.

namespace cuboid {

struct IntegerCuboidHit {
    std::array<std::int64_t, 3> edges;  // ascending
    // {edge, edge, diagonal} for every face whose diagonal is an integer,
    // in edge order.
    std::vector<std::array<std::int64_t, 3>> rational_diagonals;
    std::optional<std::int64_t> space_diagonal;
};

inline bool operator==(const IntegerCuboidHit& lhs, const IntegerCuboidHit& rhs) {
    return lhs.edges == rhs.edges && lhs.rational_diagonals == rhs.rational_diagonals &&
           lhs.space_diagonal == rhs.space_diagonal;
}

namespace detail {

inline std::int64_t isqrt64(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

inline std::optional<std::int64_t> integral_diagonal(std::int64_t a, std::int64_t b) {
    std::int64_t sq = a * a + b * b;
    std::int64_t r = isqrt64(sq);
    if (r * r == sq)
        return r;
    return std::nullopt;
}

inline std::optional<std::int64_t> integral_space_diagonal(std::int64_t a, std::int64_t b,
                                                           std::int64_t c) {
    std::int64_t sq = a * a + b * b + c * c;
    std::int64_t r = isqrt64(sq);
    if (r * r == sq)
        return r;
    return std::nullopt;
}

// partners[v] = all w <= max_edge with v^2 + w^2 a perfect square, built by
// scaling primitive Pythagorean legs (m^2-n^2, 2mn).
inline std::vector<std::vector<std::int64_t>> pythagorean_partners(std::int64_t max_edge) {
    // Any leg pair from parameters (m, n) has its larger leg >= 2(sqrt(2)-1) m^2,
    // so m^2 <= 2 max_edge is exhaustive.
    std::vector<std::vector<std::int64_t>> partners(static_cast<std::size_t>(max_edge) + 1);
    for (std::int64_t m = 2; m * m <= 2 * max_edge; ++m) {
        for (std::int64_t n = 1; n < m; ++n) {
            if ((m - n) % 2 == 0 || std::gcd(m, n) != 1)
                continue;
            std::int64_t leg_odd = m * m - n * n;
            std::int64_t leg_even = 2 * m * n;
            if (leg_odd > max_edge && leg_even > max_edge)
                continue;
            for (std::int64_t k = 1; k * leg_odd <= max_edge && k * leg_even <= max_edge; ++k) {
                partners[static_cast<std::size_t>(k * leg_odd)].push_back(k * leg_even);
                partners[static_cast<std::size_t>(k * leg_even)].push_back(k * leg_odd);
            }
        }
    }
    for (auto& list : partners)
        std::sort(list.begin(), list.end());
    return partners;
}

inline IntegerCuboidHit describe_triple(const std::array<std::int64_t, 3>& edges) {
    IntegerCuboidHit hit;
    hit.edges = edges;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (auto d = integral_diagonal(edges[i], edges[j]))
                hit.rational_diagonals.push_back({edges[i], edges[j], *d});
        }
    }
    hit.space_diagonal = integral_space_diagonal(edges[0], edges[1], edges[2]);
    return hit;
}

}  // namespace detail

// Every primitive integer triple with edges <= max_edge, an integral space
// diagonal and at least two integral face diagonals, ordered lexicographically
// by ascending edges. The scan joins Pythagorean pairs over their shared leg,
// partitioned across threads by shared-leg ranges; 0 threads means hardware
// concurrency.
inline std::vector<IntegerCuboidHit> brute_force_face_cuboids(std::int64_t max_edge,
                                                              unsigned threads = 0) {
    if (max_edge < 1)
        throw DomainError("brute_force_face_cuboids: max_edge must be positive");
    if (max_edge > 2'000'000)
        throw DomainError("brute_force_face_cuboids: max_edge above 2000000 would overflow the "
                          "64-bit scan");
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, 64u);

    const auto partners = detail::pythagorean_partners(max_edge);

    using Triple = std::array<std::int64_t, 3>;
    std::vector<std::vector<Triple>> found(threads);
    auto scan_range = [&](std::int64_t lo, std::int64_t hi, std::vector<Triple>& out) {
        for (std::int64_t shared = lo; shared < hi; ++shared) {
            const auto& list = partners[static_cast<std::size_t>(shared)];
            for (std::size_t i = 0; i < list.size(); ++i) {
                for (std::size_t j = i; j < list.size(); ++j) {
                    std::int64_t a = list[i];
                    std::int64_t c = list[j];
                    if (!detail::integral_space_diagonal(a, shared, c))
                        continue;
                    std::int64_t g = std::gcd(std::gcd(a, shared), c);
                    Triple triple{a / g, shared / g, c / g};
                    std::sort(triple.begin(), triple.end());
                    out.push_back(triple);
                }
            }
        }
    };

    if (threads == 1) {
        scan_range(1, max_edge + 1, found[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        std::int64_t chunk = (max_edge + threads) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            std::int64_t lo = 1 + w * chunk;
            std::int64_t hi = std::min<std::int64_t>(lo + chunk, max_edge + 1);
            if (lo > max_edge)
                break;
            pool.emplace_back(scan_range, lo, hi, std::ref(found[w]));
        }
        for (auto& worker : pool)
            worker.join();
    }

    std::set<Triple> unique;
    for (const auto& batch : found)
        unique.insert(batch.begin(), batch.end());

    std::vector<IntegerCuboidHit> hits;
    hits.reserve(unique.size());
    for (const Triple& triple : unique)
        hits.push_back(detail::describe_triple(triple));
    return hits;
}

// The (bf, ef, gf) labeling of a hit: ef is the edge shared by the two
// integral-diagonal faces, bf the smaller and gf the larger of the rest.
inline std::array<std::int64_t, 3> face_cuboid_orientation(const IntegerCuboidHit& hit) {
    const auto& e = hit.edges;
    for (std::int64_t v : e)
        if (v <= 0)
            throw DomainError("face_cuboid_orientation: edges must be positive");
    if (!detail::integral_space_diagonal(e[0], e[1], e[2]))
        throw DomainError("face_cuboid_orientation: the space diagonal is not an integer");
    const bool d01 = detail::integral_diagonal(e[0], e[1]).has_value();
    const bool d02 = detail::integral_diagonal(e[0], e[2]).has_value();
    const bool d12 = detail::integral_diagonal(e[1], e[2]).has_value();
    const int count = int(d01) + int(d02) + int(d12);
    if (count == 3)
        throw PerfectCuboidError("face_cuboid_orientation: all three face diagonals are integers "
                                 "(a perfect cuboid?); refusing to pick a pair");
    if (count < 2)
        throw DomainError("face_cuboid_orientation: fewer than two integral face diagonals");
    std::int64_t shared, other_a, other_b;
    if (d01 && d02) {
        shared = e[0]; other_a = e[1]; other_b = e[2];
    } else if (d01 && d12) {
        shared = e[1]; other_a = e[0]; other_b = e[2];
    } else {
        shared = e[2]; other_a = e[0]; other_b = e[1];
    }
    return {std::min(other_a, other_b), shared, std::max(other_a, other_b)};
}

// Sends a hit through the full correspondence and back: orient the edges,
// recover (t, gamma), check the four preimage parameters exist, rebuild the
// box and compare shapes.
inline bool verify_class_roundtrip(const IntegerCuboidHit& hit) {
    std::array<std::int64_t, 3> oriented = face_cuboid_orientation(hit);
    Rational bf(oriented[0]);
    Rational ef(oriented[1]);
    Rational gf(oriented[2]);
    PairB params = pair_b_from_cuboid(bf, ef, gf);
    std::vector<PairA> fiber = fiber_map(params);
    if (fiber.size() != 4)
        return false;
    FaceCuboid rebuilt = cuboid_from_pair_b(params);
    return rebuilt.bf * ef == rebuilt.ef * bf && rebuilt.ef * gf == rebuilt.gf * ef;
}

}  // namespace cuboid
