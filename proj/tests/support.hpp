#pragma once

#include <random>

#include "cuboid/correspondence.hpp"
#include "cuboid/rational.hpp"

// Deterministic generators shared by the test suites.

namespace testsupport {

using cuboid::Integer;
using cuboid::Rational;
using cuboid::TripleA;

class Rng {
public:
    explicit Rng(std::uint64_t seed = 0x5eedu) : engine_(seed) {}

    long uniform(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(engine_);
    }

    // Reduced rational with |numerator| <= max_num and denominator <= max_den.
    Rational rational(long max_num, long max_den) {
        Rational q(Integer(uniform(-max_num, max_num)), Integer(uniform(1, max_den)));
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational(long max_num, long max_den) {
        for (;;) {
            Rational q = rational(max_num, max_den);
            if (q != 0)
                return q;
        }
    }

    // Casual curve parameter: nonzero, not a unit.
    Rational curve_parameter(long max_num, long max_den) {
        for (;;) {
            Rational q = rational(max_num, max_den);
            if (q != 0 && q != 1 && q != -1)
                return q;
        }
    }

private:
    std::mt19937_64 engine_;
};

inline TripleA seed_triple() {
    return TripleA(Rational(5, 3), Rational(-20, 27), Rational(1120, 243));
}

}  // namespace testsupport
