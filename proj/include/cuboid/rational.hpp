#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>

#include "cuboid/errors.hpp"

// Exact arithmetic substrate. Every scalar in this library is an
// arbitrary-precision rational kept in lowest terms with a positive
// denominator (GMP canonical form); there is no floating point anywhere.

namespace cuboid {

using Integer = mpz_class;
using Rational = mpq_class;

// floor(sqrt(n)) by integer Newton iteration. The iterate is strictly
// decreasing while above the root, so the first non-decrease is the answer.
inline Integer integer_sqrt_floor(const Integer& n) {
    if (n < 0)
        throw DomainError("integer_sqrt_floor: negative input " + n.get_str());
    if (n == 0)
        return Integer(0);
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Integer x = Integer(1) << static_cast<unsigned long>((bits + 1) / 2);
    for (;;) {
        Integer y = (x + n / x) >> 1;
        if (y >= x)
            return x;
        x = std::move(y);
    }
}

inline bool is_perfect_square(const Integer& n) {
    if (n < 0)
        return false;
    Integer r = integer_sqrt_floor(n);
    return r * r == n;
}

// True iff q = r^2 for some rational r. With q reduced, numerator and
// denominator must be squares independently.
inline bool is_perfect_square(const Rational& q) {
    if (sgn(q) < 0)
        return false;
    return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// The non-negative r with r^2 = q. Sign choices are the caller's business.
inline Rational exact_sqrt(const Rational& q) {
    if (sgn(q) < 0)
        throw DomainError("exact_sqrt: negative input " + to_string(q));
    Integer rn = integer_sqrt_floor(q.get_num());
    Integer rd = integer_sqrt_floor(q.get_den());
    if (rn * rn != q.get_num() || rd * rd != q.get_den())
        throw DomainError("exact_sqrt: not a perfect square: " + to_string(q));
    return Rational(std::move(rn), std::move(rd));
}

// Parses "p/q" or "p" (sign on the numerator only). Rejects anything else:
// no whitespace, no base prefixes, no zero denominator.
inline Rational parse_rational(const std::string& text) {
    const auto fail = [&]() -> Rational {
        throw ParseError("not a rational \"p/q\": '" + text + "'");
    };
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    const std::size_t num_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        ++i;
    if (i == num_begin)
        return fail();
    // mpz_set_str takes "-7" but not "+7"
    std::string num = text[0] == '+' ? text.substr(1, i - 1) : text.substr(0, i);
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/')
            return fail();
        const std::size_t den_begin = ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
            ++i;
        if (i == den_begin || i != text.size())
            return fail();
        den = text.substr(den_begin);
    }
    Integer d(den);
    if (d == 0)
        throw ParseError("zero denominator: '" + text + "'");
    Rational q(Integer(num), std::move(d));
    q.canonicalize();
    return q;
}

inline Rational square(const Rational& x) {
    return x * x;
}

inline bool rational_less(const Rational& a, const Rational& b) {
    return cmp(a, b) < 0;
}

}  // namespace cuboid
