#ifndef BICRIT_SURD_HPP
#define BICRIT_SURD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "bicrit/real.hpp"

namespace bicrit {

using BigInt = boost::multiprecision::cpp_int;

struct SurdNearest;

// Exact element (p + q*sqrt(d))/e of a fixed real quadratic field.
// d is square-free and > 1; e > 0; gcd(p, q, e) == 1 after normalize().
// Rationals are the q == 0 case. The Gauss step (reciprocal, subtract
// nearest integer) stays inside the field, so periodic expansions can be
// detected by exact equality.
struct Surd {
    BigInt p{0};
    BigInt q{0};
    BigInt e{1};
    std::int64_t d{2};

    Surd() = default;
    Surd(BigInt p_, BigInt q_, BigInt e_, std::int64_t d_);

    static Surd integer(long long n, std::int64_t d = 2);
    static Surd rational(BigInt num, BigInt den, std::int64_t d = 2);

    void normalize();

    bool is_zero() const { return p == 0 && q == 0; }
    bool is_rational() const { return q == 0; }

    int sign() const;

    Surd neg() const;
    Surd add(const Surd& o) const;
    Surd sub(const Surd& o) const;
    Surd sub_int(const BigInt& n) const;
    Surd mul(const Surd& o) const;
    Surd recip() const;  // throws DomainError on zero
    Surd div(const Surd& o) const;

    bool eq(const Surd& o) const;
    bool lt(const Surd& o) const { return sub(o).sign() < 0; }

    BigInt floor() const;
    SurdNearest nearest() const;

    Real to_real() const;
    std::string str() const;
};

// Nearest integer decomposition x = n + eps*dist, dist in [0, 1/2].
// Ties (dist exactly 1/2) resolve to eps = +1 with n = round-down.
struct SurdNearest {
    BigInt n;
    int eps = 1;
    Surd dist;
    bool tie = false;
};

// Parses "(p+q√d)/e" (also accepts "sqrt" spelled out and ASCII minus).
Surd parse_surd(const std::string& text);

}  // namespace bicrit

#endif
