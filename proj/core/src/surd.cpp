#include "bicrit/surd.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdlib>

#include "bicrit/errors.hpp"

namespace bicrit {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
    return boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a), abs(b)), abs(c));
}

// sign of a + b*sqrt(d), exact
int sign_of(const BigInt& a, const BigInt& b, std::int64_t d) {
    if (b == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
    if (a == 0) return b > 0 ? 1 : -1;
    if (a > 0 && b > 0) return 1;
    if (a < 0 && b < 0) return -1;
    // opposite signs: compare a^2 with b^2 d
    BigInt a2 = a * a, b2d = b * b * d;
    if (a2 == b2d) return 0;
    bool a_wins = a2 > b2d;
    int sa = a > 0 ? 1 : -1;
    return a_wins ? sa : -sa;
}

}  // namespace

Surd::Surd(BigInt p_, BigInt q_, BigInt e_, std::int64_t d_)
    : p(std::move(p_)), q(std::move(q_)), e(std::move(e_)), d(d_) {
    if (e == 0) throw DomainError("surd: zero denominator");
    if (d <= 1) throw DomainError("surd: d must be > 1");
    normalize();
}

Surd Surd::integer(long long n, std::int64_t d) { return Surd(BigInt(n), BigInt(0), BigInt(1), d); }

Surd Surd::rational(BigInt num, BigInt den, std::int64_t d) {
    return Surd(std::move(num), BigInt(0), std::move(den), d);
}

void Surd::normalize() {
    if (e < 0) {
        p = -p;
        q = -q;
        e = -e;
    }
    BigInt g = gcd3(p, q, e);
    if (g > 1) {
        p /= g;
        q /= g;
        e /= g;
    }
}

int Surd::sign() const { return sign_of(p, q, d); }

Surd Surd::neg() const { return Surd(-p, -q, e, d); }

Surd Surd::add(const Surd& o) const {
    if (o.d != d) throw DomainError("surd: mixed fields");
    return Surd(p * o.e + o.p * e, q * o.e + o.q * e, e * o.e, d);
}

Surd Surd::sub(const Surd& o) const { return add(o.neg()); }

Surd Surd::sub_int(const BigInt& n) const { return Surd(p - n * e, q, e, d); }

Surd Surd::mul(const Surd& o) const {
    if (o.d != d) throw DomainError("surd: mixed fields");
    return Surd(p * o.p + q * o.q * d, p * o.q + q * o.p, e * o.e, d);
}

Surd Surd::recip() const {
    if (is_zero()) throw DomainError("surd: reciprocal of zero");
    // e/(p + q sqrt(d)) = e (p - q sqrt(d)) / (p^2 - q^2 d)
    BigInt denom = p * p - q * q * d;
    return Surd(e * p, -e * q, denom, d);
}

Surd Surd::div(const Surd& o) const { return mul(o.recip()); }

bool Surd::eq(const Surd& o) const { return d == o.d && p == o.p && q == o.q && e == o.e; }

BigInt Surd::floor() const {
    // start from a double estimate, then correct exactly
    double approx = to_double(to_real());
    BigInt n = static_cast<long long>(std::floor(approx));
    // x - n >= 0  <=>  p - n e + q sqrt(d) >= 0
    while (sign_of(p - n * e, q, d) < 0) --n;
    while (sign_of(p - (n + 1) * e, q, d) >= 0) ++n;
    return n;
}

SurdNearest Surd::nearest() const {
    BigInt f = floor();
    // compare x with f + 1/2: 2(p - f e) - e + 2 q sqrt(d)
    int cmp = sign_of(2 * (p - f * e) - e, 2 * q, d);
    SurdNearest out;
    out.tie = (cmp == 0);
    if (cmp <= 0) {
        // tie resolves toward eps = +1 with n = round-down
        out.n = f;
        out.dist = sub_int(f);
        out.eps = 1;
    } else {
        out.n = f + 1;
        out.dist = Surd((f + 1) * e - p, -q, e, d);
        out.eps = -1;
    }
    return out;
}

Real Surd::to_real() const {
    Real sq = sqrt(Real(d));
    return (Real(p.str()) + Real(q.str()) * sq) / Real(e.str());
}

std::string Surd::str() const {
    return "(" + p.str() + (q >= 0 ? "+" : "") + q.str() + "√" + std::to_string(d) + ")/" + e.str();
}

Surd parse_surd(const std::string& text) {
    // accepted: (p+q√d)/e, (p-q√d)/e, sqrt spelled out, unicode minus, spaces
    std::string s;
    for (size_t i = 0; i < text.size();) {
        unsigned char c = text[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (text.compare(i, 3, "√") == 0) {  // √
            s += 'R';
            i += 3;
        } else if (text.compare(i, 3, "−") == 0) {  // unicode minus
            s += '-';
            i += 3;
        } else if (text.compare(i, 4, "sqrt") == 0) {
            s += 'R';
            i += 4;
        } else {
            s += static_cast<char>(c);
            ++i;
        }
    }
    auto fail = [&] { throw UsageError("cannot parse surd: " + text); };
    size_t pos = 0;
    auto expect = [&](char c) {
        if (pos >= s.size() || s[pos] != c) fail();
        ++pos;
    };
    auto read_int = [&]() -> BigInt {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail();
        return BigInt(s.substr(start, pos - start));
    };
    expect('(');
    BigInt p = read_int();
    if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) fail();
    bool qneg = s[pos] == '-';
    ++pos;
    BigInt q = read_int();
    if (qneg) q = -q;
    expect('R');
    bool paren = pos < s.size() && s[pos] == '(';
    if (paren) ++pos;
    BigInt d = read_int();
    if (paren) expect(')');
    expect(')');
    expect('/');
    BigInt e = read_int();
    if (pos != s.size()) fail();
    long long dv = d.convert_to<long long>();
    if (dv <= 1) fail();
    return Surd(p, q, e, dv);
}

}  // namespace bicrit
