#pragma once

// Exact scalars. Big integers and rationals are GMP values through
// Boost.Multiprecision; this header only adds the helpers the rest of the
// library needs (floor, parsing, "p/q" formatting, integer square root).

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "gaeta/error.hpp"

namespace gaeta {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

inline Rational make_rational(const BigInt& p, const BigInt& q) {
    if (q == 0)
        throw error(errc::degenerate_denominator, "zero denominator");
    return Rational(p, q);
}

inline BigInt num(const Rational& x) { return mp::numerator(x); }
inline BigInt den(const Rational& x) { return mp::denominator(x); }

inline bool is_integer(const Rational& x) { return den(x) == 1; }

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const BigInt& x) { return x.sign(); }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mp::divide_qr(a, b, q, r);
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

inline BigInt floor(const Rational& x) { return floor_div(num(x), den(x)); }

inline BigInt ceil(const Rational& x) { return -floor(-x); }

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline BigInt isqrt(const BigInt& n) {
    if (n < 0)
        throw error(errc::domain, "isqrt of a negative integer");
    return mp::sqrt(n);
}

inline bool is_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0)
        return false;
    BigInt s = mp::sqrt(n);
    if (root)
        *root = s;
    return s * s == n;
}

// Convert a Rational known to be an integer; anything else is a bug upstream.
inline BigInt to_integer(const Rational& x, const char* what) {
    if (!is_integer(x))
        throw error(errc::integrality, std::string(what) + " is not an integer: " + x.str());
    return num(x);
}

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const BigInt& x) { return x.str(); }

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(std::string_view s) {
    auto bad = [&] { return error(errc::parse, "not a rational: '" + std::string(s) + "'"); };
    auto check_int = [&](std::string_view t) {
        if (t.empty())
            throw bad();
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            throw bad();
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw bad();
    };
    auto to_big = [](std::string_view t) {
        if (!t.empty() && t[0] == '+')
            t.remove_prefix(1);
        return BigInt(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        check_int(s);
        return Rational(to_big(s));
    }
    auto p = s.substr(0, slash), q = s.substr(slash + 1);
    check_int(p);
    check_int(q);
    return make_rational(to_big(p), to_big(q));
}

// Truncated-toward-nearest decimal rendering used only for SVG coordinates.
// Rounds half away from zero, trims trailing zeros.
inline std::string to_decimal(const Rational& x, unsigned digits) {
    BigInt scale = mp::pow(BigInt(10), digits);
    Rational y = abs(x) * scale;
    BigInt r = floor(y + Rational(1, 2));
    std::string s = r.str();
    if (s.size() <= digits)
        s.insert(0, digits + 1 - s.size(), '0');
    std::string ip = s.substr(0, s.size() - digits), fp = s.substr(s.size() - digits);
    while (!fp.empty() && fp.back() == '0')
        fp.pop_back();
    std::string out = (x < 0 && r != 0) ? "-" : "";
    out += ip;
    if (!fp.empty())
        out += "." + fp;
    return out;
}

} // namespace gaeta
