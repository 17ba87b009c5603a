#pragma once

#include "gaeta/chern.hpp"

namespace gaeta {

inline Rational delta(const Rational& mu) {
    const ExceptionalSlope& a = associated_slope(mu);
    return hilbert_poly(-abs(mu - a.value)) - a.discriminant;
}

inline Rational gamma(const Rational& mu) {
    if (mu < 0)
        throw error(errc::domain, "gamma is defined on nonnegative slopes");
    return hilbert_poly(mu) - delta(mu);
}

namespace detail {

// Constant term shared by both affine branches of gamma on I_alpha.
inline Rational gamma_offset(const ExceptionalSlope& a) {
    return 1 + a.discriminant - hilbert_poly(a.value);
}

inline Rational gamma_left(const ExceptionalSlope& a, const Rational& mu) {
    return a.value * (mu + 3) + gamma_offset(a);
}

inline Rational gamma_right(const ExceptionalSlope& a, const Rational& mu) {
    return (a.value + 3) * mu + gamma_offset(a);
}

} // namespace detail

inline Rational gamma_inv(const Rational& q) {
    if (q < 0)
        throw error(errc::domain, "gamma_inv needs q >= 0");
    if (q == 0)
        return 0;
    // xi = (-3 + sqrt(5 + 8q)) / 2 lies in the same I_alpha as gamma^-1(q).
    QuadSurd root = QuadSurd::sqrt_of(5 + 8 * q);
    QuadSurd xi = (QuadSurd(-3) + root) * QuadSurd(Rational(1, 2));
    const ExceptionalSlope& a = associated_slope(xi);
    Rational c = q - detail::gamma_offset(a);
    Rational mu;
    if (q <= detail::gamma_left(a, a.value)) {
        if (a.value == 0)
            throw error(errc::internal_inconsistency, "left branch at alpha = 0 with q > 0");
        mu = c / a.value - 3;
    } else {
        mu = c / (a.value + 3);
    }
    if (!a.contains(QuadSurd(mu)) || gamma(mu) != q)
        throw error(errc::internal_inconsistency, "gamma_inv(" + q.str() + ") produced " + mu.str());
    return mu;
}

// Drezet's existence criterion for stable bundles of invariants (r, mu, Delta).
inline bool moduli_nonempty(const BigInt& r, const Rational& mu, const Rational& Delta) {
    if (r <= 0)
        throw error(errc::domain, "rank must be positive");
    Rational R(r);
    if (!is_integer(R * mu) || !is_integer(R * (hilbert_poly(mu) - Delta)))
        throw error(errc::integrality, "r*mu and r*(P(mu) - Delta) must be integers");
    if (delta(mu) <= Delta)
        return true;
    const ExceptionalSlope& a = associated_slope(mu);
    return a.value == mu && Delta == a.discriminant && r % a.rank == 0;
}

inline BigInt height(const ChernCharacter& ch) {
    if (ch.r <= 0)
        throw error(errc::domain, "height needs positive rank");
    Rational mu = slope(ch);
    const ExceptionalSlope& a = associated_slope(mu);
    Rational h = ch.r * Rational(a.rank) * (discriminant(ch) - delta(mu));
    return to_integer(h, "height");
}

enum class MinSlopeCase { NonExceptional, ExceptionalBundle, TriangularMinusOne };

inline const char* to_string(MinSlopeCase c) {
    switch (c) {
    case MinSlopeCase::NonExceptional: return "NonExceptional";
    case MinSlopeCase::ExceptionalBundle: return "ExceptionalBundle";
    case MinSlopeCase::TriangularMinusOne: return "TriangularMinusOne";
    }
    return "?";
}

struct MinSlopeResult {
    BigInt n;
    Rational mu;
    Rational lambda;
    const ExceptionalSlope* associated = nullptr;
    MinSlopeCase kind = MinSlopeCase::NonExceptional;
};

// n = (r+2)(r+1)/2 - 1 for a positive integer r; returns r or 0.
inline BigInt triangular_minus_one_index(const BigInt& n) {
    // (r+2)(r+1) = 2n + 2  =>  (2r+3)^2 = 8n + 9
    BigInt s;
    if (n < 2 || !is_square(8 * n + 9, &s))
        return 0;
    return (s - 3) / 2;
}

inline MinSlopeResult min_slope(const BigInt& n) {
    if (n < 1)
        throw error(errc::domain, "min_slope needs n >= 1");
    MinSlopeResult res;
    res.n = n;
    res.lambda = gamma_inv(Rational(n));
    const ExceptionalSlope& a = associated_slope(res.lambda);
    res.associated = &a;
    bool use_alpha = a.value <= res.lambda && Rational(a.euler, a.rank) >= Rational(n);
    res.mu = use_alpha ? a.value : res.lambda;
    if (triangular_minus_one_index(n) > 0)
        res.kind = MinSlopeCase::TriangularMinusOne;
    else if (use_alpha)
        res.kind = MinSlopeCase::ExceptionalBundle;
    else
        res.kind = MinSlopeCase::NonExceptional;
    return res;
}

} // namespace gaeta
