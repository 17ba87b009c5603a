#pragma once

#include <string>

#include "gaeta/exceptional.hpp"

namespace gaeta {

struct ChernCharacter {
    Rational r{0};
    Rational c1{0};
    Rational ch2{0};

    friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

    friend ChernCharacter operator+(const ChernCharacter& x, const ChernCharacter& y) {
        return {x.r + y.r, x.c1 + y.c1, x.ch2 + y.ch2};
    }
    friend ChernCharacter operator-(const ChernCharacter& x, const ChernCharacter& y) {
        return {x.r - y.r, x.c1 - y.c1, x.ch2 - y.ch2};
    }
    ChernCharacter operator-() const { return {-r, -c1, -ch2}; }
    friend ChernCharacter operator*(const BigInt& k, const ChernCharacter& x) {
        Rational q(k);
        return {q * x.r, q * x.c1, q * x.ch2};
    }

    std::string str() const { return "(" + r.str() + ", " + c1.str() + ", " + ch2.str() + ")"; }
};

inline void require_rank(const ChernCharacter& ch) {
    if (ch.r == 0)
        throw error(errc::zero_rank, "character " + ch.str() + " has rank 0");
}

inline Rational slope(const ChernCharacter& ch) {
    require_rank(ch);
    return ch.c1 / ch.r;
}

inline Rational discriminant(const ChernCharacter& ch) {
    Rational mu = slope(ch);
    return mu * mu / 2 - ch.ch2 / ch.r;
}

inline Rational euler_char(const ChernCharacter& ch) {
    return ch.r * (hilbert_poly(slope(ch)) - discriminant(ch));
}

inline Rational euler_pairing(const ChernCharacter& e, const ChernCharacter& f) {
    return e.r * f.r * (hilbert_poly(slope(f) - slope(e)) - discriminant(e) - discriminant(f));
}

// Character of E_alpha for any exceptional value; the rank is its denominator.
inline ChernCharacter exceptional_character(const Rational& alpha) {
    Rational r(den(alpha));
    return {r, r * alpha, r * (alpha * alpha / 2 - exceptional_discriminant(den(alpha)))};
}

inline ChernCharacter exceptional_character(const ExceptionalSlope& e) {
    return exceptional_character(e.value);
}

inline ChernCharacter twist(const ChernCharacter& ch, const BigInt& k) {
    Rational q(k);
    return {ch.r, ch.c1 + q * ch.r, ch.ch2 + q * ch.c1 + q * q * ch.r / 2};
}

inline ChernCharacter dual(const ChernCharacter& ch) { return {ch.r, -ch.c1, ch.ch2}; }

inline ChernCharacter line_bundle(const BigInt& k) { return twist({1, 0, 0}, k); }

inline ChernCharacter ideal_sheaf_character(const BigInt& n) { return {1, 0, Rational(-n)}; }

// dim Hom(E_alpha, E_beta) for exceptional bundles, valid only when alpha <= beta
// where all higher Ext vanish.
inline BigInt hom_dimension(const ExceptionalSlope& a, const ExceptionalSlope& b) {
    if (a.value > b.value)
        throw error(errc::domain, "hom_dimension needs mu(E) <= mu(F)");
    return to_integer(euler_pairing(exceptional_character(a), exceptional_character(b)), "dim Hom");
}

} // namespace gaeta
