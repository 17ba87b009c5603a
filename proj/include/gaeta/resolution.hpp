#pragma once

// Generalized Gaeta resolutions of the general ideal sheaf of n points,
// tracked at the level of Chern characters.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaeta/contfrac.hpp"
#include "gaeta/stability.hpp"

namespace gaeta {

enum class ResolutionCase { BelowDot, AtDot, AboveDot };

inline const char* to_string(ResolutionCase c) {
    switch (c) {
    case ResolutionCase::BelowDot: return "BelowDot";
    case ResolutionCase::AtDot: return "AtDot";
    case ResolutionCase::AboveDot: return "AboveDot";
    }
    return "?";
}

// One entry of an exact sequence: `multiplicity` copies of a bundle with
// character `unit`. W and I_Z entries carry no slope.
struct Term {
    std::string label;
    std::optional<Rational> slope;
    BigInt multiplicity{1};
    ChernCharacter unit;

    ChernCharacter total() const { return multiplicity * unit; }

    std::string str() const {
        if (multiplicity == 1)
            return label;
        return label + "^" + multiplicity.str();
    }
};

// A two-term presentation 0 -> sum(left) -> sum(right) -> I_Z -> 0, as
// (slope, multiplicity) lists sorted by slope with zero multiplicities dropped.
struct TwoTermResolution {
    std::vector<std::pair<Rational, BigInt>> left;
    std::vector<std::pair<Rational, BigInt>> right;

    friend bool operator==(const TwoTermResolution&, const TwoTermResolution&) = default;

    void normalize() {
        for (auto* side : {&left, &right}) {
            std::erase_if(*side, [](const auto& t) { return t.second == 0; });
            std::sort(side->begin(), side->end());
        }
    }

    ChernCharacter character() const {
        ChernCharacter ch;
        for (const auto& [s, m] : right)
            ch = ch + m * exceptional_character(s);
        for (const auto& [s, m] : left)
            ch = ch - m * exceptional_character(s);
        return ch;
    }
};

struct ResolutionData {
    BigInt n;
    Rational mu;
    Rational lambda;
    const ExceptionalSlope* alpha = nullptr;
    const ExceptionalSlope* beta = nullptr;
    const ExceptionalSlope* dot_slope = nullptr;
    ResolutionCase kind = ResolutionCase::BelowDot;
    bool sporadic = false;
    bool triangular_minus_one = false;
    BigInt m1, m2, m3;
    ChernCharacter w_char;  // W, or the alternating sum of the two-term complex
    ChernCharacter iz_char; // assembled from the terms; always (1, 0, -n)
    // Left to right, each sequence reads 0 -> t0 -> t1 -> t2 -> 0. A sporadic W
    // sequence has two terms and denotes the complex [t0 -> t1].
    std::vector<Term> w_sequence;
    std::vector<Term> iz_sequence;
    TwoTermResolution two_term;

    std::vector<ChernCharacter> term_chars() const {
        std::vector<ChernCharacter> out;
        for (const auto* seq : {&w_sequence, &iz_sequence})
            for (const Term& t : *seq)
                out.push_back(t.total());
        return out;
    }
};

inline std::string format_sequence(const std::vector<Term>& seq, bool complex) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i)
        s += (i ? " -> " : "") + seq[i].str();
    return complex ? "[" + s + "]" : "0 -> " + s + " -> 0";
}

namespace detail {

inline std::string bundle_label(const Rational& slope) { return "E(" + slope.str() + ")"; }

inline Term bundle_term(const Rational& slope, const BigInt& mult) {
    return {bundle_label(slope), slope, mult, exceptional_character(slope)};
}

inline BigInt nonneg_integer(const Rational& x, const char* what) {
    BigInt v = to_integer(x, what);
    if (v < 0)
        throw error(errc::internal_inconsistency, std::string(what) + " is negative: " + v.str());
    return v;
}

} // namespace detail

inline ResolutionData gaeta_resolution(const BigInt& n) {
    if (n < 2)
        throw error(errc::domain, "gaeta_resolution needs n >= 2");
    using detail::bundle_term;

    MinSlopeResult ms = min_slope(n);
    ResolutionData rd;
    rd.n = n;
    rd.mu = ms.mu;
    rd.lambda = ms.lambda;
    const ExceptionalSlope& ab = associated_slope(ms.mu);
    auto [pa, pb] = parent_pair(ab);
    rd.dot_slope = &ab;
    rd.alpha = &pa;
    rd.beta = &pb;
    rd.triangular_minus_one = ms.kind == MinSlopeCase::TriangularMinusOne;

    const Rational a = pa.value, b = pb.value, d = ab.value;
    const Rational ra(pa.rank), rb(pb.rank), r(ab.rank);
    const Rational N{n};
    const ChernCharacter iz{1, 0, -N};

    if (ms.mu < d || rd.triangular_minus_one) {
        // Triangular-minus-one n sit at mu = alpha.beta but follow this branch
        // with a non-exceptional V of slope mu.
        rd.kind = ResolutionCase::BelowDot;
        const Rational& mu = ms.mu;
        rd.m1 = detail::nonneg_integer(ra * (mu - a) * d, "m1");
        rd.m2 = detail::nonneg_integer(rb * (mu - b + 3) * d, "m2");
        rd.m3 = detail::nonneg_integer(Rational(ab.euler) - N * r, "m3");
        BigInt k = detail::nonneg_integer(3 * r * Rational(rd.m1) - Rational(rd.m2), "3r m1 - m2");
        rd.sporadic = rd.triangular_minus_one || rd.m3 * ab.rank <= 2;

        Term A = bundle_term(-a - 3, rd.m1), B = bundle_term(-b, k);
        rd.w_char = A.total() - B.total();
        Term Wt{rd.sporadic ? "W*" : "W", std::nullopt, 1, rd.w_char};
        if (rd.sporadic)
            rd.w_sequence = {A, B};
        else
            rd.w_sequence = {Wt, A, B};
        Term Q = bundle_term(-d, rd.m3);
        rd.iz_char = Q.total() - rd.w_char;
        rd.iz_sequence = {Wt, Q, Term{"I_Z", std::nullopt, 1, rd.iz_char}};
        rd.two_term.left = {{-a - 3, rd.m1}};
        rd.two_term.right = {{-d, rd.m3}, {-b, k}};
    } else {
        // Above the dot, or at it with lambda standing in for mu.
        const bool at = ms.mu == d;
        rd.kind = at ? ResolutionCase::AtDot : ResolutionCase::AboveDot;
        const Rational& mu = at ? ms.lambda : ms.mu;
        rd.m2 = detail::nonneg_integer(ra * (3 + a - mu) * (d + 3), "m2");
        rd.m1 = detail::nonneg_integer(rb * (b - mu) * (d + 3), "m1");
        rd.m3 = detail::nonneg_integer(N * r - Rational(ab.euler), "m3");
        if (at && rd.m3 != 0)
            throw error(errc::internal_inconsistency, "m3 must vanish at the dot");
        BigInt k = detail::nonneg_integer(3 * r * Rational(rd.m1) - Rational(rd.m2), "3r m1 - m2");

        Term A = bundle_term(-a - 3, k), B = bundle_term(-b, rd.m1);
        rd.w_char = B.total() - A.total();
        if (at) {
            rd.iz_char = rd.w_char;
            rd.w_sequence = {A, B, Term{"I_Z", std::nullopt, 1, rd.w_char}};
            rd.iz_sequence = rd.w_sequence;
            rd.two_term.left = {{-a - 3, k}};
        } else {
            Term Wt{"W", std::nullopt, 1, rd.w_char};
            rd.w_sequence = {A, B, Wt};
            Term K = bundle_term(-d - 3, rd.m3);
            rd.iz_char = rd.w_char - K.total();
            rd.iz_sequence = {K, Wt, Term{"I_Z", std::nullopt, 1, rd.iz_char}};
            rd.two_term.left = {{-a - 3, k}, {-d - 3, rd.m3}};
        }
        rd.two_term.right = {{-b, rd.m1}};
    }
    rd.two_term.normalize();

    if (rd.iz_char != iz || rd.two_term.character() != iz)
        throw error(errc::internal_inconsistency,
                    "resolution of n = " + n.str() + " assembles to " + rd.iz_char.str());
    return rd;
}

// Bounds r x_r < m1/m2 <= r / (3 r_far r - r_near) on the m-coefficients.
struct MRatioBounds {
    bool lower = false;
    bool upper = false;
};

inline MRatioBounds m_ratio_bounds(const ResolutionData& rd) {
    if (rd.m2 == 0)
        throw error(errc::degenerate_denominator, "m2 = 0");
    const ExceptionalSlope& ab = *rd.dot_slope;
    Rational ratio(rd.m1, rd.m2);
    Rational r(ab.rank);
    QuadSurd lo = QuadSurd(r) * ab.interval_radius;
    Rational far = rd.kind == ResolutionCase::BelowDot ? Rational(rd.beta->rank) : Rational(rd.alpha->rank);
    Rational near = rd.kind == ResolutionCase::BelowDot ? Rational(rd.alpha->rank) : Rational(rd.beta->rank);
    MRatioBounds out;
    out.lower = lo < QuadSurd(ratio);
    out.upper = ratio <= r / (3 * far * r - near);
    return out;
}

enum class ClassicalCase { TwoSLeq, TwoSGeq };

inline const char* to_string(ClassicalCase c) { return c == ClassicalCase::TwoSLeq ? "TwoSLeq" : "TwoSGeq"; }

struct ClassicalGaeta {
    BigInt r, s;
    ClassicalCase kind = ClassicalCase::TwoSLeq;
    TwoTermResolution terms;
};

inline std::pair<BigInt, BigInt> classical_decomposition(const BigInt& n) {
    if (n < 1)
        throw error(errc::domain, "classical decomposition needs n >= 1");
    BigInt r = (isqrt(8 * n + 1) - 1) / 2;
    return {r, n - r * (r + 1) / 2};
}

inline ClassicalGaeta classical_gaeta(const BigInt& n) {
    ClassicalGaeta g;
    std::tie(g.r, g.s) = classical_decomposition(n);
    const BigInt &r = g.r, &s = g.s;
    auto O = [](const BigInt& k) { return Rational(k); };
    if (2 * s <= r) {
        g.kind = ClassicalCase::TwoSLeq;
        g.terms.left = {{O(-r - 1), r - 2 * s}, {O(-r - 2), s}};
        g.terms.right = {{O(-r), r - s + 1}};
    } else {
        g.kind = ClassicalCase::TwoSGeq;
        g.terms.left = {{O(-r - 2), s}};
        g.terms.right = {{O(-r), r - s + 1}, {O(-r - 1), 2 * s - r}};
    }
    g.terms.normalize();
    if (g.terms.character() != ideal_sheaf_character(n))
        throw error(errc::internal_inconsistency, "classical Gaeta character mismatch at n = " + n.str());
    return g;
}

// phi^-1 = (sqrt(5) - 1) / 2
inline QuadSurd inverse_golden() { return QuadSurd(Rational(-1, 2), Rational(1, 2), 5); }

inline bool classical_w_stable(const BigInt& n) {
    auto [r, s] = classical_decomposition(n);
    if (r == 0)
        throw error(errc::degenerate_denominator, "r = 0");
    Rational x(s, r);
    return inverse_golden() < QuadSurd(x) || is_convergent_of_inverse_golden(x);
}

struct KroneckerData {
    BigInt N, a, b;
    bool slope_in_window = false;
    ChernCharacter v_char; // the associated orthogonal bundle V
    Rational kr_dim;
    bool hilb_dim_excess = false;
};

// psi_N = (N + sqrt(N^2 - 4)) / 2 and its inverse (N - sqrt(N^2 - 4)) / 2.
inline std::pair<QuadSurd, QuadSurd> kronecker_window(const BigInt& N) {
    QuadSurd hi(Rational(N, 2), Rational(1, 2), N * N - 4);
    QuadSurd lo(Rational(N, 2), Rational(-1, 2), N * N - 4);
    return {lo, hi};
}

inline KroneckerData kronecker_data(const BigInt& n) {
    ResolutionData rd = gaeta_resolution(n);
    if (rd.sporadic)
        throw error(errc::sporadic_case, "n = " + n.str() + " has no vector-bundle W");
    if (rd.kind == ResolutionCase::AtDot)
        throw error(errc::sporadic_case, "n = " + n.str() + " has exceptional minimum slope");
    const ExceptionalSlope& ab = *rd.dot_slope;
    KroneckerData k;
    k.N = 3 * ab.rank;
    k.a = rd.m1;
    k.b = k.N * rd.m1 - rd.m2;
    if (k.a == 0)
        throw error(errc::degenerate_denominator, "a = 0");
    auto [lo, hi] = kronecker_window(k.N);
    QuadSurd ratio(Rational(k.b, k.a));
    k.slope_in_window = lo < ratio && ratio < hi;

    Rational rv = (rd.kind == ResolutionCase::BelowDot ? ab.value : ab.value + 3) * Rational(ab.rank);
    Rational dv = delta(rd.mu);
    k.v_char = {rv, rv * rd.mu, rv * (rd.mu * rd.mu / 2 - dv)};
    k.kr_dim = rv * rv * (2 * dv - 1) + 1;
    k.hilb_dim_excess = k.kr_dim < 2 * Rational(n);
    return k;
}

} // namespace gaeta
