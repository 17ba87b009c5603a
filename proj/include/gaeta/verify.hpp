#pragma once

// Exhaustive identity checks over finite ranges, grouped into named suites.
// Each suite counts checks and keeps the first failure for reporting.

#include <functional>
#include <string>
#include <vector>

#include "gaeta/bridgeland.hpp"

namespace gaeta {

struct SuiteReport {
    std::string name;
    long passed = 0;
    long failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0 && passed > 0; }

    void check(bool cond, const std::function<std::string()>& detail) {
        if (cond) {
            ++passed;
            return;
        }
        if (failed++ == 0)
            first_failure = detail();
    }

    // Runs f, turning a library error into a recorded failure.
    void guard(const std::function<void()>& f, const std::string& where) {
        try {
            f();
        } catch (const error& e) {
            check(false, [&] { return where + ": " + e.what(); });
        }
    }
};

// Adjacent slope pairs (eps(p/2^q), eps((p+1)/2^q)) for 1 <= q <= depth with
// both values in [lo, hi].
inline std::vector<std::pair<const ExceptionalSlope*, const ExceptionalSlope*>>
adjacent_pairs(unsigned depth, const Rational& lo, const Rational& hi, unsigned min_q = 1) {
    std::vector<std::pair<const ExceptionalSlope*, const ExceptionalSlope*>> out;
    for (unsigned q = min_q; q <= depth; ++q) {
        BigInt scale = BigInt(1) << q;
        for (BigInt p = floor(lo) * scale; p < ceil(hi) * scale; ++p) {
            const ExceptionalSlope& a = epsilon(p, q);
            const ExceptionalSlope& b = epsilon(p + 1, q);
            if (lo <= a.value && b.value <= hi)
                out.emplace_back(&a, &b);
        }
    }
    return out;
}

inline SuiteReport verify_cf(unsigned depth) {
    SuiteReport r{"cf", 0, 0, {}};
    for (const ExceptionalSlope* e : enumerate_slopes(depth, 0, 1)) {
        if (e->value == 1)
            continue;
        const std::string v = e->value.str();
        ContinuedFraction cf = cf_expand_even(e->value);
        r.check(cf.terms.size() % 2 == 0, [&] { return "odd length at " + v; });
        r.check(cf.value() == e->value, [&] { return "round trip at " + v; });
        r.check(check_exceptional_cf(*e).all(), [&] { return "block structure at " + v; });
        r.check(is_palindrome_by_convergents(cf) == is_palindrome(cf),
                [&] { return "palindrome criteria disagree at " + v; });
        for (std::size_t i = 1; i < cf.convergents.size(); ++i) {
            const auto& [p1, q1] = cf.convergents[i];
            const auto& [p0, q0] = cf.convergents[i - 1];
            BigInt det = q1 * p0 - q0 * p1;
            r.check(det == (i % 2 ? -1 : 1), [&] { return "determinant identity at " + v; });
        }
        BigInt ar = num(e->value);
        r.check((ar * ar + 1) % e->rank == 0, [&] { return "congruence at " + v; });
    }
    return r;
}

inline SuiteReport verify_intervals(unsigned depth) {
    SuiteReport r{"intervals", 0, 0, {}};
    auto slopes = enumerate_slopes(depth, 0, 3);
    std::vector<QuadSurd> lo, hi;
    for (const ExceptionalSlope* e : slopes) {
        lo.push_back(e->lower());
        hi.push_back(e->upper());
        r.check(e->contains(QuadSurd(e->value)), [&] { return "own interval at " + e->value.str(); });
        Rational chi = Rational(e->rank) * (hilbert_poly(e->value) - e->discriminant);
        r.check(is_integer(chi), [&] { return "chi integrality at " + e->value.str(); });
    }
    for (std::size_t i = 0; i < slopes.size(); ++i)
        for (std::size_t j = i + 1; j < slopes.size(); ++j)
            r.check(hi[i] <= lo[j], [&] {
                return "I(" + slopes[i]->value.str() + ") meets I(" + slopes[j]->value.str() + ")";
            });
    for (auto [a, b] : adjacent_pairs(depth, 0, 3)) {
        Rational gap = 3 + a->value - b->value;
        Rational d = dot(*a, *b);
        const ExceptionalSlope& m = associated_slope(d);
        r.check(m.value == d, [&] { return "dot not exceptional at " + d.str(); });
        r.check(a->value < d && d < b->value, [&] { return "dot outside parents at " + d.str(); });
        r.check(Rational(m.rank) == Rational(a->rank * b->rank) * gap, [&] { return "rank identity at " + d.str(); });
        r.check(hilbert_poly(a->value - b->value) == a->discriminant + b->discriminant,
                [&] { return "P(a - b) identity at " + d.str(); });
        r.check(d - a->value == 1 / (Rational(a->rank * a->rank) * gap), [&] { return "left gap at " + d.str(); });
        r.check(b->value - d == 1 / (Rational(b->rank * b->rank) * gap), [&] { return "right gap at " + d.str(); });
    }
    return r;
}

inline SuiteReport verify_gamma(long n_max) {
    SuiteReport r{"gamma", 0, 0, {}};
    Rational prev = -1;
    for (long n = 1; n <= n_max; ++n) {
        r.guard(
            [&] {
                Rational l = gamma_inv(n);
                r.check(gamma(l) == n, [&] { return "gamma(gamma_inv(" + std::to_string(n) + "))"; });
                r.check(prev < l, [&] { return "gamma_inv not increasing at " + std::to_string(n); });
                prev = l;
            },
            "n = " + std::to_string(n));
    }
    return r;
}

inline SuiteReport verify_resolution(long n_max) {
    SuiteReport r{"resolution", 0, 0, {}};
    for (long n = 2; n <= n_max; ++n) {
        const std::string at = "n = " + std::to_string(n);
        r.guard(
            [&] {
                ResolutionData rd = gaeta_resolution(n);
                // 0 -> s0 -> s1 -> I_Z -> 0 must balance against (1, 0, -n).
                const auto& s = rd.iz_sequence;
                ChernCharacter sum = s[0].total() - s[1].total() + ideal_sheaf_character(n);
                r.check(sum == ChernCharacter{0, 0, 0}, [&] { return at + ": I_Z sequence does not balance"; });
                r.check(rd.iz_char == ideal_sheaf_character(n), [&] { return at + ": character of I_Z"; });
                ChernCharacter eab = exceptional_character(rd.dot_slope->value);
                Rational chi = euler_pairing(dual(eab), ideal_sheaf_character(n));
                r.check(abs(chi) == Rational(rd.m3), [&] { return at + ": m3 vs chi(E (x) I_Z)"; });
                if (rd.kind == ResolutionCase::BelowDot && !rd.sporadic) {
                    Rational rkq = Rational(rd.m3) * Rational(rd.dot_slope->rank);
                    r.check(rkq == 1 + rd.w_char.r, [&] { return at + ": rk E^m3 = 1 + rk W"; });
                    MRatioBounds b = m_ratio_bounds(rd);
                    r.check(b.lower && b.upper, [&] { return at + ": m1/m2 bounds"; });
                }
                if (is_integer(rd.dot_slope->value))
                    r.check(rd.two_term == classical_gaeta(n).terms, [&] { return at + ": classical Gaeta terms"; });
            },
            at);
    }
    return r;
}

inline bool kronecker_applicable(const ResolutionData& rd) {
    return !rd.sporadic && rd.kind != ResolutionCase::AtDot;
}

inline SuiteReport verify_kronecker(long n_max) {
    SuiteReport r{"kronecker", 0, 0, {}};
    for (long n = 2; n <= n_max; ++n) {
        const std::string at = "n = " + std::to_string(n);
        r.guard(
            [&] {
                if (!kronecker_applicable(gaeta_resolution(n)))
                    return;
                KroneckerData k = kronecker_data(n);
                r.check(k.slope_in_window, [&] { return at + ": b/a outside the window"; });
                r.check(k.hilb_dim_excess, [&] { return at + ": Kronecker dimension not below 2n"; });
                r.check(height(k.v_char) == 0, [&] { return at + ": V has nonzero height"; });
            },
            at);
    }
    return r;
}

// Successive walls W(anchor, s_0), W(anchor, s_1), ... with s_(i+1) the dot of
// the anchor with s_i; returns the slopes s_0..s_(len-1).
inline std::vector<const ExceptionalSlope*> anchored_chain(const ExceptionalSlope& anchor,
                                                           const ExceptionalSlope& start, unsigned len) {
    std::vector<const ExceptionalSlope*> chain{&start};
    while (chain.size() < len) {
        const ExceptionalSlope& prev = *chain.back();
        unsigned q = std::max(anchor.address.q, prev.address.q);
        BigInt sum = (anchor.address.p << (q - anchor.address.q)) + (prev.address.p << (q - prev.address.q));
        chain.push_back(&epsilon(sum, q + 1));
    }
    return chain;
}

inline SuiteReport verify_walls(unsigned depth, long n_max = 500) {
    SuiteReport r{"walls", 0, 0, {}};
    const Rational five_fourths(5, 4);
    for (auto [a, b] : adjacent_pairs(depth, 0, 3, 0)) {
        r.guard(
            [&] {
                const std::string at = "(" + a->value.str() + ", " + b->value.str() + ")";
                Wall w = exceptional_pair_wall(*a, *b);
                r.check(w.radius_sq < five_fourths, [&] { return at + ": radius^2 >= 5/4"; });
                if (a->address.q == 0 && b->address.q == 0)
                    return;
                const ExceptionalSlope& anchor = a->address.q < b->address.q ? *a : *b;
                const ExceptionalSlope& other = a->address.q < b->address.q ? *b : *a;
                auto chain = anchored_chain(anchor, other, 6);
                Wall prev = w;
                for (std::size_t i = 1; i < chain.size(); ++i) {
                    r.check(dot(anchor.value < chain[i - 1]->value ? anchor : *chain[i - 1],
                                anchor.value < chain[i - 1]->value ? *chain[i - 1] : anchor) == chain[i]->value,
                            [&] { return at + ": chain slope is not the dot"; });
                    Wall next = exceptional_pair_wall(anchor, *chain[i]);
                    r.check(prev.radius_sq < next.radius_sq, [&] { return at + ": chain radius not increasing"; });
                    r.check(next.radius_sq < five_fourths, [&] { return at + ": chain radius^2 >= 5/4"; });
                    r.check(nested(prev, next, anchor.value), [&] { return at + ": chain walls not nested"; });
                    prev = next;
                }
            },
            "pair wall");
    }
    for (unsigned q = 1; q <= depth; ++q) {
        BigInt scale = BigInt(1) << q;
        for (BigInt p = 0; p + 2 <= 3 * scale; p += 2) {
            const ExceptionalSlope &a = epsilon(p, q), &b = epsilon(p + 1, q), &e = epsilon(p + 2, q);
            Rational left = (b.discriminant - a.discriminant) / (a.value - b.value);
            Rational right = (e.discriminant - b.discriminant) / (b.value - e.value);
            const std::string at = "p = " + p.str() + ", q = " + std::to_string(q);
            if (q == 1) {
                r.check(left == Rational(-3, 4) && right == Rational(3, 4), [&] { return at + ": q = 1 values"; });
            } else {
                r.check(left < -1 && right > 1, [&] { return at + ": center inequalities"; });
            }
            // W(alpha, beta) inside W(alpha, alpha.beta), equivalently 2 Delta_beta < 1.
            const ExceptionalSlope& ab = epsilon(2 * p + 1, q + 1);
            bool inside = nested(exceptional_pair_wall(a, b), exceptional_pair_wall(a, ab), a.value);
            r.check(inside == (2 * b.discriminant < 1) && inside, [&] { return at + ": nesting"; });
        }
    }
    for (const ExceptionalSlope* e : enumerate_slopes(std::min(depth, 6u), 0, 3))
        r.check(pair_wall_limit_radius_sq(*e) == QuadSurd(five_fourths),
                [&] { return "limit radius at " + e->value.str(); });
    for (long n = 2; n <= n_max; ++n) {
        const std::string at = "n = " + std::to_string(n);
        r.guard(
            [&] {
                CollapsingWall cw = collapsing_wall_detail(n);
                ResolutionData rd = gaeta_resolution(n);
                Wall direct = wall_between(ideal_sheaf_character(n), collapsing_destabilizer(rd));
                r.check(direct == cw.wall, [&] { return at + ": collapsing wall vs destabilizer"; });
                r.check(cw.wall.nonempty(), [&] { return at + ": empty collapsing wall"; });
                if (cw.gamma_matches)
                    r.check(cw.wall.radius_sq == cw.delta_form && cw.wall.radius_sq > five_fourths,
                            [&] { return at + ": radius identity"; });
            },
            at);
    }
    return r;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"cf", "intervals", "gamma", "resolution", "kronecker", "walls"};
    return names;
}

inline long default_suite_depth(const std::string& suite) {
    if (suite == "cf")
        return 10;
    if (suite == "intervals" || suite == "walls")
        return 8;
    if (suite == "gamma")
        return 1000;
    return 500;
}

inline SuiteReport run_suite(const std::string& suite, long depth) {
    if (depth < 0)
        throw error(errc::range, "depth must be nonnegative");
    if (suite == "cf")
        return verify_cf(static_cast<unsigned>(depth));
    if (suite == "intervals")
        return verify_intervals(static_cast<unsigned>(depth));
    if (suite == "gamma")
        return verify_gamma(depth);
    if (suite == "resolution")
        return verify_resolution(depth);
    if (suite == "kronecker")
        return verify_kronecker(depth);
    if (suite == "walls")
        return verify_walls(static_cast<unsigned>(depth));
    throw error(errc::unknown_suite, "unknown suite '" + suite + "'");
}

} // namespace gaeta
