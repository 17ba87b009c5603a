#pragma once

#include <utility>
#include <vector>

#include "gaeta/exceptional.hpp"

namespace gaeta {

struct ContinuedFraction {
    BigInt integer_part;
    std::vector<BigInt> terms;                         // a_1..a_k, k even
    std::vector<std::pair<BigInt, BigInt>> convergents; // (p_i, q_i) of [0; a_1..a_i], i = 0..k

    Rational value() const {
        const auto& [p, q] = convergents.back();
        return Rational(integer_part) + Rational(p, q);
    }
};

inline std::vector<std::pair<BigInt, BigInt>> convergents_of(const std::vector<BigInt>& terms) {
    std::vector<std::pair<BigInt, BigInt>> out;
    BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;
    out.emplace_back(p, q);
    for (const BigInt& a : terms) {
        BigInt pn = a * p + p_prev, qn = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
        out.emplace_back(p, q);
    }
    return out;
}

inline ContinuedFraction cf_expand_even(const Rational& x) {
    ContinuedFraction cf;
    cf.integer_part = floor(x);
    Rational f = x - Rational(cf.integer_part);
    BigInt n = num(f), d = den(f);
    // Euclid on d/n for the fractional part n/d.
    while (n != 0) {
        BigInt a, r;
        mp::divide_qr(d, n, a, r);
        cf.terms.push_back(a);
        d = n;
        n = r;
    }
    if (cf.terms.size() % 2 == 1) {
        if (cf.terms.back() == 1) {
            cf.terms.pop_back();
            cf.terms.back() += 1;
        } else {
            cf.terms.back() -= 1;
            cf.terms.push_back(1);
        }
    }
    cf.convergents = convergents_of(cf.terms);
    return cf;
}

inline bool is_palindrome(const ContinuedFraction& cf) {
    const auto& t = cf.terms;
    for (std::size_t i = 0, j = t.size(); i < j; ++i, --j)
        if (t[i] != t[j - 1])
            return false;
    return true;
}

// Same predicate read off the convergents: p_k = q_{k-1}.
inline bool is_palindrome_by_convergents(const ContinuedFraction& cf) {
    std::size_t k = cf.terms.size();
    if (k == 0)
        return true;
    return cf.convergents[k].first == cf.convergents[k - 1].second;
}

struct ExceptionalCfReport {
    bool palindrome = false;
    bool terms_in_1_2 = false;
    bool ones_blocks_even = false;
    bool interior_twos_blocks_even = false;

    bool all() const { return palindrome && terms_in_1_2 && ones_blocks_even && interior_twos_blocks_even; }
};

namespace detail {

// True iff every maximal run of `v` in t[from, to) has even length.
inline bool runs_even(const std::vector<BigInt>& t, std::size_t from, std::size_t to, int v) {
    std::size_t run = 0;
    for (std::size_t i = from; i < to; ++i) {
        if (t[i] == v) {
            ++run;
        } else {
            if (run % 2)
                return false;
            run = 0;
        }
    }
    return run % 2 == 0;
}

} // namespace detail

inline ExceptionalCfReport check_exceptional_cf(const Rational& alpha) {
    ContinuedFraction cf = cf_expand_even(alpha);
    const auto& t = cf.terms;
    ExceptionalCfReport r;
    r.palindrome = is_palindrome(cf);
    r.terms_in_1_2 = true;
    for (const BigInt& a : t)
        if (a != 1 && a != 2)
            r.terms_in_1_2 = false;
    r.ones_blocks_even = detail::runs_even(t, 0, t.size(), 1);
    r.interior_twos_blocks_even = t.size() < 2 || detail::runs_even(t, 1, t.size() - 1, 2);
    return r;
}

inline ExceptionalCfReport check_exceptional_cf(const ExceptionalSlope& alpha) {
    return check_exceptional_cf(alpha.value);
}

// Convergents of [0; 1, 1, 1, ...] are F_n / F_(n+1).
inline bool is_convergent_of_inverse_golden(const Rational& x) {
    if (x < 0 || x > 1)
        return false;
    BigInt a = 0, b = 1; // F_n, F_(n+1)
    const BigInt& q = den(x);
    while (b <= q) {
        if (Rational(a, b) == x)
            return true;
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return false;
}

} // namespace gaeta
