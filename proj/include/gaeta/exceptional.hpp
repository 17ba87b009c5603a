#pragma once

// The exceptional-slope tree. Slopes are indexed by dyadic addresses p/2^q
// through eps(n) = n, eps((2p+1)/2^q) = eps(p/2^(q-1)) . eps((p+1)/2^(q-1)).

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "gaeta/quad_surd.hpp"

namespace gaeta {

inline Rational hilbert_poly(const Rational& x) { return (x * x + 3 * x + 2) / 2; }

inline QuadSurd hilbert_poly(const QuadSurd& x) {
    return (x * x + QuadSurd(3) * x + QuadSurd(2)) * QuadSurd(Rational(1, 2));
}

// Delta of an exceptional bundle of rank r.
inline Rational exceptional_discriminant(const BigInt& r) {
    return (1 - Rational(1, r * r)) / 2;
}

struct DyadicAddress {
    BigInt p{0};
    unsigned q = 0;

    DyadicAddress() = default;
    DyadicAddress(BigInt p_, unsigned q_) : p(std::move(p_)), q(q_) {
        while (q > 0 && mp::bit_test(p, 0) == 0) {
            p >>= 1;
            --q;
        }
    }

    Rational value() const { return Rational(p, BigInt(1) << q); }

    friend bool operator==(const DyadicAddress&, const DyadicAddress&) = default;
    friend std::strong_ordering operator<=>(const DyadicAddress& x, const DyadicAddress& y) {
        unsigned q = std::max(x.q, y.q);
        BigInt a = x.p << (q - x.q), b = y.p << (q - y.q);
        return a < b ? std::strong_ordering::less
                     : (a > b ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const { return q == 0 ? p.str() : p.str() + "/2^" + std::to_string(q); }
};

struct ExceptionalSlope {
    Rational value;
    DyadicAddress address;
    BigInt rank;
    Rational discriminant;
    BigInt euler;
    QuadSurd interval_radius; // x_alpha

    QuadSurd lower() const { return QuadSurd(value) - interval_radius; }
    QuadSurd upper() const { return QuadSurd(value) + interval_radius; }

    bool contains(const QuadSurd& x) const { return lower() < x && x < upper(); }
};

// x_alpha = 3/2 - sqrt(9r^2 - 4) / (2r)
inline QuadSurd interval_radius_for_rank(const BigInt& r) {
    return QuadSurd(Rational(3, 2), Rational(-1, 2 * r), 9 * r * r - 4);
}

inline ExceptionalSlope make_exceptional(const Rational& value, const DyadicAddress& address) {
    ExceptionalSlope e;
    e.value = value;
    e.address = address;
    e.rank = den(value);
    e.discriminant = exceptional_discriminant(e.rank);
    e.euler = to_integer(Rational(e.rank) * (hilbert_poly(value) - e.discriminant), "chi_alpha");
    e.interval_radius = interval_radius_for_rank(e.rank);
    return e;
}

// alpha.beta on raw values; ranks are read off the denominators.
inline Rational dot(const Rational& a, const Rational& b) {
    Rational gap = 3 + a - b;
    if (gap == 0)
        throw error(errc::degenerate_denominator, "3 + alpha - beta = 0");
    return (a + b) / 2 + (exceptional_discriminant(den(b)) - exceptional_discriminant(den(a))) / gap;
}

inline Rational dot(const ExceptionalSlope& a, const ExceptionalSlope& b) {
    Rational gap = 3 + a.value - b.value;
    if (gap == 0)
        throw error(errc::degenerate_denominator, "3 + alpha - beta = 0");
    return (a.value + b.value) / 2 + (b.discriminant - a.discriminant) / gap;
}

namespace detail {

class EpsilonCache {
public:
    using Key = std::pair<BigInt, unsigned>;

    std::shared_ptr<const ExceptionalSlope> find(const Key& k) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(k);
        return it == map_.end() ? nullptr : it->second;
    }

    // Entries are value-identical, so a racing insert simply keeps the first.
    std::shared_ptr<const ExceptionalSlope> insert(const Key& k, std::shared_ptr<const ExceptionalSlope> v) {
        std::unique_lock lock(mu_);
        return map_.emplace(k, std::move(v)).first->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mu_;
    std::map<Key, std::shared_ptr<const ExceptionalSlope>> map_;
};

inline EpsilonCache& epsilon_cache() {
    static EpsilonCache cache;
    return cache;
}

} // namespace detail

inline const ExceptionalSlope& epsilon(const DyadicAddress& addr_in) {
    DyadicAddress addr(addr_in.p, addr_in.q);
    auto& cache = detail::epsilon_cache();
    detail::EpsilonCache::Key key{addr.p, addr.q};
    if (auto hit = cache.find(key))
        return *hit;

    std::shared_ptr<const ExceptionalSlope> made;
    if (addr.q == 0) {
        made = std::make_shared<ExceptionalSlope>(make_exceptional(Rational(addr.p), addr));
    } else {
        BigInt k = (addr.p - 1) / 2; // p is odd
        const ExceptionalSlope& a = epsilon(DyadicAddress(k, addr.q - 1));
        const ExceptionalSlope& b = epsilon(DyadicAddress(k + 1, addr.q - 1));
        Rational v = dot(a, b);
        auto e = std::make_shared<ExceptionalSlope>(make_exceptional(v, addr));
        Rational expect = Rational(a.rank * b.rank) * (3 + a.value - b.value);
        if (Rational(e->rank) != expect)
            throw error(errc::internal_inconsistency, "rank identity fails at " + addr.str());
        made = std::move(e);
    }
    return *cache.insert(key, std::move(made));
}

inline const ExceptionalSlope& epsilon(const BigInt& p, unsigned q) { return epsilon(DyadicAddress(p, q)); }

inline std::pair<const ExceptionalSlope&, const ExceptionalSlope&> parent_pair(const ExceptionalSlope& s) {
    const DyadicAddress& a = s.address;
    if (a.q == 0)
        return {epsilon(a.p - 1, 0), epsilon(a.p + 1, 0)};
    BigInt k = (a.p - 1) / 2;
    return {epsilon(k, a.q - 1), epsilon(k + 1, a.q - 1)};
}

inline std::pair<QuadSurd, QuadSurd> interval(const ExceptionalSlope& s) { return {s.lower(), s.upper()}; }

inline constexpr unsigned kDefaultMaxDepth = 64;

inline const ExceptionalSlope& associated_slope(const QuadSurd& x, unsigned max_depth = kDefaultMaxDepth) {
    BigInt k = floor(x);
    const ExceptionalSlope& lo = epsilon(k, 0);
    if (lo.contains(x))
        return lo;
    const ExceptionalSlope& hi = epsilon(k + 1, 0);
    if (hi.contains(x))
        return hi;
    // Bracket (a/2^t, (a+1)/2^t) in address space.
    BigInt a = k;
    for (unsigned t = 0; t < max_depth; ++t) {
        DyadicAddress mid(2 * a + 1, t + 1);
        const ExceptionalSlope& m = epsilon(mid);
        if (m.contains(x))
            return m;
        a = x < QuadSurd(m.value) ? BigInt(2 * a) : BigInt(2 * a + 1);
    }
    throw error(errc::cantor_point, "no interval found within depth " + std::to_string(max_depth) +
                                        " for " + x.str());
}

inline const ExceptionalSlope& associated_slope(const Rational& x, unsigned max_depth = kDefaultMaxDepth) {
    return associated_slope(QuadSurd(x), max_depth);
}

inline bool is_exceptional_slope(const Rational& x) { return associated_slope(x).value == x; }

inline const ExceptionalSlope& exceptional_from_value(const Rational& x) {
    const ExceptionalSlope& e = associated_slope(x);
    if (e.value != x)
        throw error(errc::not_exceptional, x.str() + " is not an exceptional slope");
    return e;
}

// All eps(p/2^q), q <= depth, with value in [lo, hi], ascending.
inline std::vector<const ExceptionalSlope*> enumerate_slopes(unsigned depth, const Rational& lo,
                                                             const Rational& hi) {
    if (!(lo < hi))
        throw error(errc::domain, "enumerate_slopes needs lo < hi");
    std::vector<const ExceptionalSlope*> out;
    BigInt scale = BigInt(1) << depth;
    BigInt first = floor(lo) * scale, last = ceil(hi) * scale;
    for (BigInt p = first; p <= last; ++p) {
        const ExceptionalSlope& e = epsilon(p, depth);
        if (lo <= e.value && e.value <= hi)
            out.push_back(&e);
    }
    return out;
}

} // namespace gaeta
