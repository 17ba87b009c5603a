#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gaeta/rational.hpp"

namespace gaeta {

// Exact value a + b*sqrt(d). Normal form: d is 0 iff b is 0; square factors of
// d below kSquareScan are pulled into b, and a perfect-square d is folded into a.
class QuadSurd {
public:
    static constexpr unsigned kSquareScan = 1000;

    QuadSurd() = default;
    QuadSurd(const Rational& a) : a_(a) {} // NOLINT(google-explicit-constructor)
    QuadSurd(long a) : a_(a) {}            // NOLINT(google-explicit-constructor)
    QuadSurd(const Rational& a, const Rational& b, const BigInt& d) : a_(a), b_(b), d_(d) {
        if (d_ < 0)
            throw error(errc::domain, "negative radicand");
        normalize();
    }

    // sqrt of a nonnegative rational u/v, written as sqrt(u*v)/v.
    static QuadSurd sqrt_of(const Rational& x) {
        if (x < 0)
            throw error(errc::domain, "sqrt of a negative rational");
        return QuadSurd(0, Rational(1, den(x)), num(x) * den(x));
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const BigInt& d() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    QuadSurd operator-() const { return raw(-a_, -b_, d_); }

    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
        const BigInt& d = common_radicand(x, y);
        return same_class(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }
    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
        const BigInt& d = common_radicand(x, y);
        return same_class(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    QuadSurd inverse() const {
        Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
        if (norm == 0)
            throw error(errc::degenerate_denominator, "inverse of zero surd");
        return same_class(a_ / norm, -b_ / norm, d_);
    }
    friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) { return x * y.inverse(); }

    friend bool operator==(const QuadSurd& x, const QuadSurd& y);
    friend std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y);

    std::string str() const {
        if (b_ == 0)
            return a_.str();
        std::string s;
        if (a_ != 0)
            s = a_.str() + (b_ > 0 ? " + " : " - ");
        else if (b_ < 0)
            s = "-";
        Rational m = abs(b_);
        if (m != 1)
            s += m.str() + "*";
        return s + "sqrt(" + d_.str() + ")";
    }

private:
    static QuadSurd raw(const Rational& a, const Rational& b, const BigInt& d) {
        QuadSurd s;
        s.a_ = a;
        s.b_ = b;
        s.d_ = d;
        return s;
    }

    // d is already in normal form; only the b = 0 collapse can be needed.
    static QuadSurd same_class(const Rational& a, const Rational& b, const BigInt& d) {
        if (b == 0 || d == 0)
            return raw(a, 0, 0);
        return raw(a, b, d);
    }

    static const std::vector<unsigned>& small_primes() {
        static const std::vector<unsigned> primes = [] {
            std::vector<unsigned> ps;
            for (unsigned n = 2; n <= kSquareScan; ++n) {
                bool prime = true;
                for (unsigned p : ps) {
                    if (p * p > n)
                        break;
                    if (n % p == 0) {
                        prime = false;
                        break;
                    }
                }
                if (prime)
                    ps.push_back(n);
            }
            return ps;
        }();
        return primes;
    }

    static const BigInt& common_radicand(const QuadSurd& x, const QuadSurd& y) {
        if (x.b_ == 0)
            return y.d_;
        if (y.b_ == 0 || x.d_ == y.d_)
            return x.d_;
        throw error(errc::radicand_mismatch,
                    "arithmetic across radicands " + x.d_.str() + " and " + y.d_.str());
    }

    void normalize() {
        if (b_ == 0 || d_ == 0) {
            b_ = 0;
            d_ = 0;
            return;
        }
        BigInt root;
        if (is_square(d_, &root)) {
            a_ += b_ * Rational(root);
            b_ = 0;
            d_ = 0;
            return;
        }
        for (unsigned p : small_primes()) {
            unsigned long pp = static_cast<unsigned long>(p) * p;
            if (d_ < pp)
                break;
            while (mp::integer_modulus(d_, pp) == 0) {
                d_ /= pp;
                b_ *= p;
            }
        }
    }

    Rational a_{0};
    Rational b_{0};
    BigInt d_{0};
};

// sign(A + B*sqrt(d)), d >= 0.
inline int surd_sign(const Rational& A, const Rational& B, const BigInt& d) {
    int sa = sign(A), sb = d == 0 ? 0 : sign(B);
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    // Opposite signs: whichever has the larger square wins.
    int c = sign(Rational(A * A - B * B * Rational(d)));
    return c == 0 ? 0 : (c > 0 ? sa : sb);
}

// sign((a1-a2) + b1*sqrt(d1) - b2*sqrt(d2)) by at most two squarings.
inline int surd_sign_diff(const QuadSurd& x, const QuadSurd& y) {
    Rational A = x.a() - y.a();
    if (x.is_rational() || y.is_rational() || x.d() == y.d()) {
        if (y.is_rational())
            return surd_sign(A, x.b(), x.d());
        if (x.is_rational())
            return surd_sign(A, -y.b(), y.d());
        return surd_sign(A, x.b() - y.b(), x.d());
    }
    // u = A + B sqrt(d1), v = C sqrt(d2).
    const Rational& B = x.b();
    Rational C = -y.b();
    const BigInt& d1 = x.d();
    const BigInt& d2 = y.d();
    int su = surd_sign(A, B, d1);
    int sv = sign(C);
    if (su == 0)
        return sv;
    if (su == sv)
        return su;
    // u^2 - v^2 = A^2 + B^2 d1 - C^2 d2 + 2AB sqrt(d1)
    int sq = surd_sign(A * A + B * B * Rational(d1) - C * C * Rational(d2), 2 * A * B, d1);
    return sq == 0 ? 0 : su * sq;
}

inline QuadSurd surd_value(const Rational& a, const Rational& b, const BigInt& d) {
    return QuadSurd(a, b, d);
}

inline std::strong_ordering surd_cmp(const QuadSurd& x, const QuadSurd& y) {
    int s = surd_sign_diff(x, y);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline bool operator==(const QuadSurd& x, const QuadSurd& y) { return surd_sign_diff(x, y) == 0; }
inline std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) { return surd_cmp(x, y); }

// Identity of normal forms, as opposed to equality of values.
inline bool same_representation(const QuadSurd& x, const QuadSurd& y) {
    return x.a() == y.a() && x.b() == y.b() && x.d() == y.d();
}

inline BigInt floor(const QuadSurd& x) {
    if (x.is_rational())
        return floor(x.a());
    // |b| sqrt(d) = sqrt(b^2 d); floor(sqrt(y)) = isqrt(floor(y)).
    BigInt m = isqrt(floor(Rational(x.b() * x.b() * Rational(x.d()))));
    BigInt k = floor(x.a()) + (x.b() > 0 ? m : BigInt(-m - 1));
    while (x < QuadSurd(Rational(k)))
        --k;
    while (!(x < QuadSurd(Rational(k + 1))))
        ++k;
    return k;
}

} // namespace gaeta
