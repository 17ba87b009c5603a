#pragma once

// Wall geometry in the (s, t) upper half-plane. A wall between characters is
// either the vertical line s = mu or a semicircle centred on the s-axis.

#include <sstream>
#include <string>
#include <vector>

#include "gaeta/resolution.hpp"

namespace gaeta {

enum class WallKind { Semicircle, Vertical };

struct Wall {
    WallKind kind = WallKind::Semicircle;
    Rational center_s{0};
    Rational radius_sq{0};
    Rational vertical_s{0};

    bool nonempty() const { return kind == WallKind::Vertical || radius_sq > 0; }

    // (s - x)^2 + t^2 = rho^2, with t given through t^2.
    bool contains(const Rational& s, const Rational& t_sq) const {
        if (kind == WallKind::Vertical)
            return s == vertical_s && t_sq > 0;
        Rational dx = s - center_s;
        return t_sq > 0 && dx * dx + t_sq == radius_sq;
    }

    friend bool operator==(const Wall&, const Wall&) = default;
};

inline Wall wall_between(const ChernCharacter& e, const ChernCharacter& f) {
    const Rational &r = e.r, &c = e.c1, &d = e.ch2;
    const Rational &r2 = f.r, &c2 = f.c1, &d2 = f.ch2;
    Rational den = r * c2 - r2 * c;
    if (den == 0) {
        bool proportional = r * d2 == r2 * d && c * d2 == c2 * d;
        if (proportional)
            throw error(errc::proportional_characters, e.str() + " and " + f.str());
        if (r == 0 && r2 == 0)
            throw error(errc::domain, "no wall between two rank-zero characters of equal slope");
        Wall w;
        w.kind = WallKind::Vertical;
        w.vertical_s = r != 0 ? c / r : c2 / r2;
        return w;
    }
    Wall w;
    w.center_s = (r * d2 - r2 * d) / den;
    w.radius_sq = w.center_s * w.center_s - 2 * (c * d2 - c2 * d) / den;
    return w;
}

// The object whose wall with I_Z is the collapsing wall: E_-(a.b) below the
// dot, E_-(a.b)-3 above it, E_-beta at it.
inline ChernCharacter collapsing_destabilizer(const ResolutionData& rd) {
    switch (rd.kind) {
    case ResolutionCase::BelowDot: return exceptional_character(-rd.dot_slope->value);
    case ResolutionCase::AboveDot: return exceptional_character(-rd.dot_slope->value - 3);
    case ResolutionCase::AtDot: return exceptional_character(-rd.beta->value);
    }
    return {};
}

struct CollapsingWall {
    Wall wall;
    Rational mu;
    Rational delta_form; // 2 delta(mu) + 1/4
    bool gamma_matches = false; // gamma(mu) = n, where rho^2 = 2 delta(mu) + 1/4 follows
};

inline CollapsingWall collapsing_wall_detail(const BigInt& n) {
    if (n < 2)
        throw error(errc::domain, "collapsing_wall needs n >= 2");
    MinSlopeResult ms = min_slope(n);
    CollapsingWall cw;
    cw.mu = ms.mu;
    cw.wall.center_s = -(ms.mu + Rational(3, 2));
    cw.wall.radius_sq = cw.wall.center_s * cw.wall.center_s - 2 * Rational(n);
    cw.delta_form = 2 * delta(ms.mu) + Rational(1, 4);
    cw.gamma_matches = gamma(ms.mu) == Rational(n);
    if (cw.gamma_matches && (cw.wall.radius_sq != cw.delta_form || cw.wall.radius_sq <= Rational(5, 4)))
        throw error(errc::internal_inconsistency, "collapsing wall radius identity fails at n = " + n.str());
    return cw;
}

inline Wall collapsing_wall(const BigInt& n) { return collapsing_wall_detail(n).wall; }

inline bool nested(const Wall& inner, const Wall& outer, const Rational& reference_slope) {
    if (inner.kind != WallKind::Semicircle || outer.kind != WallKind::Semicircle)
        throw error(errc::side_mismatch, "nesting is defined for semicircles only");
    int si = sign(Rational(inner.center_s - reference_slope));
    int so = sign(Rational(outer.center_s - reference_slope));
    if (si == 0 || si != so)
        throw error(errc::side_mismatch, "walls lie on different sides of s = " + reference_slope.str());
    return si < 0 ? inner.center_s > outer.center_s : inner.center_s < outer.center_s;
}

// Conjectural affine correspondence between Bridgeland and Mori parameters.
inline Rational mori_from_bridgeland(const Rational& x) { return x + Rational(3, 2); }
inline Rational bridgeland_from_mori(const Rational& y) { return y - Rational(3, 2); }

// Consecutive addresses at the depth of the deeper one.
inline bool adjacent(const ExceptionalSlope& a, const ExceptionalSlope& b) {
    unsigned q = std::max(a.address.q, b.address.q);
    BigInt pa = a.address.p << (q - a.address.q), pb = b.address.p << (q - b.address.q);
    BigInt gap = pa - pb;
    return gap == 1 || gap == -1;
}

// Closed forms for W_{E_alpha, E_beta}; the radius form needs alpha < beta adjacent.
inline Rational pair_wall_center(const ExceptionalSlope& a, const ExceptionalSlope& b) {
    return (a.value + b.value) / 2 + (b.discriminant - a.discriminant) / (a.value - b.value);
}

inline Rational pair_wall_radius_sq(const ExceptionalSlope& a, const ExceptionalSlope& b) {
    Rational h = (a.value - b.value) / 2;
    Rational k = (b.discriminant - a.discriminant) / (a.value - b.value);
    return h * h - hilbert_poly(a.value - b.value) + k * k;
}

inline Wall exceptional_pair_wall(const ExceptionalSlope& a, const ExceptionalSlope& b) {
    if (a.value == b.value)
        throw error(errc::equal_slope, "alpha = beta = " + a.value.str());
    Wall w = wall_between(exceptional_character(a), exceptional_character(b));
    if (w.center_s != pair_wall_center(a, b))
        throw error(errc::internal_inconsistency, "pair wall center mismatch");
    if (adjacent(a, b)) {
        const ExceptionalSlope& lo = a.value < b.value ? a : b;
        const ExceptionalSlope& hi = a.value < b.value ? b : a;
        if (w.radius_sq != pair_wall_radius_sq(lo, hi))
            throw error(errc::internal_inconsistency, "pair wall radius mismatch");
    }
    return w;
}

// Limit of the pair-wall radius^2 along alpha.(alpha.(...beta)):
// (x/2)^2 - P(-x) + ((1/2 - Delta_alpha)/x)^2 with x = x_alpha.
inline QuadSurd pair_wall_limit_radius_sq(const ExceptionalSlope& a) {
    const QuadSurd& x = a.interval_radius;
    QuadSurd half = x * QuadSurd(Rational(1, 2));
    QuadSurd k = QuadSurd(Rational(1, 2) - a.discriminant) / x;
    return half * half - hilbert_poly(-x) + k * k;
}

struct KernelCokernelSlopes {
    int index = 0; // i in {0, 2}, i = p mod 4
    const ExceptionalSlope* zeta = nullptr;
    const ExceptionalSlope* alpha = nullptr;
    const ExceptionalSlope* beta = nullptr;
    const ExceptionalSlope* eta = nullptr;
    const ExceptionalSlope* omega = nullptr;
    BigInt hom_alpha_beta; // chi(E_alpha, E_beta)
    BigInt hom_beta_eta;   // chi(E_beta, E_eta)
    bool kernel_balance = false;   // ch(E_zeta) + ch(E_beta) = hom_alpha_beta ch(E_alpha)
    bool cokernel_balance = false; // ch(E_beta) + ch(E_omega) = hom_beta_eta ch(E_eta)
};

inline KernelCokernelSlopes kernel_cokernel_slopes(const BigInt& p, unsigned q) {
    if (q == 0)
        throw error(errc::domain, "q must be positive");
    if (mp::bit_test(p, 0))
        throw error(errc::parity, "p must be even");
    BigInt scale = BigInt(1) << q;
    KernelCokernelSlopes k;
    k.index = mp::bit_test(p, 1) ? 2 : 0;
    k.alpha = &epsilon(p, q);
    k.beta = &epsilon(p + 1, q);
    k.eta = &epsilon(p + 2, q);
    if (k.index == 0) {
        k.zeta = &epsilon(p + 4 - 3 * scale, q);
        k.omega = &epsilon(p + 4, q);
    } else {
        k.zeta = &epsilon(p - 2, q);
        k.omega = &epsilon(p - 2 + 3 * scale, q);
    }
    ChernCharacter ca = exceptional_character(*k.alpha), cb = exceptional_character(*k.beta),
                   ce = exceptional_character(*k.eta);
    k.hom_alpha_beta = hom_dimension(*k.alpha, *k.beta);
    k.hom_beta_eta = hom_dimension(*k.beta, *k.eta);
    k.kernel_balance = exceptional_character(*k.zeta) + cb == k.hom_alpha_beta * ca;
    k.cokernel_balance = cb + exceptional_character(*k.omega) == k.hom_beta_eta * ce;
    return k;
}

namespace detail {

inline constexpr unsigned kSvgDigits = 12;

inline std::string dec(const Rational& x) { return to_decimal(x, kSvgDigits); }

// sqrt(x) to kSvgDigits decimals, rounded to nearest, x >= 0.
inline Rational sqrt_decimal(const Rational& x) {
    BigInt scale = mp::pow(BigInt(10), kSvgDigits);
    BigInt y = floor(x * Rational(scale * scale * 4));
    BigInt s = isqrt(y); // 2 * 10^k * sqrt(x), truncated
    return Rational((s + 1) / 2, scale);
}

} // namespace detail

// Deterministic standalone SVG of the collapsing wall for n plus `extra` walls.
inline std::string render_walls(const BigInt& n, const std::vector<Wall>& extra) {
    using detail::dec;
    CollapsingWall cw = collapsing_wall_detail(n);
    std::vector<Wall> walls{cw.wall};
    walls.insert(walls.end(), extra.begin(), extra.end());

    Rational xmin = 0, xmax = 0, top = 0;
    bool first = true;
    for (const Wall& w : walls) {
        if (w.kind == WallKind::Vertical) {
            xmin = first ? w.vertical_s : std::min(xmin, w.vertical_s);
            xmax = first ? w.vertical_s : std::max(xmax, w.vertical_s);
            first = false;
            continue;
        }
        if (w.radius_sq <= 0)
            continue;
        Rational rho = detail::sqrt_decimal(w.radius_sq);
        Rational lo = w.center_s - rho, hi = w.center_s + rho;
        xmin = first ? lo : std::min(xmin, lo);
        xmax = first ? hi : std::max(xmax, hi);
        top = std::max(top, rho);
        first = false;
    }
    xmin = std::min(xmin, Rational(0));
    xmax = std::max(xmax, Rational(0));
    if (top == 0)
        top = 1;
    Rational width = xmax - xmin;
    if (width == 0)
        width = 1;
    Rational mx = width / 10, my = top / 10;
    Rational vx = xmin - mx, vy = -(top + my), vw = width + 2 * mx, vh = top + 2 * my;
    Rational stroke = std::max(vw, vh) / 400;

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << dec(vx) << ' ' << dec(vy)
      << ' ' << dec(vw) << ' ' << dec(vh) << "\">\n";
    o << "<title>Walls for the Hilbert scheme of " << n.str() << " points</title>\n";
    o << "<g fill=\"none\" stroke-width=\"" << dec(stroke) << "\">\n";
    o << "<line class=\"s-axis\" x1=\"" << dec(vx) << "\" y1=\"0\" x2=\"" << dec(vx + vw)
      << "\" y2=\"0\" stroke=\"#000000\"/>\n";
    o << "<line class=\"vertical-wall\" x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" << dec(vy) << "\" stroke=\"#888888\"/>\n";
    for (std::size_t i = 0; i < walls.size(); ++i) {
        const Wall& w = walls[i];
        const char* cls = i == 0 ? "collapsing-wall" : "wall";
        const char* color = i == 0 ? "#c0392b" : "#1f5fa8";
        if (w.kind == WallKind::Vertical) {
            o << "<line class=\"" << cls << "\" x1=\"" << dec(w.vertical_s) << "\" y1=\"0\" x2=\""
              << dec(w.vertical_s) << "\" y2=\"" << dec(vy) << "\" stroke=\"" << color << "\"/>\n";
            continue;
        }
        if (w.radius_sq <= 0) {
            o << "<!-- empty wall: center " << w.center_s.str() << ", radius^2 " << w.radius_sq.str()
              << " -->\n";
            continue;
        }
        Rational rho = detail::sqrt_decimal(w.radius_sq);
        o << "<path class=\"" << cls << "\" data-center=\"" << w.center_s.str() << "\" data-radius-sq=\""
          << w.radius_sq.str() << "\" d=\"M " << dec(w.center_s - rho) << " 0 A " << dec(rho) << ' '
          << dec(rho) << " 0 0 1 " << dec(w.center_s + rho) << " 0\" stroke=\"" << color << "\"/>\n";
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

} // namespace gaeta
