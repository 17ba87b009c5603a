#pragma once

// JSON views of the library records. Rationals and big integers are written as
// exact strings ("p/q" or "p"); radicands as numbers when they fit in 64 bits.

#include <cstdint>
#include <limits>

#include <json.hpp>

#include "gaeta/bridgeland.hpp"

namespace gaeta {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const Rational& x) { return x.str(); }
inline ojson to_json(const BigInt& x) { return x.str(); }

inline ojson to_json(const QuadSurd& x) {
    ojson d;
    if (x.d() <= BigInt(std::numeric_limits<std::uint64_t>::max()))
        d = x.d().convert_to<std::uint64_t>();
    else
        d = x.d().str();
    return {{"a", x.a().str()}, {"b", x.b().str()}, {"d", d}};
}

inline ojson to_json(const ChernCharacter& ch) {
    return {{"r", ch.r.str()}, {"c1", ch.c1.str()}, {"ch2", ch.ch2.str()}};
}

inline ojson to_json(const ExceptionalSlope& e) {
    return {{"value", e.value.str()},
            {"address", {{"p", e.address.p.str()}, {"q", e.address.q}}},
            {"rank", e.rank.str()},
            {"discriminant", e.discriminant.str()},
            {"euler", e.euler.str()},
            {"interval_radius", to_json(e.interval_radius)},
            {"interval", {to_json(e.lower()), to_json(e.upper())}}};
}

inline ojson to_json(const ContinuedFraction& cf) {
    ojson terms = ojson::array(), conv = ojson::array();
    for (const BigInt& a : cf.terms)
        terms.push_back(a.str());
    for (const auto& [p, q] : cf.convergents)
        conv.push_back({p.str(), q.str()});
    return {{"integer_part", cf.integer_part.str()}, {"terms", terms}, {"convergents", conv}};
}

inline ojson to_json(const ExceptionalCfReport& r) {
    return {{"palindrome", r.palindrome},
            {"terms_in_1_2", r.terms_in_1_2},
            {"ones_blocks_even", r.ones_blocks_even},
            {"interior_twos_blocks_even", r.interior_twos_blocks_even}};
}

inline ojson to_json(const MinSlopeResult& m) {
    return {{"n", m.n.str()},
            {"mu", m.mu.str()},
            {"lambda", m.lambda.str()},
            {"associated", to_json(*m.associated)},
            {"case", to_string(m.kind)}};
}

inline ojson to_json(const Term& t) {
    ojson j{{"label", t.label}};
    j["slope"] = t.slope ? ojson(t.slope->str()) : ojson(nullptr);
    j["multiplicity"] = t.multiplicity.str();
    j["unit"] = to_json(t.unit);
    j["total"] = to_json(t.total());
    return j;
}

inline ojson to_json(const TwoTermResolution& t) {
    auto side = [](const auto& v) {
        ojson a = ojson::array();
        for (const auto& [s, m] : v)
            a.push_back({{"slope", s.str()}, {"multiplicity", m.str()}});
        return a;
    };
    return {{"left", side(t.left)}, {"right", side(t.right)}};
}

inline ojson to_json(const ResolutionData& rd) {
    auto seq = [](const std::vector<Term>& v) {
        ojson a = ojson::array();
        for (const Term& t : v)
            a.push_back(to_json(t));
        return a;
    };
    ojson chars = ojson::array();
    for (const ChernCharacter& ch : rd.term_chars())
        chars.push_back(to_json(ch));
    return {{"n", rd.n.str()},
            {"mu", rd.mu.str()},
            {"lambda", rd.lambda.str()},
            {"alpha", to_json(*rd.alpha)},
            {"beta", to_json(*rd.beta)},
            {"dot_slope", to_json(*rd.dot_slope)},
            {"case", to_string(rd.kind)},
            {"sporadic", rd.sporadic},
            {"triangular_minus_one", rd.triangular_minus_one},
            {"m1", rd.m1.str()},
            {"m2", rd.m2.str()},
            {"m3", rd.m3.str()},
            {"w_char", to_json(rd.w_char)},
            {"iz_char", to_json(rd.iz_char)},
            {"w_sequence", seq(rd.w_sequence)},
            {"iz_sequence", seq(rd.iz_sequence)},
            {"two_term", to_json(rd.two_term)},
            {"term_chars", chars}};
}

inline ojson to_json(const Wall& w) {
    if (w.kind == WallKind::Vertical)
        return {{"kind", "Vertical"}, {"vertical_s", w.vertical_s.str()}};
    return {{"kind", "Semicircle"}, {"center_s", w.center_s.str()}, {"radius_sq", w.radius_sq.str()}};
}

} // namespace gaeta
