#pragma once

#include <stdexcept>
#include <string>

namespace gaeta {

enum class errc {
    degenerate_denominator,
    cantor_point,
    domain,
    integrality,
    zero_rank,
    internal_inconsistency,
    proportional_characters,
    side_mismatch,
    equal_slope,
    parity,
    sporadic_case,
    range,
    unknown_suite,
    not_exceptional,
    radicand_mismatch,
    parse,
};

inline const char* errc_name(errc e) {
    switch (e) {
    case errc::degenerate_denominator: return "degenerate-denominator";
    case errc::cantor_point: return "cantor-point";
    case errc::domain: return "domain";
    case errc::integrality: return "integrality-violation";
    case errc::zero_rank: return "zero-rank";
    case errc::internal_inconsistency: return "internal-inconsistency";
    case errc::proportional_characters: return "proportional-characters";
    case errc::side_mismatch: return "side-mismatch";
    case errc::equal_slope: return "equal-slope";
    case errc::parity: return "parity";
    case errc::sporadic_case: return "sporadic-case";
    case errc::range: return "range";
    case errc::unknown_suite: return "unknown-suite";
    case errc::not_exceptional: return "not-exceptional";
    case errc::radicand_mismatch: return "radicand-mismatch";
    case errc::parse: return "parse";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace gaeta
