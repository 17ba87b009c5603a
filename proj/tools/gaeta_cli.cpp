// gaeta: command-line front end to the exceptional-slope library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gaeta/serialize.hpp"
#include "gaeta/verify.hpp"

namespace {

using namespace gaeta;

struct Globals {
    bool json = false;
    long depth = -1;
};

void print_json(const ojson& j) { std::cout << j.dump(2) << '\n'; }

int cmd_epsilon(const Globals& g, const std::string& p, unsigned q) {
    const ExceptionalSlope& e = epsilon(BigInt(p), q);
    if (g.json) {
        print_json(to_json(e));
        return 0;
    }
    std::cout << "value: " << e.value.str() << '\n'
              << "address: " << e.address.str() << '\n'
              << "rank: " << e.rank.str() << '\n'
              << "discriminant: " << e.discriminant.str() << '\n'
              << "euler: " << e.euler.str() << '\n'
              << "x: " << e.interval_radius.str() << '\n'
              << "interval: (" << e.lower().str() << ", " << e.upper().str() << ")\n";
    return 0;
}

int cmd_cf(const Globals& g, const std::string& value) {
    Rational x = parse_rational(value);
    ContinuedFraction cf = cf_expand_even(x);
    ExceptionalCfReport rep = check_exceptional_cf(x);
    bool pal = is_palindrome(cf);
    if (g.json) {
        ojson j = to_json(cf);
        j["value"] = x.str();
        j["palindrome"] = pal;
        j["exceptional_checks"] = to_json(rep);
        j["exceptional"] = is_exceptional_slope(x);
        print_json(j);
        return 0;
    }
    std::cout << "value: " << x.str() << '\n' << "expansion: [" << cf.integer_part.str() << ';';
    for (std::size_t i = 0; i < cf.terms.size(); ++i)
        std::cout << (i ? "," : " ") << cf.terms[i].str();
    std::cout << "]\n" << "convergents:";
    for (const auto& [p, q] : cf.convergents)
        std::cout << ' ' << p.str() << '/' << q.str();
    std::cout << '\n'
              << "palindrome: " << std::boolalpha << pal << '\n'
              << "terms_in_1_2: " << rep.terms_in_1_2 << '\n'
              << "ones_blocks_even: " << rep.ones_blocks_even << '\n'
              << "interior_twos_blocks_even: " << rep.interior_twos_blocks_even << '\n'
              << "exceptional: " << is_exceptional_slope(x) << '\n';
    return 0;
}

int cmd_slope(const Globals& g, long n) {
    MinSlopeResult m = min_slope(n);
    if (g.json) {
        print_json(to_json(m));
        return 0;
    }
    std::cout << "n: " << n << '\n'
              << "mu: " << m.mu.str() << '\n'
              << "lambda: " << m.lambda.str() << '\n'
              << "alpha: " << m.associated->value.str() << '\n'
              << "case: " << to_string(m.kind) << '\n';
    return 0;
}

int cmd_resolution(const Globals& g, long n) {
    ResolutionData rd = gaeta_resolution(n);
    if (g.json) {
        print_json(to_json(rd));
        return 0;
    }
    std::cout << "n: " << n << '\n'
              << "mu: " << rd.mu.str() << "  lambda: " << rd.lambda.str() << '\n'
              << "alpha: " << rd.alpha->value.str() << "  beta: " << rd.beta->value.str()
              << "  alpha.beta: " << rd.dot_slope->value.str() << '\n'
              << "case: " << to_string(rd.kind) << (rd.sporadic ? " (sporadic)" : "") << '\n'
              << "m1: " << rd.m1.str() << "  m2: " << rd.m2.str() << "  m3: " << rd.m3.str() << '\n';
    bool complex = rd.sporadic;
    std::cout << (rd.kind == ResolutionCase::AtDot ? "resolution: " : (complex ? "W complex: " : "W: "))
              << format_sequence(rd.w_sequence, complex) << '\n';
    if (complex) {
        // W* is a two-term complex, so I_Z sits in a triangle rather than a short exact sequence
        const auto& s = rd.iz_sequence;
        std::cout << "I_Z triangle: " << s[0].str() << " -> " << s[1].str() << " -> " << s[2].str() << " -> "
                  << s[0].str() << "[1]\n";
    } else if (rd.kind != ResolutionCase::AtDot) {
        std::cout << "I_Z: " << format_sequence(rd.iz_sequence, false) << '\n';
    }
    std::cout << "ch(W): " << rd.w_char.str() << '\n' << "characters:\n";
    for (const auto* seq : {&rd.w_sequence, &rd.iz_sequence}) {
        for (const Term& t : *seq)
            std::cout << "  " << t.str() << ": " << t.total().str() << '\n';
        if (rd.kind == ResolutionCase::AtDot)
            break;
    }
    std::cout << "ch(I_Z): " << rd.iz_char.str() << '\n';
    return 0;
}

int cmd_walls(const Globals& g, long n, const std::string& pairs, const std::string& svg_path) {
    std::vector<Rational> slopes;
    if (!pairs.empty()) {
        std::stringstream ss(pairs);
        std::string item;
        while (std::getline(ss, item, ','))
            slopes.push_back(parse_rational(item));
        if (slopes.size() % 2)
            throw error(errc::parse, "--pairs needs an even number of slopes");
    }
    CollapsingWall cw = collapsing_wall_detail(n);
    std::vector<Wall> extra;
    ojson pj = ojson::array();
    for (std::size_t i = 0; i < slopes.size(); i += 2) {
        const ExceptionalSlope& a = exceptional_from_value(slopes[i]);
        const ExceptionalSlope& b = exceptional_from_value(slopes[i + 1]);
        Wall w = exceptional_pair_wall(a, b);
        extra.push_back(w);
        ojson j = to_json(w);
        j["alpha"] = a.value.str();
        j["beta"] = b.value.str();
        pj.push_back(j);
    }
    if (!svg_path.empty()) {
        std::ofstream out(svg_path, std::ios::binary);
        if (!out)
            throw error(errc::domain, "cannot write " + svg_path);
        out << render_walls(n, extra);
    }
    Rational y = mori_from_bridgeland(cw.wall.center_s);
    if (g.json) {
        ojson j{{"n", n}, {"mu", cw.mu.str()}, {"collapsing_wall", to_json(cw.wall)},
                {"mori_y_conjectural", y.str()}, {"pair_walls", pj}};
        print_json(j);
        return 0;
    }
    std::cout << "n: " << n << "  mu: " << cw.mu.str() << '\n'
              << "collapsing wall: center " << cw.wall.center_s.str() << ", radius^2 " << cw.wall.radius_sq.str()
              << '\n'
              << "mori y (conjectural correspondence): " << y.str() << '\n';
    for (std::size_t i = 0; i < extra.size(); ++i)
        std::cout << "pair wall (" << slopes[2 * i].str() << ", " << slopes[2 * i + 1].str() << "): center "
                  << extra[i].center_s.str() << ", radius^2 " << extra[i].radius_sq.str() << '\n';
    return 0;
}

int cmd_table(long n_min, long n_max, const std::string& format) {
    if (n_min < 2 || n_max < n_min)
        throw error(errc::range, "table needs 2 <= n_min <= n_max");
    if (format == "csv") {
        std::cout << "n,alpha,mu\n";
    } else if (format == "md") {
        std::cout << "| n | alpha | mu |\n|---|---|---|\n";
    } else if (format != "json") {
        throw error(errc::parse, "unknown format '" + format + "'");
    }
    ojson rows = ojson::array();
    for (long n = n_min; n <= n_max; ++n) {
        MinSlopeResult m = min_slope(n);
        const std::string a = m.associated->value.str(), mu = m.mu.str();
        if (format == "csv")
            std::cout << n << ',' << a << ',' << mu << '\n';
        else if (format == "md")
            std::cout << "| " << n << " | " << a << " | " << mu << " |\n";
        else
            rows.push_back({{"n", n}, {"alpha", a}, {"mu", mu}});
    }
    if (format == "json")
        std::cout << rows.dump() << '\n';
    return 0;
}

int cmd_verify(const Globals& g, const std::string& suite, long depth) {
    std::vector<SuiteReport> reports;
    if (suite == "all") {
        for (const std::string& s : suite_names())
            reports.push_back(run_suite(s, default_suite_depth(s)));
    } else {
        reports.push_back(run_suite(suite, depth >= 0 ? depth : default_suite_depth(suite)));
    }
    bool ok = true;
    ojson arr = ojson::array();
    for (const SuiteReport& r : reports) {
        ok = ok && r.ok();
        if (g.json) {
            arr.push_back({{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed},
                           {"first_failure", r.first_failure}});
            continue;
        }
        std::cout << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.passed << " passed, " << r.failed
                  << " failed)";
        if (!r.first_failure.empty())
            std::cout << " first failure: " << r.first_failure;
        std::cout << '\n';
    }
    if (g.json)
        print_json(arr);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exceptional bundles on the plane: slopes, resolutions and walls"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_option("--depth", g.depth, "Tree depth or n range for verify");

    std::string p = "0";
    unsigned q = 0;
    auto* eps = app.add_subcommand("epsilon", "Exceptional slope at dyadic address p/2^q");
    eps->add_option("--p", p, "Numerator of the address")->required();
    eps->add_option("--q", q, "Exponent of the address")->required();

    std::string value;
    auto* cf = app.add_subcommand("cf", "Even-length continued fraction and structure checks");
    cf->add_option("--value", value, "Rational p/q")->required();

    long n = 0;
    auto* slope = app.add_subcommand("slope", "Minimum slope for n points");
    slope->add_option("--n", n, "Number of points")->required();

    auto* res = app.add_subcommand("resolution", "Generalized Gaeta resolution for n points");
    res->add_option("--n", n, "Number of points")->required();

    std::string pairs, svg;
    auto* walls = app.add_subcommand("walls", "Collapsing wall and exceptional-pair walls");
    walls->add_option("--n", n, "Number of points")->required();
    walls->add_option("--pairs", pairs, "Exceptional slopes a1,b1,a2,b2,...");
    walls->add_option("--svg", svg, "Write an SVG rendering to this path");

    long n_min = 0, n_max = 0;
    std::string format = "csv";
    auto* table = app.add_subcommand("table", "Minimum-slope table");
    table->add_option("n_min", n_min)->required();
    table->add_option("n_max", n_max)->required();
    table->add_option("--format", format, "csv, json or md")->check(CLI::IsMember({"csv", "json", "md"}));

    std::string suite;
    long depth_pos = -1;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "cf, intervals, gamma, resolution, kronecker, walls or all")->required();
    verify->add_option("depth", depth_pos, "Tree depth (cf, intervals, walls) or n bound (others)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eps)
            return cmd_epsilon(g, p, q);
        if (*cf)
            return cmd_cf(g, value);
        if (*slope)
            return cmd_slope(g, n);
        if (*res)
            return cmd_resolution(g, n);
        if (*walls)
            return cmd_walls(g, n, pairs, svg);
        if (*table)
            return cmd_table(n_min, n_max, g.json ? "json" : format);
        if (*verify)
            return cmd_verify(g, suite, depth_pos >= 0 ? depth_pos : g.depth);
    } catch (const gaeta::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
