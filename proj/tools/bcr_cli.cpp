// bcr_cli: burst-covering radius tools.
//
// Exit codes: 0 ok, 1 bad input, 2 bound violation, 3 fixture mismatch, 4 budget exceeded.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bcr/bcr.hpp"

using namespace bcr;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kBadInput = 1, kViolation = 2, kMismatch = 3, kBudget = 4 };

/// A table plus a summary object; rendered as json, csv or plain text.
struct Report {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    json summary = json::object();
    std::vector<std::string> notes;
    // json: a single row is printed as one flat object merged with the summary.
    bool flat = false;
    std::string rows_key = "rows";
};

std::string cell_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

std::string csv_cell(const json& v) {
    std::string s = cell_text(v);
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void emit(const Report& rep, const std::string& format) {
    if (format == "json") {
        auto row_object = [&](const std::vector<json>& row) {
            json o = json::object();
            for (std::size_t k = 0; k < rep.columns.size(); ++k) o[rep.columns[k]] = row[k];
            return o;
        };
        json j;
        if (rep.flat && rep.rows.size() == 1) {
            j = row_object(rep.rows.front());
            j.update(rep.summary);
        } else {
            j["command"] = rep.command;
            j[rep.rows_key] = json::array();
            for (const auto& row : rep.rows) j[rep.rows_key].push_back(row_object(row));
            j["summary"] = rep.summary;
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (std::size_t k = 0; k < rep.columns.size(); ++k) std::cout << (k ? "," : "") << rep.columns[k];
        std::cout << "\n";
        for (const auto& row : rep.rows) {
            for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? "," : "") << csv_cell(row[k]);
            std::cout << "\n";
        }
        for (const auto& [k, v] : rep.summary.items()) std::cout << "# " << k << "=" << cell_text(v) << "\n";
        return;
    }
    std::vector<std::size_t> width(rep.columns.size());
    for (std::size_t k = 0; k < rep.columns.size(); ++k) width[k] = rep.columns[k].size();
    for (const auto& row : rep.rows)
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], cell_text(row[k]).size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            std::string c = cells[k];
            c.resize(width[k], ' ');
            s += (k ? "  " : "") + c;
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        std::cout << s << "\n";
    };
    if (!rep.columns.empty()) {
        line(rep.columns);
        for (const auto& row : rep.rows) {
            std::vector<std::string> cells;
            for (const auto& v : row) cells.push_back(cell_text(v));
            line(cells);
        }
    }
    for (const auto& [k, v] : rep.summary.items()) std::cout << k << ": " << cell_text(v) << "\n";
    for (const auto& n : rep.notes) std::cout << n << "\n";
}

// ---------------------------------------------------------------------------
// Code sources.

struct CodeSource {
    std::string family;
    std::string code_path;
    int n = 0;
    std::string g;
    std::string modulus;
    int e = 2;
    int m = 0;

    void attach(CLI::App* app) {
        app->add_option("--family", family, "bch(e,m), melas(m), or bch/melas with --e/--m");
        app->add_option("--code", code_path, "JSON code descriptor file");
        app->add_option("--n", n, "length of a generic code");
        app->add_option("--g", g, "generator of a generic code (hex, x^3+x+1 or [1,1,0,1])");
        app->add_option("--modulus", modulus, "primitive modulus for family codes");
        app->add_option("--e", e, "error parameter for --family bch");
        app->add_option("--m", m, "field degree for --family bch/melas");
    }

    bool given() const { return !family.empty() || !code_path.empty() || !g.empty(); }

    CyclicCode build() const {
        const int sources = !family.empty() + !code_path.empty() + !g.empty();
        if (sources != 1) throw ParseError("give exactly one of --family, --code, --g");
        std::optional<BinaryPolynomial> mod;
        if (!modulus.empty()) mod = parse_polynomial(modulus);
        if (!code_path.empty()) {
            std::ifstream in(code_path);
            if (!in) throw ParseError("cannot open descriptor " + code_path);
            json j;
            try {
                j = json::parse(in);
            } catch (const json::exception& ex) {
                throw ParseError(std::string("descriptor is not valid JSON: ") + ex.what());
            }
            if (mod) j["modulus_hex"] = to_hex(*mod);
            return code_from_json(j);
        }
        if (!g.empty()) {
            if (n <= 0) throw ParseError("--g needs --n");
            return make_cyclic_code(n, parse_polynomial(g), mod ? make_field(*mod) : nullptr);
        }
        Family fam;
        if (family == "bch")
            fam = {FamilyKind::bch, e, m};
        else if (family == "melas")
            fam = {FamilyKind::melas, 0, m};
        else
            fam = parse_family(family);
        if (fam.kind == FamilyKind::bch) return make_bch(fam.e, fam.m, mod);
        if (fam.kind == FamilyKind::melas) return make_melas(fam.m, mod);
        throw ParseError("family 'generic' needs --n and --g");
    }
};

RadiusBudget budget_from_env(int max_register) {
    RadiusBudget b;
    b.max_register = max_register;
    if (const char* w = std::getenv("BCR_WORKERS")) {
        try {
            b.workers = std::stoi(w);
        } catch (const std::exception&) {
            throw ParseError(std::string("BCR_WORKERS must be an integer, got '") + w + "'");
        }
        if (b.workers < 1) throw ParseError("BCR_WORKERS must be positive");
    }
    return b;
}

json hex_or_null(const FieldPtr& f) { return f ? json(to_hex(f->modulus())) : json(nullptr); }

// ---------------------------------------------------------------------------
// Commands.

int cmd_code(const CodeSource& src, const std::string& format) {
    const auto code = src.build();
    if (format == "json") {
        std::cout << to_json(code).dump(2) << "\n";
        return kOk;
    }
    Report rep{"code", {"factor_hex", "degree", "exponent"}};
    for (const auto& f : code.factors())
        rep.rows.push_back({to_hex(f.poly()), f.degree(), f.exponent ? json(*f.exponent) : json(nullptr)});
    rep.summary = {{"family", code.family().name()}, {"n", code.n()}, {"r", code.r()}, {"g_hex", to_hex(code.generator())},
                   {"modulus_hex", hex_or_null(code.context())}};
    emit(rep, format);
    return kOk;
}

int cmd_radius(const CodeSource& src, const std::string& method, bool linear, int max_register, const std::string& format) {
    const auto code = src.build();
    const auto budget = budget_from_env(max_register);
    RadiusResult res;
    if (linear && method != "matrix") throw ParseError("--linear needs --method matrix");
    if (method == "orbit")
        res = cyclic_burst_radius(code, budget);
    else if (method == "matrix")
        res = matrix_burst_radius(parity_check_matrix(code), !linear, budget);
    else if (method == "geometric")
        res = geometric_burst_radius(code);
    else
        throw ParseError("unknown method " + method);
    Report rep{"radius", {"family", "n", "r", "g_hex", "b", "method", "cyclic", "witness_hex"}};
    rep.flat = true;
    rep.rows.push_back({code.family().name(), code.n(), code.r(), to_hex(code.generator()), res.b, to_string(res.method), res.cyclic,
                        to_hex(BinaryPolynomial(res.witness))});
    emit(rep, format);
    return kOk;
}

Report bounds_table(const BoundsReport& br) {
    Report rep{"bounds", {"name", "kind", "value", "raw", "applicable", "note"}};
    rep.rows_key = "entries";
    for (const auto& e : br.entries) rep.rows.push_back({e.name, to_string(e.kind), e.value, e.raw, e.applicable, e.note});
    rep.summary["n"] = br.n;
    rep.summary["r"] = br.r;
    rep.summary["radius"] = br.radius ? json(*br.radius) : json(nullptr);
    rep.summary["best_lower"] = br.best_lower();
    rep.summary["best_upper"] = br.best_upper();
    rep.summary["violations"] = br.violations();
    return rep;
}

int cmd_bounds(const CodeSource& src, bool skip_radius, int max_register, const std::string& format) {
    const auto code = src.build();
    std::optional<int> radius;
    if (!skip_radius) radius = cyclic_burst_radius(code, budget_from_env(max_register)).b;
    const auto br = bounds_report(code, radius);
    auto rep = bounds_table(br);
    rep.summary["family"] = code.family().name();
    emit(rep, format);
    return br.consistent() ? kOk : kViolation;
}

int cmd_cover(const CodeSource& src, const std::string& syndrome, std::optional<int> bprime, int max_register, const std::string& format) {
    const auto code = src.build();
    const auto x = parse_polynomial(syndrome);
    if (x.degree() >= code.r()) throw ParseError("syndrome has more than r = " + std::to_string(code.r()) + " bits");
    const int bp = bprime ? *bprime : cyclic_burst_radius(code, budget_from_env(max_register)).b;
    if (bp < 1) throw ParseError("--bprime must be positive");
    const Syndrome xs = x.is_zero() ? 0 : x.to_u64();
    const auto cert = burst_cover(code, xs, bp);
    Report rep{"cover", {"i", "f_hex", "width", "iterations", "verified"}};
    rep.flat = true;
    rep.rows.push_back({cert.i, to_hex(cert.f), cert.width, cert.iterations, verify_certificate(code, xs, cert, bp)});
    rep.summary = {{"syndrome_hex", to_hex(x)}, {"bprime", bp}};
    emit(rep, format);
    return kOk;
}

// Expected radii and floored upper bounds for m = 6..11.
struct TableRow {
    int m, bch, melas, upper;
};
constexpr TableRow kTable[] = {{6, 9, 10, 10}, {7, 11, 11, 11}, {8, 12, 12, 13}, {9, 13, 14, 14}, {10, 14, 15, 16}, {11, 16, 16, 17}};

std::vector<BinaryPolynomial> modulus_classes(int m) {
    std::vector<BinaryPolynomial> out;
    for (const auto& p : all_primitive_polynomials(m))
        if (!(p.reciprocal() < p)) out.push_back(p);
    return out;
}

int cmd_table1(int m_min, int m_max, const std::string& modulus, bool sensitivity, bool no_assert, int max_register, const std::string& format) {
    if (m_min < 6 || m_max > 11 || m_min > m_max) throw ParseError("m range must lie in [6, 11]");
    std::optional<BinaryPolynomial> mod;
    if (!modulus.empty()) {
        if (m_min != m_max) throw ParseError("--modulus needs a single m (--m-min = --m-max)");
        mod = parse_polynomial(modulus);
    }
    const auto budget = budget_from_env(max_register);
    bool mismatch = false;
    std::vector<int> dependent;
    Report rep{"table1", {"m", "modulus_hex", "bch", "melas", "upper", "expected_bch", "expected_melas", "expected_upper", "match"}};
    for (const auto& row : kTable) {
        if (row.m < m_min || row.m > m_max) continue;
        std::vector<BinaryPolynomial> moduli;
        if (sensitivity)
            moduli = modulus_classes(row.m);
        else
            moduli.push_back(mod ? *mod : default_primitive_modulus(row.m));
        bool bch_hit = false, mel_hit = false;
        const int up = bch_upper_floor(2, row.m);
        for (const auto& p : moduli) {
            const int bch = cyclic_burst_radius(make_bch(2, row.m, p), budget).b;
            const int mel = cyclic_burst_radius(make_melas(row.m, p), budget).b;
            bch_hit |= bch == row.bch;
            mel_hit |= mel == row.melas;
            rep.rows.push_back({row.m, to_hex(p), bch, mel, up, row.bch, row.melas, row.upper, bch == row.bch && mel == row.melas && up == row.upper});
        }
        // In a sensitivity run a row is matched when some modulus class attains each value.
        mismatch |= !bch_hit || !mel_hit || up != row.upper;
        if (sensitivity && moduli.size() > 1)
            for (std::size_t k = rep.rows.size() - moduli.size(); k < rep.rows.size(); ++k)
                if (!rep.rows[k].back().get<bool>()) {
                    dependent.push_back(row.m);
                    break;
                }
    }
    rep.summary["mismatch"] = mismatch;
    if (sensitivity) rep.summary["modulus_dependent_m"] = dependent;
    if (mismatch && !sensitivity) rep.notes.push_back("rerun with --sensitivity to see every primitive modulus class");
    emit(rep, format);
    return mismatch && !no_assert ? kMismatch : kOk;
}

std::string bit_string(const BitVector& v) {
    std::string out;
    out.reserve(v.size());
    for (auto bit : v) out += bit ? '1' : '0';
    return out;
}

/// Dump lines "initHex : bits" over one period, for the given init or one per orbit.
int lfsr_dump(const BinaryPolynomial& g, const LfsrSpec& spec, bool all_orbits, int max_register) {
    if (!all_orbits) {
        std::cout << to_hex(BinaryPolynomial(init_mask(spec))) << " : " << bit_string(lfsr_period(spec)) << "\n";
        return kOk;
    }
    if (g.degree() > 20) throw BudgetExceeded("orbit dump limited to deg(g) <= 20");
    for (const auto& rep : orbit_representatives(g, max_register)) {
        const auto init = galois_load_to_init(g, rep.to_u64());
        std::cout << to_hex(BinaryPolynomial(init)) << " : " << bit_string(lfsr_period(make_lfsr(g, init))) << "\n";
    }
    return kOk;
}

int cmd_lfsr_stats(const std::string& g_text, const std::string& init_text, int s, std::uint64_t window, bool dump, bool all_orbits,
                   int max_register, const std::string& format) {
    const auto g = parse_polynomial(g_text);
    const auto init = parse_polynomial(init_text);
    if (init.degree() >= g.degree()) throw ParseError("initial condition has more than deg(g) bits");
    const auto spec = make_lfsr(g, init.is_zero() ? 0 : init.to_u64());
    if (spec.is_zero()) throw ParseError("initial condition must be nonzero");
    if (dump || all_orbits) return lfsr_dump(g, spec, all_orbits, max_register);
    const auto period = lfsr_period(spec);
    if (s < 1 || s > 20) throw ParseError("--s must be in [1, 20]");
    const std::uint64_t win = window ? window : period.size();
    const auto hist = pattern_histogram(lfsr_sequence(spec, win + static_cast<std::size_t>(s) - 1), s, win);
    Report rep{"lfsr-stats", {"pattern", "window", "count"}};
    rep.rows_key = "patterns";
    for (std::uint64_t y = 0; y < hist.size(); ++y) {
        std::string bits;
        for (int j = 0; j < s; ++j) bits += ((y >> j) & 1) ? '1' : '0';
        rep.rows.push_back({bits, win, hist[y]});
    }
    rep.summary = {{"g_hex", to_hex(g)},
                   {"init_hex", to_hex(init)},
                   {"period", period.size()},
                   {"max_zero_run", max_zero_run(spec)},
                   {"minimal_polynomial_hex", to_hex(minimal_polynomial_of(g, lfsr_sequence(spec, 2 * static_cast<std::size_t>(g.degree()))))},
                   {"s", s}};
    emit(rep, format);
    return kOk;
}

// ---------------------------------------------------------------------------
// Verification suites.

struct VerifyOptions {
    int max = 40;
    int nmax = 63;
    std::string family = "bch";
    int e = 2;
    int m = 6;
    int s_max = 0;
    int m_max = 8;
    int draws = 200;
    std::uint64_t seed = 12345;
    bool all_states = false;
    std::string modulus;
};

int verify_appendix(const VerifyOptions& o, const std::string& format) {
    if (o.max < 1) throw ParseError("--max must be positive");
    Report rep{"verify appendix", {"a", "b", "c"}};
    int fails = 0;
    for (int a = 1; a <= o.max; ++a)
        for (int b = 1; b <= o.max; ++b) {
            const auto v = appendix_inequality_check(a, b);
            if (!v.holds) {
                ++fails;
                rep.rows.push_back({a, b, v.c});
            }
        }
    rep.summary = {{"cases_checked", o.max * o.max}, {"violations", fails}};
    emit(rep, format);
    return fails ? kViolation : kOk;
}

int verify_equivalence(const VerifyOptions& o, const std::string& format) {
    Report rep{"verify equivalence", {"code", "n", "r", "orbit", "matrix", "agree"}};
    int bad = 0;
    for (const auto& e : standard_corpus()) {
        if (e.code.n() > o.nmax) continue;
        const int a = cyclic_burst_radius(e.code).b, b = matrix_burst_radius(parity_check_matrix(e.code), true).b;
        bad += a != b;
        rep.rows.push_back({e.label, e.code.n(), e.code.r(), a, b, a == b});
    }
    rep.summary = {{"codes", rep.rows.size()}, {"violations", bad}};
    emit(rep, format);
    return bad ? kViolation : kOk;
}

int verify_bounds(const VerifyOptions&, const std::string& format) {
    Report rep{"verify bounds", {"code", "n", "r", "radius", "best_lower", "best_upper", "violations"}};
    int bad = 0;
    auto add = [&](const std::string& label, const CyclicCode& c) {
        const int b = cyclic_burst_radius(c).b;
        const auto br = bounds_report(c, b);
        const auto v = br.violations();
        bad += !v.empty();
        rep.rows.push_back({label, c.n(), c.r(), b, br.best_lower(), br.best_upper(), v});
    };
    for (const auto& e : standard_corpus()) add(e.label, e.code);
    for (const auto& e : mixed_degree_corpus(14)) add(e.label, e.code);
    rep.summary = {{"codes", rep.rows.size()}, {"violations", bad}};
    emit(rep, format);
    return bad ? kViolation : kOk;
}

json violations_json(const std::vector<PatternViolation>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back({{"state_hex", to_hex(BinaryPolynomial(v.state))}, {"s", v.s}, {"pattern", v.pattern}, {"count", v.count}});
    return a;
}

int verify_patterns(const VerifyOptions& o, const std::string& format) {
    std::optional<BinaryPolynomial> mod;
    if (!o.modulus.empty()) mod = parse_polynomial(o.modulus);
    const bool melas = o.family == "melas";
    if (!melas && o.family != "bch") throw ParseError("--family must be bch or melas");
    const auto code = melas ? make_melas(o.m, mod) : make_bch(o.e, o.m, mod);
    const int s_max = o.s_max ? o.s_max : o.m;
    const auto variant = melas ? PatternVariant::melas_mixed : PatternVariant::equal_degree;
    const auto r = pattern_theorem_check(code, variant, s_max, 26, o.all_states);
    json exps = json::array();
    for (const auto& x : r.exponents) exps.push_back((x.negative ? -1 : 1) * static_cast<std::int64_t>(x.value));
    Report rep{"verify patterns", {"state_hex", "s", "pattern", "count"}};
    for (const auto& v : r.violations) rep.rows.push_back({to_hex(BinaryPolynomial(v.state)), v.s, v.pattern, v.count});
    rep.summary = {{"theorem", to_string(variant)},
                   {"code", code.family().name()},
                   {"applicable", r.applicable},
                   {"failed_hypothesis", r.failed_hypothesis},
                   {"hypotheses", {{"m", r.m}, {"exponents", exps}, {"max_t", r.max_t}, {"max_u", r.max_u}, {"s_max", r.s_max}}},
                   {"sequences", r.sequences},
                   {"cases_checked", r.cases_checked},
                   {"violations", r.violations.size()},
                   {"corollary_s", r.corollary_s},
                   {"corollary_misses", r.corollary_misses}};
    if (melas) {
        rep.summary["positive_only_sequences"] = r.positive_only_sequences;
        rep.summary["positive_only_within_equal_bound"] = r.positive_only_within_equal_bound;
    }
    if (format == "json") {
        json j = rep.summary;
        j["violations"] = violations_json(r.violations);
        std::cout << j.dump(2) << "\n";
    } else {
        emit(rep, format);
    }
    if (!r.applicable) return kBadInput;
    return r.violations.empty() && r.corollary_misses == 0 ? kOk : kViolation;
}

int verify_charsums(const VerifyOptions& o, const std::string& format) {
    if (o.m_max < 1 || o.m_max > 12) throw ParseError("--m-max must be in [1, 12]");
    Report rep{"verify charsums", {"theorem", "m", "cases_checked", "violations", "max_ratio", "seed"}};
    std::uint64_t bad = 0;
    for (int m = 1; m <= o.m_max; ++m) {
        const auto ctx = default_field(m);
        if (m <= 8) {
            const auto w = wcu_exhaustive(*ctx, 5);
            bad += w.violations;
            rep.rows.push_back({w.theorem, m, w.cases_checked, w.violations, w.max_ratio, nullptr});
        }
        const auto l = laurent_sampled(*ctx, {1, 3, 5}, o.draws, o.seed);
        bad += l.violations;
        rep.rows.push_back({l.theorem, m, l.cases_checked, l.violations, l.max_ratio, l.seed});
    }
    rep.summary = {{"violations", bad}};
    emit(rep, format);
    return bad ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burst-covering radius tools for binary cyclic codes"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "plain";
    app.add_option("--emit", format, "output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    int max_register = 28;
    app.add_option("--max-register", max_register, "largest r for orbit and syndrome-table walks")->check(CLI::PositiveNumber);

    CodeSource code_src;
    auto* code_cmd = app.add_subcommand("code", "print a code descriptor");
    code_src.attach(code_cmd);

    CodeSource radius_src;
    std::string method = "orbit";
    bool linear = false;
    auto* radius_cmd = app.add_subcommand("radius", "burst-covering radius");
    radius_src.attach(radius_cmd);
    radius_cmd->add_option("--method", method, "orbit, matrix or geometric")->check(CLI::IsMember({"orbit", "matrix", "geometric"}));
    auto* cyc_flag = radius_cmd->add_flag("--cyclic", "cyclic windows (default)");
    radius_cmd->add_flag("--linear", linear, "non-cyclic windows (matrix method)")->excludes(cyc_flag);

    CodeSource bounds_src;
    bool skip_radius = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "every applicable bound, checked against the radius");
    bounds_src.attach(bounds_cmd);
    bounds_cmd->add_flag("--no-radius", skip_radius, "report bounds only");

    CodeSource cover_src;
    std::string syndrome;
    std::optional<int> bprime;
    auto* cover_cmd = app.add_subcommand("cover", "find a burst producing a syndrome");
    cover_src.attach(cover_cmd);
    cover_cmd->add_option("--syndrome", syndrome, "syndrome as hex (bit i = row i)")->required();
    cover_cmd->add_option("--bprime", bprime, "width threshold (default: the radius)");

    int m_min = 6, m_max = 11;
    std::string t_modulus;
    bool sensitivity = false, no_assert = false;
    auto* table_cmd = app.add_subcommand("table1", "BCH(2,m) and Melas(m) radii for m = 6..11");
    table_cmd->add_option("--m-min", m_min);
    table_cmd->add_option("--m-max", m_max);
    table_cmd->add_option("--modulus", t_modulus, "primitive modulus (single m only)");
    table_cmd->add_flag("--sensitivity", sensitivity, "rerun under every primitive modulus class");
    table_cmd->add_flag("--no-assert", no_assert, "exit 0 on mismatch with the reference values");

    std::string l_g, l_init = "0x1";
    int l_s = 3;
    std::uint64_t l_window = 0;
    auto* lfsr_cmd = app.add_subcommand("lfsr-stats", "period, zero run and pattern counts of an LFSR sequence");
    lfsr_cmd->add_option("--g", l_g, "connection polynomial")->required();
    lfsr_cmd->add_option("--init", l_init, "initial condition, bit k = a_k");
    lfsr_cmd->add_option("--s", l_s, "pattern length");
    lfsr_cmd->add_option("--window", l_window, "window length (default: one period)");
    bool l_dump = false, l_orbits = false;
    lfsr_cmd->add_flag("--dump", l_dump, "print one period as 'initHex : bits'");
    lfsr_cmd->add_flag("--all-orbits", l_orbits, "dump one period per orbit representative");

    VerifyOptions vo;
    std::string which;
    auto attach_verify = [&](CLI::App* cmd) {
        cmd->add_option("--max", vo.max, "appendix: largest a, b");
        cmd->add_option("--nmax", vo.nmax, "equivalence: largest code length");
        cmd->add_option("--family", vo.family, "patterns: bch or melas");
        cmd->add_option("--e", vo.e, "patterns: BCH error parameter");
        cmd->add_option("--m", vo.m, "patterns: field degree");
        cmd->add_option("--s-max", vo.s_max, "patterns: longest pattern (default m)");
        cmd->add_option("--m-max", vo.m_max, "charsums: largest field degree");
        cmd->add_option("--draws", vo.draws, "charsums: Laurent draws per (t, u)");
        cmd->add_option("--seed", vo.seed, "charsums: sampling seed");
        cmd->add_option("--modulus", vo.modulus, "patterns: primitive modulus");
        cmd->add_flag("--all-states", vo.all_states, "patterns: every nonzero state instead of one per orbit");
    };
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", which, "bounds, patterns, charsums, appendix or equivalence")
        ->required()
        ->check(CLI::IsMember({"bounds", "patterns", "charsums", "appendix", "equivalence"}));
    attach_verify(verify_cmd);

    auto* charsum_cmd = app.add_subcommand("charsum", "pattern-frequency checks (alias of verify patterns)");
    auto* charsum_verify = charsum_cmd->add_subcommand("verify", "verify pattern-frequency bounds");
    charsum_cmd->require_subcommand(1);
    charsum_cmd->fallthrough();
    attach_verify(charsum_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (*code_cmd) return cmd_code(code_src, format);
        if (*radius_cmd) return cmd_radius(radius_src, method, linear, max_register, format);
        if (*bounds_cmd) return cmd_bounds(bounds_src, skip_radius, max_register, format);
        if (*cover_cmd) return cmd_cover(cover_src, syndrome, bprime, max_register, format);
        if (*table_cmd) return cmd_table1(m_min, m_max, t_modulus, sensitivity, no_assert, max_register, format);
        if (*lfsr_cmd) return cmd_lfsr_stats(l_g, l_init, l_s, l_window, l_dump, l_orbits, max_register, format);
        if (*charsum_cmd) return verify_patterns(vo, format);
        if (which == "appendix") return verify_appendix(vo, format);
        if (which == "equivalence") return verify_equivalence(vo, format);
        if (which == "bounds") return verify_bounds(vo, format);
        if (which == "patterns") return verify_patterns(vo, format);
        return verify_charsums(vo, format);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const ThresholdBelowRadius& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}
