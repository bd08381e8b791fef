// Command-line front end: sequence emission, identity-suite
// verification with CI-friendly exit codes, generating-function checks.
//
// Exit codes: 0 all checks passed, 1 identity failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "bpfo/biperiodic.hpp"
#include "bpfo/octonion.hpp"
#include "bpfo/octonion_seq.hpp"
#include "bpfo/quadratic.hpp"
#include "bpfo/rational.hpp"
#include "bpfo/series.hpp"

using json = nlohmann::ordered_json;
using namespace bpfo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Rational parse_flag_rational(const std::string& text, const std::string& flag) {
    Rational v;
    try {
        v = parse_rational(text);
    } catch (const ParseError&) {
        throw CLI::ValidationError(flag, "expected an exact rational 'p' or 'p/q', got '" + text + "'");
    }
    if (v.is_zero())
        throw CLI::ValidationError(flag, "must be nonzero");
    return v;
}

json context_json(const Rational& a, const Rational& b) {
    return json{{"a", to_string(a)}, {"b", to_string(b)}};
}

// ---------------------------------------------------------------- seq

struct SeqOptions {
    std::string a = "1";
    std::string b = "1";
    std::string kind = "q";
    std::int64_t from = 0;
    std::int64_t to = 10;
    std::string format = "plain";
};

int run_seq(const SeqOptions& opt) {
    const Rational a = parse_flag_rational(opt.a, "--a");
    const Rational b = parse_flag_rational(opt.b, "--b");
    if (opt.from > opt.to)
        throw CLI::ValidationError("--from", "must not exceed --to");
    SeqCache cache(make_context(a, b));

    std::vector<std::pair<std::int64_t, std::vector<Rational>>> rows;
    for (std::int64_t n = opt.from; n <= opt.to; ++n) {
        std::vector<Rational> vals;
        if (opt.kind == "q") {
            vals.push_back(cache.fib_q(n));
        } else if (opt.kind == "l") {
            vals.push_back(cache.lucas_l(n));
        } else {
            const OctQ o = oct_O(cache, n);
            for (std::size_t s = 0; s < 8; ++s)
                vals.push_back(o[s]);
        }
        rows.emplace_back(n, std::move(vals));
    }

    if (opt.format == "json") {
        json out{{"a", to_string(a)}, {"b", to_string(b)}, {"kind", opt.kind}};
        out["entries"] = json::array();
        for (const auto& [n, vals] : rows) {
            json e{{"n", n}};
            if (opt.kind == "O") {
                json coords = json::array();
                for (const auto& v : vals)
                    coords.push_back(to_string(v));
                e["coords"] = std::move(coords);
            } else {
                e["value"] = to_string(vals[0]);
            }
            out["entries"].push_back(std::move(e));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        const char sep = (opt.format == "csv") ? ',' : ' ';
        for (const auto& [n, vals] : rows) {
            std::cout << n;
            for (const auto& v : vals)
                std::cout << sep << to_string(v);
            std::cout << "\n";
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------- verify

struct VerifyOptions {
    std::string a;
    std::string b;
    std::string suite = "all";
    std::int64_t n_max = 20;
    std::int64_t r_max = 4;
    std::int64_t order = 32;
};

struct CheckSink {
    json checks = json::array();
    bool all_pass = true;

    void add(const std::string& id, const json& params, bool pass, const std::string& detail = {}) {
        json c{{"id", id}, {"params", params}, {"pass", pass}};
        if (!detail.empty())
            c["detail"] = detail;
        checks.push_back(std::move(c));
        all_pass = all_pass && pass;
    }
    void skip_degenerate(const std::string& id, const json& params) {
        add(id, params, true, "skipped: degenerate");
    }
};

OctQ random_octonion(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    std::array<Rational, 8> c;
    for (auto& x : c)
        x = Rational(num(rng), den(rng));
    return OctQ(std::move(c));
}

void suite_algebra(CheckSink& sink) {
    const json params = json::object();
    const BasisTable regenerated = basis_table_from_pair_formula();
    bool table_ok = regenerated.index == kBasisTable.index && regenerated.sign == kBasisTable.sign;
    sink.add("algebra.basis_table", params, table_ok);

    std::mt19937 rng(20240817);
    bool comp_ok = true, conj_ok = true, real_ok = true, alt_ok = true;
    for (int i = 0; i < 200 && (comp_ok || conj_ok || real_ok || alt_ok); ++i) {
        const OctQ p = random_octonion(rng), q = random_octonion(rng);
        comp_ok = comp_ok && oct_norm(p * q) == oct_norm(p) * oct_norm(q);
        conj_ok = conj_ok && oct_conj(p * q) == oct_conj(q) * oct_conj(p);
        real_ok = real_ok && p + oct_conj(p) == OctQ::basis(0) * (Rational(2) * p[0]);
        alt_ok = alt_ok && (p * p) * q == p * (p * q) && (q * p) * p == q * (p * p);
    }
    sink.add("algebra.norm_composition", params, comp_ok);
    sink.add("algebra.conj_antiautomorphism", params, conj_ok);
    sink.add("algebra.real_part", params, real_ok);
    sink.add("algebra.alternativity", params, alt_ok);

    const auto e = [](std::size_t s) { return OctQ::basis(s); };
    sink.add("algebra.nonassociativity_witness", params,
             !((e(1) * e(2)) * e(4) == e(1) * (e(2) * e(4))));
}

void suite_binet(CheckSink& sink, SeqCache& cache, const json& ctx, std::int64_t n_max) {
    const SeqParams& p = cache.params();
    if (p.degenerate()) {
        sink.skip_degenerate("binet", ctx);
        return;
    }
    const BinetConstants constants = make_binet_constants(p);
    bool fib_ok = true, lucas_ok = true, oct_ok = true;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        fib_ok = fib_ok && fib_binet(p, n) == cache.fib_q(n);
        lucas_ok = lucas_ok && lucas_binet(p, n) == cache.lucas_l(n);
        oct_ok = oct_ok && oct_binet(constants, p, n) == oct_O(cache, n);
    }
    sink.add("binet.fib", ctx, fib_ok);
    sink.add("binet.lucas", ctx, lucas_ok);
    sink.add("binet.octonion", ctx, oct_ok);
}

void suite_prop1(CheckSink& sink, SeqCache& cache, const json& ctx, std::int64_t n_max) {
    // Recurrence-only identities: valid on degenerate contexts too.
    bool i_ok = true, ii_ok = true, iii_ok = true, iv_ok = true, v_ok = true;
    const OctQ e0 = OctQ::basis(0);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const OctQ o = oct_O(cache, n);
        const OctQ oc = oct_conj(o);
        const Rational qn = cache.fib_q(n);
        i_ok = i_ok && o + oc == e0 * (2 * qn);
        ii_ok = ii_ok && o * o + o * oc == (e0 * (2 * qn)) * o;
        iii_ok = iii_ok && o * oc == e0 * oct_norm(o);
        const OctQ om = oct_O(cache, -n);
        const Rational sign_qn = (xi(n) == 1) ? qn : -qn;
        iv_ok = iv_ok && om + oct_conj(om) == e0 * (2 * sign_qn);
        if (xi(n) == 0)
            v_ok = v_ok && o + om == oct_O(cache, 0) * cache.lucas_l(n);
    }
    sink.add("prop1.i", ctx, i_ok);
    sink.add("prop1.ii", ctx, ii_ok);
    sink.add("prop1.iii", ctx, iii_ok);
    sink.add("prop1.iv", ctx, iv_ok);
    sink.add("prop1.v_even", ctx, v_ok);
}

void suite_catalan(CheckSink& sink, SeqCache& cache, const json& ctx, std::int64_t n_max,
                   std::int64_t r_max) {
    const SeqParams& p = cache.params();
    if (p.degenerate()) {
        sink.skip_degenerate("catalan", ctx);
        return;
    }
    const BinetConstants constants = make_binet_constants(p);
    bool even_ok = true, general_ok = true;
    for (std::int64_t r = 1; r <= r_max; ++r)
        for (std::int64_t n = r; n <= n_max; ++n) {
            const OctQ lhs = oct_O(cache, 2 * n - 2 * r) * oct_O(cache, 2 * n + 2 * r) -
                             oct_O(cache, 2 * n) * oct_O(cache, 2 * n);
            even_ok = even_ok && lhs == catalan_even(constants, p, n, r);
        }
    for (std::int64_t r = 2; r <= r_max; r += 2)
        for (std::int64_t n = r; n <= n_max; ++n) {
            const OctQ lhs = oct_O(cache, n - r) * oct_O(cache, n + r) -
                             oct_O(cache, n) * oct_O(cache, n);
            general_ok = general_ok && lhs == catalan_general(constants, p, n, r);
        }
    sink.add("catalan.even_index", ctx, even_ok);
    sink.add("catalan.general_even_r", ctx, general_ok);
}

void suite_sums(CheckSink& sink, SeqCache& cache, const json& ctx, std::int64_t n_max) {
    const SeqParams& p = cache.params();
    if (p.degenerate()) {
        sink.skip_degenerate("sums", ctx);
        return;
    }
    const BinetConstants constants = make_binet_constants(p);
    bool all_ok = true, even_ok = true, odd_ok = true;
    OctQ acc_all = OctQ::basis(0) * Rational(0);
    OctQ acc_even = acc_all, acc_odd = acc_all;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        acc_all = acc_all + oct_O(cache, n - 1);
        acc_even = acc_even + oct_O(cache, 2 * (n - 1));
        acc_odd = acc_odd + oct_O(cache, 2 * (n - 1) + 1);
        all_ok = all_ok && sum_all(constants, cache, n) == acc_all;
        even_ok = even_ok && sum_even(constants, cache, n) == acc_even;
        odd_ok = odd_ok && sum_odd(constants, cache, n) == acc_odd;
    }
    sink.add("sums.all", ctx, all_ok);
    sink.add("sums.even", ctx, even_ok);
    sink.add("sums.odd", ctx, odd_ok);
}

void suite_genfun(CheckSink& sink, SeqCache& cache, const json& ctx, std::int64_t order) {
    // Formal power-series identities: rational-only, valid on
    // degenerate contexts as well.
    const SeqParams& p = cache.params();
    const RationalSeries f = series_f(p, order);
    const RationalSeries L1 = series_L1(p, order);
    bool f_ok = true, l_ok = true;
    for (std::int64_t n = 0; n <= order; ++n) {
        const Rational expect_q = (n % 2 == 1) ? cache.fib_q(n) : Rational(0);
        const Rational expect_l = (n % 2 == 1) ? cache.lucas_l(n) : Rational(0);
        f_ok = f_ok && f.coeff(n) == expect_q;
        l_ok = l_ok && L1.coeff(n) == expect_l;
    }
    sink.add("genfun.fib_odd_series", ctx, f_ok);
    sink.add("genfun.lucas_odd_series", ctx, l_ok);

    const OctonionSeries R = series_R(p, order);
    const OctonionSeries Rp = series_R_proof(p, cache, order);
    bool r_ok = true;
    for (std::size_t s = 0; s < 8; ++s)
        r_ok = r_ok && R.coord[s] == Rp.coord[s] && R.coord[s].coeff(0).is_zero() &&
               R.coord[s].coeff(1).is_zero();
    sink.add("genfun.R_two_routes", ctx, r_ok);

    const GenfunReport report = genfun_check(p, cache, order);
    std::string detail;
    if (!report.pass && report.first_mismatch_degree)
        detail = "first mismatch at degree " + std::to_string(*report.first_mismatch_degree) +
                 ", coordinate " + std::to_string(*report.first_mismatch_coordinate);
    sink.add("genfun.octonion_series", ctx, report.pass, detail);
    sink.add("genfun.reexpansion", ctx, report.reexpansion_ok);
}

std::vector<std::pair<Rational, Rational>> default_grid() {
    const std::vector<Rational> as{Rational(1), Rational(2), Rational(3), Rational(1, 2),
                                   Rational(-1), Rational(-3)};
    const std::vector<Rational> bs{Rational(1), Rational(2), Rational(3), Rational(5),
                                   Rational(-2)};
    std::vector<std::pair<Rational, Rational>> grid;
    for (const auto& a : as)
        for (const auto& b : bs)
            grid.emplace_back(a, b);
    return grid;
}

int run_verify(const VerifyOptions& opt) {
    std::vector<std::pair<Rational, Rational>> grid;
    if (!opt.a.empty() || !opt.b.empty()) {
        if (opt.a.empty() || opt.b.empty())
            throw CLI::ValidationError("--a/--b", "give both parameters or neither");
        grid.emplace_back(parse_flag_rational(opt.a, "--a"), parse_flag_rational(opt.b, "--b"));
    } else {
        grid = default_grid();
    }

    CheckSink sink;
    const bool all = opt.suite == "all";
    if (all || opt.suite == "algebra")
        suite_algebra(sink);
    json grid_json = json::array();
    for (const auto& [a, b] : grid) {
        const json ctx = context_json(a, b);
        grid_json.push_back(ctx);
        SeqCache cache(make_context(a, b));
        if (all || opt.suite == "binet")
            suite_binet(sink, cache, ctx, opt.n_max);
        if (all || opt.suite == "prop1")
            suite_prop1(sink, cache, ctx, opt.n_max);
        if (all || opt.suite == "catalan")
            suite_catalan(sink, cache, ctx, std::min<std::int64_t>(opt.n_max, 20), opt.r_max);
        if (all || opt.suite == "sums")
            suite_sums(sink, cache, ctx, opt.n_max);
        if (all || opt.suite == "genfun")
            suite_genfun(sink, cache, ctx, opt.order);
    }

    json out{{"grid", std::move(grid_json)}, {"checks", std::move(sink.checks)},
             {"pass", sink.all_pass}};
    std::cout << out.dump(2) << "\n";
    return sink.all_pass ? kExitOk : kExitFail;
}

// ------------------------------------------------------- genfun-check

struct GenfunOptions {
    std::string a = "1";
    std::string b = "1";
    std::int64_t order = 32;
};

int run_genfun_check(const GenfunOptions& opt) {
    const Rational a = parse_flag_rational(opt.a, "--a");
    const Rational b = parse_flag_rational(opt.b, "--b");
    if (opt.order < 2)
        throw CLI::ValidationError("--order", "must be at least 2");
    SeqCache cache(make_context(a, b));
    const json ctx = context_json(a, b);

    CheckSink sink;
    suite_genfun(sink, cache, ctx, opt.order);
    const GenfunReport report = genfun_check(cache.params(), cache, opt.order);

    json out{{"context", ctx}, {"order", opt.order}, {"pass", sink.all_pass}};
    if (report.first_mismatch_degree) {
        out["first_mismatch_degree"] = *report.first_mismatch_degree;
        out["first_mismatch_coordinate"] = *report.first_mismatch_coordinate;
    }
    out["checks"] = std::move(sink.checks);
    std::cout << out.dump(2) << "\n";
    return sink.all_pass ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for bi-periodic Fibonacci octonions"};
    app.require_subcommand(1);

    SeqOptions seq_opt;
    auto* seq = app.add_subcommand("seq", "Emit q_n, l_n or O_n over an index range");
    seq->add_option("--a", seq_opt.a, "parameter a as 'p' or 'p/q' (nonzero)");
    seq->add_option("--b", seq_opt.b, "parameter b as 'p' or 'p/q' (nonzero)");
    seq->add_option("--kind", seq_opt.kind, "sequence kind")
        ->check(CLI::IsMember({"q", "l", "O"}));
    seq->add_option("--from", seq_opt.from, "first index (negatives allowed)");
    seq->add_option("--to", seq_opt.to, "last index");
    seq->add_option("--format", seq_opt.format, "output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Run identity suites, exit 0 iff all pass");
    verify->add_option("--a", verify_opt.a, "parameter a (omit both to use the default grid)");
    verify->add_option("--b", verify_opt.b, "parameter b");
    verify->add_option("--suite", verify_opt.suite, "suite selector")
        ->check(CLI::IsMember({"binet", "prop1", "catalan", "sums", "genfun", "algebra", "all"}));
    verify->add_option("--n-max", verify_opt.n_max, "index bound")->check(CLI::PositiveNumber);
    verify->add_option("--r-max", verify_opt.r_max, "catalan shift bound")
        ->check(CLI::PositiveNumber);
    verify->add_option("--order", verify_opt.order, "series truncation order")
        ->check(CLI::PositiveNumber);

    GenfunOptions genfun_opt;
    auto* genfun = app.add_subcommand("genfun-check", "Verify the generating-function identities");
    genfun->add_option("--a", genfun_opt.a, "parameter a");
    genfun->add_option("--b", genfun_opt.b, "parameter b");
    genfun->add_option("--order", genfun_opt.order, "series truncation order (>= 2)");

    try {
        app.parse(argc, argv);
        if (seq->parsed())
            return run_seq(seq_opt);
        if (verify->parsed())
            return run_verify(verify_opt);
        return run_genfun_check(genfun_opt);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const bpfo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
