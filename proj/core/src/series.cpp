#include "bpfo/series.hpp"

#include <stdexcept>

namespace bpfo {

namespace {

std::vector<Rational> char_denominator(const SeqParams& params) {
    // 1 - (ab+2) x^2 + x^4
    return {Rational(1), Rational(0), -(params.ab + 2), Rational(0), Rational(1)};
}

RationalSeries from_monomials(std::int64_t min, std::int64_t order,
                              const std::vector<std::pair<std::int64_t, Rational>>& terms) {
    std::vector<Rational> c(static_cast<std::size_t>(order - min + 1), Rational(0));
    for (const auto& [d, v] : terms)
        c[static_cast<std::size_t>(d - min)] = v;
    return RationalSeries(min, order, std::move(c));
}

RationalSeries finalize_R_coord(RationalSeries r, std::int64_t N) {
    if (!r.principal_part_zero())
        throw PrincipalPartResidue("R(x) kept a negative-degree coefficient");
    return r.trimmed_to(0).truncated(N);
}

} // namespace

RationalSeries series_f(const SeqParams& params, std::int64_t N) {
    if (N < 1)
        throw std::invalid_argument("series_f requires N >= 1");
    std::vector<std::pair<std::int64_t, Rational>> num{{1, Rational(1)}};
    if (N >= 3)
        num.emplace_back(3, Rational(-1));
    return from_monomials(0, N, num).divided_by_unit_poly(char_denominator(params));
}

RationalSeries series_L1(const SeqParams& params, std::int64_t N) {
    if (N < 1)
        throw std::invalid_argument("series_L1 requires N >= 1");
    std::vector<std::pair<std::int64_t, Rational>> num{{1, params.a}};
    if (N >= 3)
        num.emplace_back(3, params.a);
    return from_monomials(0, N, num).divided_by_unit_poly(char_denominator(params));
}

OctonionSeries series_R(const SeqParams& params, std::int64_t N) {
    if (N < 1)
        throw std::invalid_argument("series_R requires N >= 1");
    const RationalSeries f = series_f(params, N + 6);
    const Rational ab = params.ab;
    // The display's literal subtracted coefficients.
    const Rational q1(1);
    const Rational q3 = ab + 1;
    const Rational q5 = ab * ab + 3 * ab + 1;
    const Rational q7 = ab * ab * ab + 5 * ab * ab + 6 * ab + 1;

    constexpr std::int64_t shift[8] = {+1, 0, -1, -2, -3, -4, -5, -6};
    const std::vector<std::pair<std::int64_t, Rational>> subs[8] = {
        {},
        {{1, q1}},
        {{0, q1}},
        {{-1, q1}, {1, q3}},
        {{-2, q1}, {0, q3}},
        {{-3, q1}, {-1, q3}, {1, q5}},
        {{-4, q1}, {-2, q3}, {0, q5}},
        {{-5, q1}, {-3, q3}, {-1, q5}, {1, q7}},
    };

    auto coord = [&](int s) {
        RationalSeries r = f.shifted(shift[s]);
        if (!subs[s].empty())
            r = r - from_monomials(-6, N, subs[s]);
        return finalize_R_coord(std::move(r), N);
    };
    return OctonionSeries{{coord(0), coord(1), coord(2), coord(3), coord(4), coord(5), coord(6),
                           coord(7)}};
}

OctonionSeries series_R_proof(const SeqParams& params, SeqCache& cache, std::int64_t N) {
    if (N < 1)
        throw std::invalid_argument("series_R_proof requires N >= 1");
    const RationalSeries f = series_f(params, N + 6);
    // f with its first k odd terms removed, shifted down so the
    // re-indexed sum starts at x^2 or x^3.
    auto tail = [&](int odd_terms_removed, std::int64_t shift) {
        RationalSeries r = f;
        std::vector<std::pair<std::int64_t, Rational>> removed;
        for (int m = 1; m <= odd_terms_removed; ++m)
            removed.emplace_back(2 * m - 1, cache.fib_q(2 * m - 1));
        if (!removed.empty())
            r = r - from_monomials(0, N + 6, removed);
        return finalize_R_coord(r.shifted(shift), N);
    };
    return OctonionSeries{{tail(0, 1), tail(1, 0), tail(1, -1), tail(2, -2), tail(2, -3),
                           tail(3, -4), tail(3, -5), tail(4, -6)}};
}

GenfunReport genfun_check(const SeqParams& params, SeqCache& cache, std::int64_t N) {
    if (N < 2)
        throw std::invalid_argument("genfun_check requires N >= 2");
    const OctonionSeries R = series_R(params, N);
    const std::vector<Rational> den{Rational(1), -params.b, Rational(-1)};
    const RationalSeries den_series = from_monomials(0, N, {{0, Rational(1)}, {1, -params.b}, {2, Rational(-1)}});
    const Rational amb = params.a - params.b;

    GenfunReport report;
    report.pass = true;
    report.reexpansion_ok = true;
    for (int s = 0; s < 8; ++s) {
        const Rational c0 = cache.fib_q(s);
        const Rational c1 = cache.fib_q(s + 1) - params.b * c0;
        const RationalSeries numerator =
            from_monomials(0, N, {{0, c0}, {1, c1}}) + R.coord[static_cast<std::size_t>(s)] * amb;
        const RationalSeries G = numerator.divided_by_unit_poly(den);
        for (std::int64_t n = 0; n <= N; ++n) {
            if (G.coeff(n) != cache.fib_q(n + s)) {
                report.pass = false;
                if (!report.first_mismatch_degree) {
                    report.first_mismatch_degree = n;
                    report.first_mismatch_coordinate = s;
                }
                break;
            }
        }
        if (!(G * den_series == numerator))
            report.reexpansion_ok = false;
    }
    report.pass = report.pass && report.reexpansion_ok;
    return report;
}

} // namespace bpfo
