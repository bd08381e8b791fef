#include "bpfo/octonion_seq.hpp"

#include <stdexcept>

namespace bpfo {

namespace {

QuadraticElement embed(const Rational& r, const SeqParams& params) {
    return QuadraticElement::from_rational(r, params.D);
}

OctE scale_sub(const OctE& x, const QuadraticElement& sx, const OctE& y,
               const QuadraticElement& sy) {
    return x * sx - y * sy;
}

} // namespace

OctQ demote(const OctE& p) {
    std::array<Rational, 8> r{p[0].to_rational(), p[1].to_rational(), p[2].to_rational(),
                              p[3].to_rational(), p[4].to_rational(), p[5].to_rational(),
                              p[6].to_rational(), p[7].to_rational()};
    return OctQ(std::move(r));
}

BinetConstants make_binet_constants(const SeqParams& params) {
    params.require_nondegenerate();
    std::array<QuadraticElement, 8> as{embed(0, params), embed(0, params), embed(0, params),
                                       embed(0, params), embed(0, params), embed(0, params),
                                       embed(0, params), embed(0, params)};
    auto bs = as, ad = as, bd = as;
    QuadraticElement apow = embed(1, params), bpow = embed(1, params);
    for (std::size_t t = 0; t < 8; ++t) {
        const auto n = static_cast<std::int64_t>(t);
        const Rational pre_star =
            rational_pow(params.a, xi(n + 1)) * rational_pow(params.ab, -(n / 2));
        const Rational pre_dstar =
            rational_pow(params.a, xi(n)) * rational_pow(params.ab, -((n + 1) / 2));
        as[t] = apow * pre_star;
        bs[t] = bpow * pre_star;
        ad[t] = apow * pre_dstar;
        bd[t] = bpow * pre_dstar;
        apow = apow * params.alpha;
        bpow = bpow * params.beta;
    }
    return BinetConstants{OctE(std::move(as)), OctE(std::move(bs)), OctE(std::move(ad)),
                          OctE(std::move(bd))};
}

OctQ oct_O(SeqCache& cache, std::int64_t n) {
    std::array<Rational, 8> c{cache.fib_q(n),     cache.fib_q(n + 1), cache.fib_q(n + 2),
                              cache.fib_q(n + 3), cache.fib_q(n + 4), cache.fib_q(n + 5),
                              cache.fib_q(n + 6), cache.fib_q(n + 7)};
    return OctQ(std::move(c));
}

OctQ oct_binet(const BinetConstants& constants, const SeqParams& params, std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("oct_binet requires n >= 0");
    params.require_nondegenerate();
    const auto un = static_cast<unsigned long>(n);
    const QuadraticElement an = quad_pow(params.alpha, un);
    const QuadraticElement bn = quad_pow(params.beta, un);
    const OctE num = (xi(n) == 0) ? scale_sub(constants.alpha_star, an, constants.beta_star, bn)
                                  : scale_sub(constants.alpha_dstar, an, constants.beta_dstar, bn);
    const QuadraticElement den =
        embed(rational_pow(params.ab, n / 2), params) * (params.alpha - params.beta);
    return demote(scalar_div(num, den));
}

namespace {

// Shared Catalan right-hand side: [XY((ab)^k - beta^{2k}) + YX((ab)^k - alpha^{2k})] / d.
OctQ catalan_rhs(const OctE& x, const OctE& y, const SeqParams& params, std::int64_t k,
                 const QuadraticElement& den, bool negate) {
    const QuadraticElement abk = QuadraticElement::from_rational(rational_pow(params.ab, k), params.D);
    const QuadraticElement a2k = quad_pow(params.alpha, static_cast<unsigned long>(2 * k));
    const QuadraticElement b2k = quad_pow(params.beta, static_cast<unsigned long>(2 * k));
    OctE num = (x * y) * (abk - b2k) + (y * x) * (abk - a2k);
    if (negate)
        num = -num;
    return demote(scalar_div(num, den));
}

} // namespace

OctQ catalan_even(const BinetConstants& constants, const SeqParams& params, std::int64_t n,
                  std::int64_t r) {
    if (r < 1 || n < r)
        throw std::invalid_argument("catalan_even requires n >= r >= 1");
    params.require_nondegenerate();
    // denominator (ab)^{2r} (alpha - beta)^2 = (ab)^{2r} D
    const QuadraticElement den =
        embed(rational_pow(params.ab, 2 * r) * params.D, params);
    return catalan_rhs(constants.alpha_star, constants.beta_star, params, 2 * r, den, false);
}

OctQ catalan_general(const BinetConstants& constants, const SeqParams& params, std::int64_t n,
                     std::int64_t r) {
    if (r < 2 || r % 2 != 0 || n < r)
        throw std::invalid_argument("catalan_general requires even r and n >= r >= 2");
    params.require_nondegenerate();
    if (xi(n) == 0) {
        const QuadraticElement den = embed(rational_pow(params.ab, r) * params.D, params);
        return catalan_rhs(constants.alpha_star, constants.beta_star, params, r, den, false);
    }
    const QuadraticElement den = embed(rational_pow(params.ab, r - 1) * params.D, params);
    return catalan_rhs(constants.alpha_dstar, constants.beta_dstar, params, r, den, true);
}

OctQ sum_all(const BinetConstants& constants, SeqCache& cache, std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("sum_all requires n >= 1");
    const SeqParams& params = cache.params();
    params.require_nondegenerate();
    const Rational inv_ab = rational_inv(params.ab);
    const OctQ head =
        (oct_O(cache, n + 1) + oct_O(cache, n) - oct_O(cache, n - 1) - oct_O(cache, n - 2)) *
        inv_ab;
    const QuadraticElement ab = embed(params.ab, params);
    const OctE num = constants.alpha_star * params.beta - constants.beta_star * params.alpha -
                     constants.alpha_dstar * ab + constants.beta_dstar * ab;
    const QuadraticElement den = ab * (params.alpha - params.beta);
    return head + demote(scalar_div(num, den));
}

OctQ sum_even(const BinetConstants& constants, SeqCache& cache, std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("sum_even requires n >= 1");
    const SeqParams& params = cache.params();
    params.require_nondegenerate();
    const Rational inv_ab = rational_inv(params.ab);
    const OctQ head = (oct_O(cache, 2 * n) - oct_O(cache, 2 * n - 2)) * inv_ab;
    const OctE num = constants.alpha_star * params.beta - constants.beta_star * params.alpha;
    const QuadraticElement den = embed(params.ab, params) * (params.alpha - params.beta);
    return head + demote(scalar_div(num, den));
}

OctQ sum_odd(const BinetConstants& constants, SeqCache& cache, std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("sum_odd requires n >= 1");
    const SeqParams& params = cache.params();
    params.require_nondegenerate();
    const Rational inv_ab = rational_inv(params.ab);
    const OctQ head = (oct_O(cache, 2 * n + 1) - oct_O(cache, 2 * n - 1)) * inv_ab;
    const OctE num = constants.alpha_dstar - constants.beta_dstar;
    return head - demote(scalar_div(num, params.alpha - params.beta));
}

} // namespace bpfo
