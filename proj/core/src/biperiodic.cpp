#include "bpfo/biperiodic.hpp"

#include <stdexcept>

namespace bpfo {

SeqCache::SeqCache(SeqParams params) : params_(std::move(params)) {
    q_ = {Rational(0), Rational(1)};
    l_ = {Rational(2), params_.a};
}

void SeqCache::extend_q(std::size_t upto) {
    for (std::size_t n = q_.size(); n <= upto; ++n) {
        const Rational& m = (n % 2 == 0) ? params_.a : params_.b;
        q_.push_back(m * q_[n - 1] + q_[n - 2]);
    }
}

void SeqCache::extend_l(std::size_t upto) {
    for (std::size_t n = l_.size(); n <= upto; ++n) {
        const Rational& m = (n % 2 == 0) ? params_.b : params_.a;
        l_.push_back(m * l_[n - 1] + l_[n - 2]);
    }
}

Rational SeqCache::fib_q(std::int64_t n) {
    if (n < 0) {
        // q_{-n} = (-1)^{n-1} q_n
        const Rational v = fib_q(-n);
        return (xi(-n) == 1) ? v : -v;
    }
    extend_q(static_cast<std::size_t>(n));
    return q_[static_cast<std::size_t>(n)];
}

Rational SeqCache::lucas_l(std::int64_t n) {
    if (n < 0) {
        // l_{-n} = (-1)^n l_n
        const Rational v = lucas_l(-n);
        return (xi(-n) == 0) ? v : -v;
    }
    extend_l(static_cast<std::size_t>(n));
    return l_[static_cast<std::size_t>(n)];
}

Rational fib_binet(const SeqParams& params, std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("fib_binet requires n >= 0");
    params.require_nondegenerate();
    const auto un = static_cast<unsigned long>(n);
    const QuadraticElement num = quad_pow(params.alpha, un) - quad_pow(params.beta, un);
    const QuadraticElement ratio = num * quad_inv(params.alpha - params.beta);
    const Rational pre =
        rational_pow(params.a, 1 - xi(n)) * rational_pow(params.ab, -(n / 2));
    return (ratio * pre).to_rational();
}

Rational lucas_binet(const SeqParams& params, std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("lucas_binet requires n >= 0");
    params.require_nondegenerate();
    const auto un = static_cast<unsigned long>(n);
    const QuadraticElement sum = quad_pow(params.alpha, un) + quad_pow(params.beta, un);
    const Rational pre = rational_pow(params.a, xi(n)) * rational_pow(params.ab, -((n + 1) / 2));
    return (sum * pre).to_rational();
}

} // namespace bpfo
