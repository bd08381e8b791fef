#include "bpfo/quadratic.hpp"

namespace bpfo {

QuadraticElement QuadraticElement::inv() const {
    if (is_zero())
        throw DivisionByZero("cannot invert zero quadratic element");
    const Rational n = norm();
    // Nonzero element of zero norm happens when D is a perfect square,
    // e.g. sqrt(D) - d with D = d^2.
    if (n.is_zero())
        throw NormZero("nonzero element with zero norm: " + str());
    return {rat_ / n, -surd_ / n, disc_};
}

std::string QuadraticElement::str() const {
    if (surd_.is_zero())
        return to_string(rat_);
    std::string s = to_string(rat_) + " + (" + to_string(surd_) + ")*sqrt(" +
                    to_string(disc_) + ")";
    return s;
}

QuadraticElement quad_pow(const QuadraticElement& x, unsigned long n) {
    QuadraticElement acc = one_like(x);
    QuadraticElement base = x;
    while (n) {
        if (n & 1)
            acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

SeqParams make_context(const Rational& a, const Rational& b) {
    if (a.is_zero())
        throw ZeroParameter("parameter a must be nonzero");
    if (b.is_zero())
        throw ZeroParameter("parameter b must be nonzero");
    const Rational ab = a * b;
    const Rational D = ab * ab + 4 * ab;
    const Rational half(1, 2);
    QuadraticElement alpha(ab * half, half, D);
    QuadraticElement beta(ab * half, -half, D);
    return SeqParams{a, b, ab, D, std::move(alpha), std::move(beta)};
}

} // namespace bpfo
