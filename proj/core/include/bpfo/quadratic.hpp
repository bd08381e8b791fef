#ifndef BPFO_QUADRATIC_HPP
#define BPFO_QUADRATIC_HPP

#include <string>

#include "bpfo/errors.hpp"
#include "bpfo/rational.hpp"

namespace bpfo {

/// Element p + q*sqrt(D) of Q(sqrt(D)). D is fixed per context and is
/// carried by every element; mixing discriminants throws
/// ContextMismatch. sqrt(D) stays symbolic even when D < 0 or D is a
/// perfect square: arithmetic only ever uses (sqrt(D))^2 = D.
class QuadraticElement {
public:
    QuadraticElement(Rational rat, Rational surd, Rational disc)
        : rat_(std::move(rat)), surd_(std::move(surd)), disc_(std::move(disc)) {}

    static QuadraticElement from_rational(Rational r, Rational disc) {
        return {std::move(r), Rational(0), std::move(disc)};
    }

    const Rational& rat_part() const { return rat_; }
    const Rational& surd_part() const { return surd_; }
    const Rational& discriminant() const { return disc_; }

    bool is_zero() const { return rat_.is_zero() && surd_.is_zero(); }
    bool is_rational() const { return surd_.is_zero(); }

    /// rat_part, valid only when surd_part = 0; otherwise
    /// InternalSurdResidue (callers use this to demote provably
    /// rational values).
    Rational to_rational() const {
        if (!surd_.is_zero())
            throw InternalSurdResidue("surd part failed to cancel: " + str());
        return rat_;
    }

    QuadraticElement conj() const { return {rat_, -surd_, disc_}; }

    /// x * conj(x) = rat^2 - surd^2 * D, always a plain rational.
    Rational norm() const { return rat_ * rat_ - surd_ * surd_ * disc_; }

    QuadraticElement inv() const;

    std::string str() const;

    friend QuadraticElement operator+(const QuadraticElement& x, const QuadraticElement& y) {
        check_context(x, y);
        return {x.rat_ + y.rat_, x.surd_ + y.surd_, x.disc_};
    }
    friend QuadraticElement operator-(const QuadraticElement& x, const QuadraticElement& y) {
        check_context(x, y);
        return {x.rat_ - y.rat_, x.surd_ - y.surd_, x.disc_};
    }
    friend QuadraticElement operator-(const QuadraticElement& x) {
        return {-x.rat_, -x.surd_, x.disc_};
    }
    // (p + q sqrt(D))(r + s sqrt(D)) = (pr + qsD) + (ps + qr) sqrt(D)
    friend QuadraticElement operator*(const QuadraticElement& x, const QuadraticElement& y) {
        check_context(x, y);
        return {x.rat_ * y.rat_ + x.surd_ * y.surd_ * x.disc_,
                x.rat_ * y.surd_ + x.surd_ * y.rat_, x.disc_};
    }
    friend QuadraticElement operator*(const QuadraticElement& x, const Rational& s) {
        return {x.rat_ * s, x.surd_ * s, x.disc_};
    }
    friend QuadraticElement operator*(const Rational& s, const QuadraticElement& x) {
        return x * s;
    }
    friend bool operator==(const QuadraticElement& x, const QuadraticElement& y) {
        check_context(x, y);
        return x.rat_ == y.rat_ && x.surd_ == y.surd_;
    }

private:
    static void check_context(const QuadraticElement& x, const QuadraticElement& y) {
        if (x.disc_ != y.disc_)
            throw ContextMismatch("quadratic elements from different contexts");
    }

    Rational rat_;
    Rational surd_;
    Rational disc_;
};

inline QuadraticElement quad_mul(const QuadraticElement& x, const QuadraticElement& y) {
    return x * y;
}

/// x^n by binary exponentiation, n >= 0; x^0 = 1.
QuadraticElement quad_pow(const QuadraticElement& x, unsigned long n);

inline QuadraticElement quad_inv(const QuadraticElement& x) { return x.inv(); }

inline QuadraticElement zero_like(const QuadraticElement& x) {
    return QuadraticElement::from_rational(Rational(0), x.discriminant());
}
inline QuadraticElement one_like(const QuadraticElement& x) {
    return QuadraticElement::from_rational(Rational(1), x.discriminant());
}
inline QuadraticElement field_inv(const QuadraticElement& x) { return x.inv(); }

/// The (a, b) context: D = a^2 b^2 + 4ab and the characteristic roots
/// alpha = (ab + sqrt(D))/2, beta = (ab - sqrt(D))/2 of
/// lambda^2 - ab*lambda - ab = 0. D = 0 (ab = -4) is allowed here;
/// Binet-dependent operations reject it.
struct SeqParams {
    Rational a;
    Rational b;
    Rational ab;      // a*b, cached
    Rational D;       // a^2 b^2 + 4ab
    QuadraticElement alpha;
    QuadraticElement beta;

    bool degenerate() const { return D.is_zero(); }

    void require_nondegenerate() const {
        if (degenerate())
            throw DegenerateDiscriminant("D = 0 (ab = -4): Binet form undefined");
    }
};

SeqParams make_context(const Rational& a, const Rational& b);

} // namespace bpfo

#endif
