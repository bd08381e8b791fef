#ifndef BPFO_SERIES_HPP
#define BPFO_SERIES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bpfo/biperiodic.hpp"
#include "bpfo/errors.hpp"
#include "bpfo/rational.hpp"

namespace bpfo {

/// Truncated Laurent series: dense coefficients from min_degree (may be
/// negative) up to an inclusive truncation order. Arithmetic is exact
/// on every coefficient inside the window; the window shrinks under
/// multiplication so no coefficient is ever reported beyond what the
/// operands determine.
template <typename F>
class LaurentSeries {
public:
    LaurentSeries(std::int64_t min_degree, std::int64_t order, std::vector<F> coeffs)
        : min_(min_degree), order_(order), c_(std::move(coeffs)) {
        if (order_ < min_ || c_.size() != static_cast<std::size_t>(order_ - min_ + 1))
            throw Error("laurent series: coefficient count does not match window");
    }

    static LaurentSeries zero(std::int64_t order) {
        return LaurentSeries(0, order, std::vector<F>(static_cast<std::size_t>(order) + 1, F(0)));
    }

    std::int64_t min_degree() const { return min_; }
    std::int64_t order() const { return order_; }

    /// Coefficient of x^d; zero below the window, error above it.
    const F& coeff(std::int64_t d) const {
        static const F kZero(0);
        if (d < min_)
            return kZero;
        if (d > order_)
            throw Error("laurent series: coefficient beyond truncation order");
        return c_[static_cast<std::size_t>(d - min_)];
    }

    /// Multiplication by x^k.
    LaurentSeries shifted(std::int64_t k) const { return LaurentSeries(min_ + k, order_ + k, c_); }

    /// Lowers the truncation order (coefficients above it are dropped).
    LaurentSeries truncated(std::int64_t new_order) const {
        if (new_order >= order_)
            return *this;
        if (new_order < min_)
            throw Error("laurent series: truncation below min_degree");
        return LaurentSeries(
            min_, new_order,
            std::vector<F>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(new_order - min_ + 1)));
    }

    /// Drops leading zero coefficients, never past degree 0. Used after
    /// principal-part checks to re-anchor a power series at 0.
    LaurentSeries trimmed_to(std::int64_t new_min) const {
        if (new_min < min_)
            return LaurentSeries(new_min, order_,
                                 pad_front(c_, static_cast<std::size_t>(min_ - new_min)));
        for (std::int64_t d = min_; d < new_min; ++d)
            if (!coeff(d).is_zero())
                throw Error("laurent series: trimming a nonzero coefficient");
        return LaurentSeries(new_min, order_,
                             std::vector<F>(c_.begin() + static_cast<std::ptrdiff_t>(new_min - min_),
                                            c_.end()));
    }

    bool principal_part_zero() const {
        for (std::int64_t d = min_; d < 0 && d <= order_; ++d)
            if (!coeff(d).is_zero())
                return false;
        return true;
    }

    friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
        return combine(f, g, [](const F& x, const F& y) { return x + y; });
    }
    friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) {
        return combine(f, g, [](const F& x, const F& y) { return x - y; });
    }

    friend LaurentSeries operator*(const LaurentSeries& f, const F& s) {
        std::vector<F> r = f.c_;
        for (F& x : r)
            x *= s;
        return LaurentSeries(f.min_, f.order_, std::move(r));
    }

    // Cauchy product; the window is cut to what the truncated operands
    // determine: order = min(f.order + g.min, g.order + f.min).
    friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
        const std::int64_t min = f.min_ + g.min_;
        const std::int64_t order = std::min(f.order_ + g.min_, g.order_ + f.min_);
        std::vector<F> r(static_cast<std::size_t>(order - min + 1), F(0));
        for (std::int64_t i = f.min_; i <= f.order_; ++i) {
            if (f.coeff(i).is_zero())
                continue;
            for (std::int64_t j = g.min_; j <= g.order_ && i + j <= order; ++j)
                r[static_cast<std::size_t>(i + j - min)] += f.coeff(i) * g.coeff(j);
        }
        return LaurentSeries(min, order, std::move(r));
    }

    friend bool operator==(const LaurentSeries& f, const LaurentSeries& g) {
        const std::int64_t lo = std::min(f.min_, g.min_);
        const std::int64_t hi = std::min(f.order_, g.order_);
        for (std::int64_t d = lo; d <= hi; ++d)
            if (!(f.coeff(d) == g.coeff(d)))
                return false;
        return true;
    }

    /// Division by an exact polynomial d_0 + d_1 x + ... with invertible
    /// d_0 (1 - bx - x^2 in every use here). Quotient coefficients are
    /// valid over the numerator's whole window.
    LaurentSeries divided_by_unit_poly(const std::vector<F>& den) const {
        if (den.empty() || den[0].is_zero())
            throw DivisionByZero("series division requires a unit constant term");
        const F inv0 = field_inv(den[0]);
        std::vector<F> q(c_.size(), F(0));
        for (std::size_t n = 0; n < c_.size(); ++n) {
            F acc = c_[n];
            for (std::size_t k = 1; k < den.size() && k <= n; ++k)
                acc -= den[k] * q[n - k];
            q[n] = acc * inv0;
        }
        return LaurentSeries(min_, order_, std::move(q));
    }

private:
    template <typename Fn>
    static LaurentSeries combine(const LaurentSeries& f, const LaurentSeries& g, Fn&& fn) {
        const std::int64_t min = std::min(f.min_, g.min_);
        const std::int64_t order = std::min(f.order_, g.order_);
        std::vector<F> r;
        r.reserve(static_cast<std::size_t>(order - min + 1));
        for (std::int64_t d = min; d <= order; ++d)
            r.push_back(fn(f.coeff(d), g.coeff(d)));
        return LaurentSeries(min, order, std::move(r));
    }

    static std::vector<F> pad_front(const std::vector<F>& c, std::size_t k) {
        std::vector<F> r(k, F(0));
        r.insert(r.end(), c.begin(), c.end());
        return r;
    }

    std::int64_t min_;
    std::int64_t order_;
    std::vector<F> c_;
};

using RationalSeries = LaurentSeries<Rational>;

/// Octonion-valued series as 8 scalar coordinate series; octonion
/// multiplication never occurs inside series arithmetic.
struct OctonionSeries {
    std::array<RationalSeries, 8> coord;
};

/// f(x) = (x - x^3) / (1 - (ab+2)x^2 + x^4) expanded to order N.
/// Coefficient of x^{2m-1} is q_{2m-1}; even coefficients vanish.
RationalSeries series_f(const SeqParams& params, std::int64_t N);

/// L1(x) = a(x + x^3) / (1 - (ab+2)x^2 + x^4): the odd-subscript Lucas
/// generating function. Coefficient of x^{2m+1} is l_{2m+1}.
RationalSeries series_L1(const SeqParams& params, std::int64_t N);

/// The correction series R(x) of the octonion generating function,
/// assembled term-by-term from the published display (literal
/// subtracted polynomials with q_3 = ab+1, q_5 = a^2b^2+3ab+1,
/// q_7 = a^3b^3+5a^2b^2+6ab+1). After the cancellations the principal
/// part is identically zero (else PrincipalPartResidue) and the result
/// is re-anchored at degree 0; the lowest surviving degree is 2.
OctonionSeries series_R(const SeqParams& params, std::int64_t N);

/// Second assembly route from the proof's truncated x^{-k} f(x) sums,
/// with the subtracted q-coefficients taken from the recurrence. Used
/// to localize transcription typos: must equal series_R exactly.
OctonionSeries series_R_proof(const SeqParams& params, SeqCache& cache, std::int64_t N);

struct GenfunReport {
    bool pass = false;
    bool reexpansion_ok = false; // (1 - bx - x^2) G == numerator
    std::optional<std::int64_t> first_mismatch_degree;
    std::optional<int> first_mismatch_coordinate;
};

/// Expands G(x) = [O_0 + x(O_1 - b O_0) + (a-b) R(x)] / (1 - bx - x^2)
/// and compares coefficient n against O_n for 0 <= n <= N; also
/// re-expands (1 - bx - x^2) G against the numerator.
GenfunReport genfun_check(const SeqParams& params, SeqCache& cache, std::int64_t N);

} // namespace bpfo

#endif
