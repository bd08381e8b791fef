#ifndef BPFO_BIPERIODIC_HPP
#define BPFO_BIPERIODIC_HPP

#include <cstdint>
#include <vector>

#include "bpfo/quadratic.hpp"

namespace bpfo {

/// Parity indicator: 0 for even n, 1 for odd n (any sign).
inline int xi(std::int64_t n) { return static_cast<int>(((n % 2) + 2) % 2); }

/// Memoized bi-periodic Fibonacci q_n and Lucas l_n values.
///
///   q_0 = 0, q_1 = 1,  q_n = a q_{n-1} + q_{n-2}  (n even)
///                      q_n = b q_{n-1} + q_{n-2}  (n odd)
///   l_0 = 2, l_1 = a,  l_n = b l_{n-1} + l_{n-2}  (n even)
///                      l_n = a l_{n-1} + l_{n-2}  (n odd)
///
/// Negative indices go through the sign laws q_{-n} = (-1)^{n-1} q_n
/// and l_{-n} = (-1)^n l_n. Single-writer: extending the memo is not
/// thread-safe; reads of already-computed prefixes are.
class SeqCache {
public:
    explicit SeqCache(SeqParams params);

    const SeqParams& params() const { return params_; }

    Rational fib_q(std::int64_t n);
    Rational lucas_l(std::int64_t n);

private:
    void extend_q(std::size_t upto);
    void extend_l(std::size_t upto);

    SeqParams params_;
    std::vector<Rational> q_; // q_0, q_1, ...
    std::vector<Rational> l_;
};

/// q_n via Eq-style Binet evaluation in Q(sqrt(D)):
///   q_n = a^{1-xi(n)} / (ab)^{floor(n/2)} * (alpha^n - beta^n)/(alpha - beta).
/// n >= 0; degenerate D = 0 rejected. The surd part provably cancels;
/// a residue raises InternalSurdResidue.
Rational fib_binet(const SeqParams& params, std::int64_t n);

/// l_n = a^{xi(n)} / (ab)^{floor((n+1)/2)} * (alpha^n + beta^n), n >= 0.
Rational lucas_binet(const SeqParams& params, std::int64_t n);

} // namespace bpfo

#endif
