#ifndef BPFO_OCTONION_HPP
#define BPFO_OCTONION_HPP

#include <array>
#include <concepts>
#include <cstddef>
#include <utility>

#include "bpfo/errors.hpp"
#include "bpfo/rational.hpp"

namespace bpfo {

/// Quaternion over a generic coefficient field F, with the standard
/// relations i^2 = j^2 = k^2 = -1, ijk = -1. Used by the pair-formula
/// route of octonion multiplication; the production route uses the
/// frozen basis table below.
template <typename F>
struct Quaternion {
    std::array<F, 4> c;

    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {{p.c[0] + q.c[0], p.c[1] + q.c[1], p.c[2] + q.c[2], p.c[3] + q.c[3]}};
    }
    friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
        return {{p.c[0] - q.c[0], p.c[1] - q.c[1], p.c[2] - q.c[2], p.c[3] - q.c[3]}};
    }
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {{p.c[0] * q.c[0] - p.c[1] * q.c[1] - p.c[2] * q.c[2] - p.c[3] * q.c[3],
                 p.c[0] * q.c[1] + p.c[1] * q.c[0] + p.c[2] * q.c[3] - p.c[3] * q.c[2],
                 p.c[0] * q.c[2] - p.c[1] * q.c[3] + p.c[2] * q.c[0] + p.c[3] * q.c[1],
                 p.c[0] * q.c[3] + p.c[1] * q.c[2] - p.c[2] * q.c[1] + p.c[3] * q.c[0]}};
    }

    Quaternion conj() const { return {{c[0], -c[1], -c[2], -c[3]}}; }
};

/// Signed basis product table for e_s * e_t = sign * e_index, frozen
/// from the Cayley-Dickson pair formula
///   pq = p'q' - conj(q'')p'' + (q''p' + p''conj(q'))e
/// on the basis 1, i, j, k, e, ie, je, ke. basis_table_from_pair_formula()
/// regenerates it for the golden-table test.
struct BasisTable {
    std::array<std::array<int, 8>, 8> index;
    std::array<std::array<int, 8>, 8> sign;
};

inline constexpr BasisTable kBasisTable = {
    {{{0, 1, 2, 3, 4, 5, 6, 7},
      {1, 0, 3, 2, 5, 4, 7, 6},
      {2, 3, 0, 1, 6, 7, 4, 5},
      {3, 2, 1, 0, 7, 6, 5, 4},
      {4, 5, 6, 7, 0, 1, 2, 3},
      {5, 4, 7, 6, 1, 0, 3, 2},
      {6, 7, 4, 5, 2, 3, 0, 1},
      {7, 6, 5, 4, 3, 2, 1, 0}}},
    {{{+1, +1, +1, +1, +1, +1, +1, +1},
      {+1, -1, +1, -1, +1, -1, -1, +1},
      {+1, -1, -1, +1, +1, +1, -1, -1},
      {+1, +1, -1, -1, +1, -1, +1, -1},
      {+1, -1, -1, -1, -1, +1, +1, +1},
      {+1, +1, -1, +1, -1, -1, -1, +1},
      {+1, +1, +1, -1, -1, +1, -1, -1},
      {+1, -1, +1, +1, -1, -1, +1, -1}}}};

BasisTable basis_table_from_pair_formula();

/// Octonion with coordinates on e0..e7 = 1, i, j, k, e, ie, je, ke over
/// a coefficient field F (Rational or QuadraticElement). Values are
/// immutable in practice: every operation returns a fresh value.
template <typename F>
class Octonion {
public:
    explicit Octonion(std::array<F, 8> coords) : c_(std::move(coords)) {}

    const F& operator[](std::size_t s) const { return c_[s]; }
    const std::array<F, 8>& coords() const { return c_; }

    static Octonion zero_like_octonion(const F& model) {
        return Octonion(std::array<F, 8>{zero_like(model), zero_like(model), zero_like(model),
                                         zero_like(model), zero_like(model), zero_like(model),
                                         zero_like(model), zero_like(model)});
    }

    /// e_s over Rational coordinates.
    static Octonion basis(std::size_t s)
        requires std::same_as<F, Rational>
    {
        std::array<F, 8> v{};
        v[s] = Rational(1);
        return Octonion(std::move(v));
    }

    friend Octonion operator+(const Octonion& p, const Octonion& q) {
        std::array<F, 8> r{map2(p, q, [](const F& x, const F& y) { return x + y; })};
        return Octonion(std::move(r));
    }
    friend Octonion operator-(const Octonion& p, const Octonion& q) {
        std::array<F, 8> r{map2(p, q, [](const F& x, const F& y) { return x - y; })};
        return Octonion(std::move(r));
    }
    friend Octonion operator-(const Octonion& p) {
        return Octonion::zero_like_octonion(p.c_[0]) - p;
    }

    // O(64) coordinate products via the frozen signed table.
    friend Octonion operator*(const Octonion& p, const Octonion& q) {
        Octonion r = zero_like_octonion(p.c_[0]);
        for (std::size_t s = 0; s < 8; ++s)
            for (std::size_t t = 0; t < 8; ++t) {
                const F term = p.c_[s] * q.c_[t];
                const int u = kBasisTable.index[s][t];
                if (kBasisTable.sign[s][t] > 0)
                    r.c_[u] = r.c_[u] + term;
                else
                    r.c_[u] = r.c_[u] - term;
            }
        return r;
    }

    friend Octonion operator*(const Octonion& p, const F& s) {
        std::array<F, 8> r{map1(p, [&](const F& x) { return x * s; })};
        return Octonion(std::move(r));
    }
    friend Octonion operator*(const F& s, const Octonion& p) { return p * s; }

    friend bool operator==(const Octonion& p, const Octonion& q) {
        for (std::size_t s = 0; s < 8; ++s)
            if (!(p.c_[s] == q.c_[s]))
                return false;
        return true;
    }

private:
    template <typename Fn>
    static std::array<F, 8> map1(const Octonion& p, Fn&& fn) {
        return {fn(p.c_[0]), fn(p.c_[1]), fn(p.c_[2]), fn(p.c_[3]),
                fn(p.c_[4]), fn(p.c_[5]), fn(p.c_[6]), fn(p.c_[7])};
    }
    template <typename Fn>
    static std::array<F, 8> map2(const Octonion& p, const Octonion& q, Fn&& fn) {
        return {fn(p.c_[0], q.c_[0]), fn(p.c_[1], q.c_[1]), fn(p.c_[2], q.c_[2]),
                fn(p.c_[3], q.c_[3]), fn(p.c_[4], q.c_[4]), fn(p.c_[5], q.c_[5]),
                fn(p.c_[6], q.c_[6]), fn(p.c_[7], q.c_[7])};
    }

    std::array<F, 8> c_;
};

template <typename F>
Octonion<F> oct_mul(const Octonion<F>& p, const Octonion<F>& q) {
    return p * q;
}

/// conj(p) = Re(p) - Im(p): c0 kept, c1..c7 negated.
template <typename F>
Octonion<F> oct_conj(const Octonion<F>& p) {
    std::array<F, 8> r{p[0], -p[1], -p[2], -p[3], -p[4], -p[5], -p[6], -p[7]};
    return Octonion<F>(std::move(r));
}

/// p * conj(p) = sum of coordinate squares, a scalar.
template <typename F>
F oct_norm(const Octonion<F>& p) {
    F n = p[0] * p[0];
    for (std::size_t s = 1; s < 8; ++s)
        n = n + p[s] * p[s];
    return n;
}

/// Coordinate-wise division by an invertible scalar of F.
template <typename F>
Octonion<F> scalar_div(const Octonion<F>& p, const F& s) {
    return p * field_inv(s);
}

/// Cayley-Dickson pair-formula multiplication, kept as the independent
/// route the golden-table test checks the frozen table against.
template <typename F>
Octonion<F> oct_mul_pair_formula(const Octonion<F>& p, const Octonion<F>& q) {
    Quaternion<F> p1{{p[0], p[1], p[2], p[3]}}, p2{{p[4], p[5], p[6], p[7]}};
    Quaternion<F> q1{{q[0], q[1], q[2], q[3]}}, q2{{q[4], q[5], q[6], q[7]}};
    const Quaternion<F> lo = p1 * q1 - q2.conj() * p2;
    const Quaternion<F> hi = q2 * p1 + p2 * q1.conj();
    return Octonion<F>({lo.c[0], lo.c[1], lo.c[2], lo.c[3], hi.c[0], hi.c[1], hi.c[2], hi.c[3]});
}

} // namespace bpfo

#endif
