#include "bpfo/octonion.hpp"

namespace bpfo {

BasisTable basis_table_from_pair_formula() {
    BasisTable tbl{};
    for (std::size_t s = 0; s < 8; ++s) {
        for (std::size_t t = 0; t < 8; ++t) {
            const Octonion<Rational> r =
                oct_mul_pair_formula(Octonion<Rational>::basis(s), Octonion<Rational>::basis(t));
            int found = -1;
            for (std::size_t u = 0; u < 8; ++u) {
                if (!r[u].is_zero()) {
                    // basis products land on exactly one basis element
                    if (found != -1)
                        throw Error("pair formula produced a non-basis product");
                    found = static_cast<int>(u);
                }
            }
            if (found == -1)
                throw Error("pair formula produced zero basis product");
            tbl.index[s][t] = found;
            tbl.sign[s][t] = r[static_cast<std::size_t>(found)] > 0 ? +1 : -1;
        }
    }
    return tbl;
}

} // namespace bpfo
