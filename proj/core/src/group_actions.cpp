#include "cycinv/group_actions.hpp"

namespace cycinv {

SquareMatrix<Rational> cyclic_shift_matrix(int d) {
    if (d < 2) throw std::domain_error("cyclic_shift_matrix: order must be at least 2");
    SquareMatrix<Rational> m(d);
    for (int i = 0; i < d; ++i) m.at(i, (i + 1) % d) = Rational(1);
    return m;
}

FiniteMatrixGroup<Rational> cyclic_group(int d, const Caps& caps) {
    return FiniteMatrixGroup<Rational>::from_generators({cyclic_shift_matrix(d)}, caps);
}

FiniteMatrixGroup<Rational> trivial_group(int d, const Caps& caps) {
    return FiniteMatrixGroup<Rational>::from_generators({SquareMatrix<Rational>::identity(d)},
                                                        caps);
}

FiniteMatrixGroup<CycNumber> diagonal_cyclic_group(int d, const Caps& caps) {
    if (d < 2) throw std::domain_error("diagonal_cyclic_group: order must be at least 2");
    SquareMatrix<CycNumber> g(d);
    for (int k = 0; k < d; ++k) g.at(k, k) = CycNumber::root_power(d, k);
    return FiniteMatrixGroup<CycNumber>::from_generators({g}, caps);
}

BasisChange x_to_y_basis_change(int d) {
    if (d < 2) throw std::domain_error("x_to_y_basis_change: order must be at least 2");
    SquareMatrix<CycNumber> to_x(d);
    SquareMatrix<CycNumber> to_y(d);
    const CycNumber inv_d = CycNumber(Rational(1, d));
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) {
            to_x.at(k, j) = CycNumber::root_power(d, -static_cast<long>(k) * j);
            to_y.at(j, k) = CycNumber::root_power(d, static_cast<long>(k) * j) * inv_d;
        }
    return {std::move(to_x), std::move(to_y)};
}

}  // namespace cycinv
