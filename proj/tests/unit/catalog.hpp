#pragma once

// Hand-entered algebras and representations shared by the unit tests.

#include "lieinv/algebra.hpp"

#include <tuple>

namespace catalog {

using lieinv::Expr;
using lieinv::ExprMatrix;
using lieinv::LieAlgebra;
using lieinv::Representation;

// 1-based (a, b, k, coefficient) entries of [e_a, e_b].
inline LieAlgebra make(std::size_t dim, std::initializer_list<std::tuple<int, int, int, int>> brackets) {
    LieAlgebra L(dim);
    for (const auto& [a, b, k, c] : brackets) {
        const auto i = static_cast<std::size_t>(a - 1), j = static_cast<std::size_t>(b - 1),
                   r = static_cast<std::size_t>(k - 1);
        L.set_constant(i, j, r, L.constant(i, j, r) + Expr(c));
    }
    return L;
}

inline ExprMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<lieinv::ExprVector> out;
    for (const auto& r : rows) {
        lieinv::ExprVector v;
        for (int x : r) v.push_back(Expr(x));
        out.push_back(v);
    }
    return ExprMatrix::from_rows(out);
}

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

inline LieAlgebra heisenberg() { return make(3, {{1, 2, 3, 1}}); }

inline LieAlgebra worked_base() { return make(4, {{1, 4, 1, 1}, {1, 4, 2, 1}, {2, 4, 2, 1}, {3, 4, 3, 1}}); }

inline Representation worked_rep() {
    return Representation(4, {mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {-1, -1, 0, 0}}),
                              mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, -1, 0, 0}}),
                              mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}}),
                              mat({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}})});
}

inline LieAlgebra oscillator_base() { return make(4, {{2, 3, 1, 1}, {2, 4, 3, 1}, {3, 4, 2, -1}}); }

inline Representation oscillator_rep() {
    return Representation(4, {mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                              mat({{0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}),
                              mat({{0, -1, 0, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                              mat({{0, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}})});
}

// [h,e] = 2e, [h,f] = -2f, [e,f] = h with basis (h, e, f).
inline LieAlgebra sl2() { return make(3, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}}); }

inline LieAlgebra so3() { return make(3, {{1, 2, 3, 1}, {2, 3, 1, 1}, {3, 1, 2, 1}}); }

// sl2 on e1..e3 plus Heisenberg on e4..e6.
inline LieAlgebra sl2_plus_heisenberg() {
    return make(6, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}, {4, 5, 6, 1}});
}

}  // namespace catalog
