#pragma once

// Semidirect sum of an algebra with the dual of a representation space.

#include "lieinv/algebra.hpp"

namespace lieinv {

struct ExtendedAlgebra {
    LieAlgebra result;
    std::size_t base_dim = 0;
    std::size_t rep_dim = 0;

    /// Index in the extended basis of the a-th vector of V* (0-based).
    std::size_t rep_index(std::size_t a) const { return base_dim + a; }
    bool is_rep_index(std::size_t i) const { return i >= base_dim; }
};

/// Base vectors first, then V*; [e_A, E^a] = -t_A[a][b] E^b, [E^a, E^b] = 0.
/// Throws Error{Validation} when the representation is not a homomorphism.
ExtendedAlgebra extend(const LieAlgebra& algebra, const Representation& rep);

}  // namespace lieinv
