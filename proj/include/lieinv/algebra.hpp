#pragma once

// Lie algebras given by structure constants, their representations, and the
// vector fields that define invariants.

#include "lieinv/matrix.hpp"

#include <string>
#include <vector>

namespace lieinv {

class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});

    std::size_t dim() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// C_ab^k with 0-based indices.
    const Expr& constant(std::size_t a, std::size_t b, std::size_t k) const { return c_[(a * n_ + b) * n_ + k]; }
    /// Sets C_ab^k = value and C_ba^k = -value.
    void set_constant(std::size_t a, std::size_t b, std::size_t k, const Expr& value);
    /// Coefficients of [e_a, e_b].
    ExprVector bracket(std::size_t a, std::size_t b) const;
    ExprVector bracket(const ExprVector& x, const ExprVector& y) const;

    /// Matrix of ad(e_k): column l holds [e_k, e_l].
    ExprMatrix ad(std::size_t k) const;
    ExprMatrix ad(const ExprVector& x) const;
    /// C_ij(X) = C_ij^k X_k.
    ExprMatrix commutator_matrix(const ExprVector& covector) const;
    ExprMatrix killing_form() const;

    bool is_abelian() const;

private:
    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Expr> c_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks antisymmetry and the Jacobi identity for every index triple.
ValidationReport check_lie_algebra(const LieAlgebra& algebra);

enum class Convention { Plus, Minus };

/// Matrices t_A on V. With Convention::Minus the input satisfies
/// [T_A, T_B] = -C_AB^C T_C and is negated on construction, so matrix()
/// always obeys the plus convention.
class Representation {
public:
    Representation() = default;
    Representation(std::size_t dim, std::vector<ExprMatrix> matrices, Convention convention = Convention::Plus);

    std::size_t dim() const { return dim_; }
    std::size_t algebra_dim() const { return m_.size(); }
    const ExprMatrix& matrix(std::size_t a) const { return m_[a]; }
    const std::vector<ExprMatrix>& matrices() const { return m_; }

private:
    std::size_t dim_ = 0;
    std::vector<ExprMatrix> m_;
};

/// Homomorphism check [T_A, T_B] = C_AB^C T_C; throws
/// Error{DimensionMismatch} for shape errors.
ValidationReport check_representation(const LieAlgebra& algebra, const Representation& rep);

Representation adjoint(const LieAlgebra& algebra);
/// Matrices -ad^T; generators C_Aj^k X_k d/dX_j.
Representation coadjoint(const LieAlgebra& algebra);
/// Matrices -t^T.
Representation dual_representation(const Representation& rep);

struct VectorField {
    std::vector<std::string> coords;
    ExprVector components;

    Expr apply(const Expr& f) const;
    bool is_zero() const;
};

/// [v, w] as derivations.
VectorField commutator(const VectorField& v, const VectorField& w);

/// Names prefix1..prefixN.
std::vector<std::string> coordinate_names(const std::string& prefix, std::size_t n);
std::vector<Expr> symbols(const std::vector<std::string>& names);

/// t_A = -(t_A x)^a d/dx^a on the given coordinates.
std::vector<VectorField> generators(const Representation& rep, const std::vector<std::string>& coords);

/// Maximum rank over three seeded rational points, certified by a
/// symbolically nonzero minor. Throws Error{Decidability} when the
/// certificate fails.
std::size_t generic_rank(const ExprMatrix& m, std::uint64_t seed);

/// dim V minus the generic rank of the matrix -(t_A x)^a.
std::size_t invariant_count(const Representation& rep, std::uint64_t seed);
/// dim minus the generic rank of C_ij(X).
std::size_t index(const LieAlgebra& algebra, std::uint64_t seed);

enum class VerdictKind { Symbolic, NumericOnly, Refuted };
const char* to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind = VerdictKind::Refuted;
    double max_residual = 0;
    NumericPoint witness;  // set when refuted
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 20240917;
    int points = 100;
    double tolerance = 1e-9;
};

/// Annihilation of J by every field: symbolic when all applications
/// normalize to zero, otherwise numeric at seeded points.
Verdict verify_invariant(const std::vector<VectorField>& fields, const Expr& invariant, const VerifyOptions& opts = {});

}  // namespace lieinv
