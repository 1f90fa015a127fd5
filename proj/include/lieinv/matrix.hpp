#pragma once

#include "lieinv/expr.hpp"
#include "lieinv/probe.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace lieinv {

using ExprVector = std::vector<Expr>;

class ExprMatrix {
public:
    ExprMatrix() = default;
    ExprMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExprMatrix identity(std::size_t n);
    static ExprMatrix from_rows(const std::vector<ExprVector>& rows);
    static ExprMatrix from_columns(const std::vector<ExprVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Expr& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Expr& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExprVector row(std::size_t r) const;
    ExprVector column(std::size_t c) const;
    ExprMatrix transpose() const;
    ExprMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    ExprMatrix map(const std::function<Expr(const Expr&)>& f) const;
    bool is_zero() const;

    friend bool operator==(const ExprMatrix& a, const ExprMatrix& b);
    friend ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b);
    friend ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b);
    friend ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);
    friend ExprMatrix operator*(const Expr& s, const ExprMatrix& m);
    friend ExprVector operator*(const ExprMatrix& m, const ExprVector& v);
    friend ExprMatrix operator-(const ExprMatrix& m);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Expr> data_;
};

ExprVector add(const ExprVector& a, const ExprVector& b);
ExprVector scale(const Expr& s, const ExprVector& v);
Expr dot(const ExprVector& a, const ExprVector& b);
bool is_zero(const ExprVector& v);
ExprVector unit_vector(std::size_t n, std::size_t i);

struct Rref {
    ExprMatrix reduced;               // zero rows at the bottom
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Pivots must be certified nonzero; a pivot
/// candidate whose status cannot be decided raises Error{Decidability}.
Rref rref(const ExprMatrix& m, const ProbeOptions& opts = {});
/// Fraction-free (Bareiss) rank.
std::size_t rank(const ExprMatrix& m, const ProbeOptions& opts = {});
Expr det(const ExprMatrix& m, const ProbeOptions& opts = {});
/// Throws Error{DivisionByZero} for singular input.
ExprMatrix inverse(const ExprMatrix& m, const ProbeOptions& opts = {});
/// One solution of m·x = b, or nullopt when inconsistent.
std::optional<ExprVector> solve(const ExprMatrix& m, const ExprVector& b, const ProbeOptions& opts = {});
/// Basis of {v : m·v = 0}, one vector per free column.
std::vector<ExprVector> nullspace(const ExprMatrix& m, const ProbeOptions& opts = {});
/// Row basis of the span of the given vectors in reduced echelon form.
std::vector<ExprVector> row_basis(const std::vector<ExprVector>& vectors, const ProbeOptions& opts = {});
bool same_span(const std::vector<ExprVector>& a, const std::vector<ExprVector>& b, const ProbeOptions& opts = {});
/// True when v lies in the span of basis.
bool in_span(const std::vector<ExprVector>& basis, const ExprVector& v, const ProbeOptions& opts = {});

}  // namespace lieinv
