#pragma once

#include <optional>
#include <vector>

#include "hopfcyc/scalar.hpp"

namespace hopfcyc {

/// Dense row-major matrix over an exact field.  Matrices represent linear
/// maps acting on column vectors: rows = target dimension, cols = source.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_{0} {}
    Matrix(int rows, int cols, FieldTag field);

    static Matrix identity(int n, FieldTag field);
    static Matrix zero(int rows, int cols, FieldTag field) { return Matrix(rows, cols, field); }
    /// rows[i][j] given as scalar strings; for small literal fixtures.
    static Matrix fromStrings(const std::vector<std::vector<std::string>>& rows, FieldTag field);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldTag field() const { return field_; }

    const Scalar& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
    void set(int i, int j, Scalar v) { e_[size_t(i) * cols_ + j] = std::move(v); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;    // sparse-aware product
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    Matrix pow(int k) const;                    // square matrices, k >= 0

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool isZero() const;
    bool isIdentity() const;

    /// Horizontal concatenation [this | o].
    Matrix hconcat(const Matrix& o) const;
    Matrix column(int j) const;

    int rank() const;
    /// Columns form a basis of the null space; cols() - rank() columns.
    Matrix kernelBasis() const;
    /// Exact inverse; throws Singular for non-invertible input.
    Matrix inverse() const;
    /// Solves A * X = B; nullopt when inconsistent.  The returned solution
    /// is the unique one with free variables set to zero.
    std::optional<Matrix> solve(const Matrix& b) const;

    /// Kronecker product under the leftmost-factor-most-significant
    /// convention: (A (x) B)(v (x) w) = Av (x) Bw.
    static Matrix kron(const Matrix& a, const Matrix& b);
    static Matrix kron(const std::vector<Matrix>& factors, FieldTag field);

    std::string str() const;  // human-readable, for diagnostics

private:
    int rows_, cols_;
    FieldTag field_;
    std::vector<Scalar> e_;

    void checkSameShape(const Matrix& o, const char* what) const;
};

/// Permutation matrix reordering tensor legs: source legs have dimensions
/// dims, target position k receives source leg perm[k].
Matrix legPermutationMatrix(const std::vector<int>& dims, const std::vector<int>& perm,
                            FieldTag field);

/// Quotient of an ambient space by the span of the given columns:
/// projection * spanCols = 0, projection has full row rank, and
/// projection * section = identity on the quotient.
struct QuotientData {
    Matrix spanCols;     // the relation span in the ambient space
    Matrix projection;   // quotientDim x ambient
    Matrix section;      // ambient x quotientDim
    int quotientDim = 0;
    int ambientDim = 0;
};

QuotientData quotientData(const Matrix& spanCols, int ambientDim);

/// Matrix of op in sub-bases: solves inclTgt * X = op * inclSrc.
/// Throws NotPreserved when op does not map span(inclSrc) into span(inclTgt).
Matrix restrictToSubspace(const Matrix& op, const Matrix& inclSrc, const Matrix& inclTgt);

/// restrictToSubspace with the same inclusion on both sides.
Matrix inducedOnSubspace(const Matrix& op, const Matrix& inclusion);

/// Matrix induced on quotients: tgt.projection * op * src.section.
/// Throws NotWellDefined when op does not map src.spanCols into tgt's span.
Matrix induceOnQuotient(const Matrix& op, const QuotientData& src, const QuotientData& tgt);

}  // namespace hopfcyc
