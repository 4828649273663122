#include "hopfcyc/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcyc {

Matrix::Matrix(int rows, int cols, FieldTag field)
    : rows_(rows), cols_(cols), field_(field),
      e_(size_t(rows) * size_t(cols), Scalar::zero(field)) {
    if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
}

Matrix Matrix::identity(int n, FieldTag field) {
    Matrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
    return m;
}

Matrix Matrix::fromStrings(const std::vector<std::vector<std::string>>& rows, FieldTag field) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    Matrix m(r, c, field);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw ShapeMismatch("ragged matrix literal");
        for (int j = 0; j < c; ++j) m.set(i, j, Scalar::fromString(rows[i][j], field));
    }
    return m;
}

void Matrix::checkSameShape(const Matrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
        throw ShapeMismatch(std::string(what) + ": " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                            std::to_string(o.cols_));
}

Matrix Matrix::operator+(const Matrix& o) const {
    checkSameShape(o, "matrix add");
    Matrix r(rows_, cols_, field_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    checkSameShape(o, "matrix sub");
    Matrix r(rows_, cols_, field_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_, field_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(rows_, cols_, field_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !(field_ == o.field_))
        throw ShapeMismatch("matrix product shape: " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                            std::to_string(o.cols_));
    Matrix r(rows_, o.cols_, field_);
    // Operator matrices here are typically permutation-like; skipping zero
    // entries of the left factor keeps products near O(nnz).
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.isZero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (b.isZero()) continue;
                r.e_[size_t(i) * o.cols_ + j] += a * b;
            }
        }
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, (*this)(i, j));
    return r;
}

Matrix Matrix::pow(int k) const {
    if (rows_ != cols_) throw ShapeMismatch("pow of non-square matrix");
    Matrix acc = identity(rows_, field_);
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

bool Matrix::isZero() const {
    for (const auto& v : e_)
        if (!v.isZero()) return false;
    return true;
}

bool Matrix::isIdentity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_, field_);
}

Matrix Matrix::hconcat(const Matrix& o) const {
    if (rows_ != o.rows_ || !(field_ == o.field_)) throw ShapeMismatch("hconcat shape");
    Matrix r(rows_, cols_ + o.cols_, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.set(i, j, (*this)(i, j));
        for (int j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o(i, j));
    }
    return r;
}

Matrix Matrix::column(int j) const {
    Matrix r(rows_, 1, field_);
    for (int i = 0; i < rows_; ++i) r.set(i, 0, (*this)(i, j));
    return r;
}

namespace {

// In-place Gauss-Jordan on the leftmost `activeCols` columns.  Pivots are
// chosen by minimal bit size to limit rational growth.  Returns the pivot
// column of each eliminated row, in elimination order.
std::vector<int> gaussJordan(Matrix& m, int activeCols) {
    std::vector<int> pivotCols;
    int row = 0;
    for (int col = 0; col < activeCols && row < m.rows(); ++col) {
        int best = -1;
        size_t bestSize = 0;
        for (int i = row; i < m.rows(); ++i) {
            const Scalar& v = m(i, col);
            if (v.isZero()) continue;
            size_t sz = v.bitSize();
            if (best < 0 || sz < bestSize) {
                best = i;
                bestSize = sz;
            }
        }
        if (best < 0) continue;
        if (best != row)
            for (int j = 0; j < m.cols(); ++j) {
                Scalar t = m(row, j);
                m.set(row, j, m(best, j));
                m.set(best, j, t);
            }
        Scalar pivInv = m(row, col).inverse();
        for (int j = 0; j < m.cols(); ++j)
            if (!m(row, j).isZero()) m.set(row, j, m(row, j) * pivInv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const Scalar f = m(i, col);
            if (f.isZero()) continue;
            for (int j = 0; j < m.cols(); ++j) {
                if (m(row, j).isZero()) continue;
                m.set(i, j, m(i, j) - f * m(row, j));
            }
        }
        pivotCols.push_back(col);
        ++row;
    }
    return pivotCols;
}

}  // namespace

int Matrix::rank() const {
    Matrix work = *this;
    return int(gaussJordan(work, cols_).size());
}

Matrix Matrix::kernelBasis() const {
    Matrix work = *this;
    std::vector<int> piv = gaussJordan(work, cols_);
    std::vector<bool> isPivot(cols_, false);
    for (int c : piv) isPivot[c] = true;
    int nfree = cols_ - int(piv.size());
    Matrix basis(cols_, nfree, field_);
    int k = 0;
    for (int c = 0; c < cols_; ++c) {
        if (isPivot[c]) continue;
        basis.set(c, k, Scalar::one(field_));
        for (int r = 0; r < int(piv.size()); ++r)
            basis.set(piv[r], k, -work(r, c));
        ++k;
    }
    return basis;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw ShapeMismatch("inverse of non-square matrix");
    Matrix work = hconcat(identity(rows_, field_));
    std::vector<int> piv = gaussJordan(work, cols_);
    if (int(piv.size()) != rows_) throw Singular("matrix is singular");
    Matrix inv(rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.set(i, j, work(i, cols_ + j));
    return inv;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows() != rows_ || !(field_ == b.field()))
        throw ShapeMismatch("solve shape");
    Matrix work = hconcat(b);
    std::vector<int> piv = gaussJordan(work, cols_);
    // consistency: eliminated rows past the pivot count must vanish entirely
    for (int i = int(piv.size()); i < rows_; ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!work(i, cols_ + j).isZero()) return std::nullopt;
    Matrix x(cols_, b.cols(), field_);
    for (int r = 0; r < int(piv.size()); ++r)
        for (int j = 0; j < b.cols(); ++j) x.set(piv[r], j, work(r, cols_ + j));
    return x;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw ShapeMismatch("kron field mismatch");
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            const Scalar& va = a(ia, ja);
            if (va.isZero()) continue;
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb) {
                    const Scalar& vb = b(ib, jb);
                    if (vb.isZero()) continue;
                    r.set(ia * b.rows() + ib, ja * b.cols() + jb, va * vb);
                }
        }
    return r;
}

Matrix Matrix::kron(const std::vector<Matrix>& factors, FieldTag field) {
    Matrix acc = identity(1, field);
    for (const auto& f : factors) acc = kron(acc, f);
    return acc;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
        os << "]";
    }
    return os.str();
}

Matrix legPermutationMatrix(const std::vector<int>& dims, const std::vector<int>& perm,
                            FieldTag field) {
    if (dims.size() != perm.size()) throw ShapeMismatch("leg permutation arity");
    long long total = 1;
    for (int d : dims) total *= d;
    std::vector<int> tgtDims(perm.size());
    for (size_t k = 0; k < perm.size(); ++k) tgtDims[k] = dims[perm[k]];
    Matrix p(static_cast<int>(total), static_cast<int>(total), field);
    std::vector<int> idx(dims.size(), 0);
    for (long long src = 0; src < total; ++src) {
        long long rest = src;
        for (int k = int(dims.size()) - 1; k >= 0; --k) {
            idx[k] = int(rest % dims[k]);
            rest /= dims[k];
        }
        long long tgt = 0;
        for (size_t k = 0; k < perm.size(); ++k) tgt = tgt * tgtDims[k] + idx[perm[k]];
        p.set(int(tgt), int(src), Scalar::one(field));
    }
    return p;
}

namespace {

// Incrementally maintained reduced row echelon basis of a subspace.
class RowSpace {
public:
    RowSpace(int width, FieldTag field) : width_(width), field_(field) {}

    int size() const { return int(rows_.size()); }

    // Reduces v against the basis; inserts the remainder when nonzero.
    bool add(std::vector<Scalar> v) {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const Scalar& c = v[pivots_[k]];
            if (c.isZero()) continue;
            const Scalar f = c;
            for (int j = 0; j < width_; ++j)
                if (!rows_[k][j].isZero()) v[j] -= f * rows_[k][j];
        }
        int piv = -1;
        for (int j = 0; j < width_; ++j)
            if (!v[j].isZero()) {
                piv = j;
                break;
            }
        if (piv < 0) return false;
        Scalar inv = v[piv].inverse();
        for (int j = 0; j < width_; ++j)
            if (!v[j].isZero()) v[j] = v[j] * inv;
        for (auto& row : rows_) {
            const Scalar f = row[piv];
            if (f.isZero()) continue;
            for (int j = 0; j < width_; ++j)
                if (!v[j].isZero()) row[j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    const std::vector<Scalar>& row(int k) const { return rows_[k]; }

private:
    int width_;
    FieldTag field_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<int> pivots_;
};

}  // namespace

QuotientData quotientData(const Matrix& spanCols, int ambientDim) {
    if (spanCols.rows() != ambientDim)
        throw ShapeMismatch("quotient span must have ambientDim rows");
    FieldTag field = spanCols.field();

    RowSpace rs(ambientDim, field);
    for (int c = 0; c < spanCols.cols(); ++c) {
        std::vector<Scalar> v(ambientDim, Scalar::zero(field));
        for (int i = 0; i < ambientDim; ++i) v[i] = spanCols(i, c);
        rs.add(std::move(v));
    }
    int r = rs.size();

    // Record the span basis, then extend greedily by standard basis vectors.
    Matrix basis(ambientDim, ambientDim, field);
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < ambientDim; ++i) basis.set(i, k, rs.row(k)[i]);
    std::vector<int> chosen;
    for (int j = 0; j < ambientDim && rs.size() < ambientDim; ++j) {
        std::vector<Scalar> v(ambientDim, Scalar::zero(field));
        v[j] = Scalar::one(field);
        if (rs.add(std::move(v))) chosen.push_back(j);
    }
    for (int k = 0; k < int(chosen.size()); ++k)
        basis.set(chosen[k], r + k, Scalar::one(field));

    Matrix basisInv = basis.inverse();
    int q = ambientDim - r;
    Matrix projection(q, ambientDim, field);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < ambientDim; ++j) projection.set(i, j, basisInv(r + i, j));
    Matrix section(ambientDim, q, field);
    for (int k = 0; k < q; ++k) section.set(chosen[k], k, Scalar::one(field));

    return QuotientData{spanCols, std::move(projection), std::move(section), q, ambientDim};
}

Matrix restrictToSubspace(const Matrix& op, const Matrix& inclSrc, const Matrix& inclTgt) {
    if (op.cols() != inclSrc.rows() || op.rows() != inclTgt.rows())
        throw ShapeMismatch("restrictToSubspace shapes");
    Matrix image = op * inclSrc;
    auto x = inclTgt.solve(image);
    if (!x)
        throw NotPreserved("operator does not preserve the designated subspace");
    return *x;
}

Matrix inducedOnSubspace(const Matrix& op, const Matrix& inclusion) {
    return restrictToSubspace(op, inclusion, inclusion);
}

Matrix induceOnQuotient(const Matrix& op, const QuotientData& src, const QuotientData& tgt) {
    if (op.cols() != src.ambientDim || op.rows() != tgt.ambientDim)
        throw ShapeMismatch("induceOnQuotient shapes");
    if (!(tgt.projection * op * src.spanCols).isZero())
        throw NotWellDefined("operator does not descend to the quotient");
    return tgt.projection * op * src.section;
}

}  // namespace hopfcyc
