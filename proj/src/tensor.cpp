#include "hopfcyc/tensor.hpp"

#include <algorithm>
#include <map>

namespace hopfcyc {

long long productOfDims(const std::vector<int>& dims) {
    long long t = 1;
    for (int d : dims) t *= d;
    return t;
}

TensorElem::TensorElem(std::vector<int> dims, FieldTag field)
    : dims_(std::move(dims)), field_(field) {}

TensorElem TensorElem::basisVector(const std::vector<int>& dims, long long flatIndex,
                                   FieldTag field) {
    TensorElem e(dims, field);
    Term t;
    t.legs.resize(dims.size());
    long long rest = flatIndex;
    for (int k = int(dims.size()) - 1; k >= 0; --k) {
        t.legs[k] = int(rest % dims[k]);
        rest /= dims[k];
    }
    t.c = Scalar::one(field);
    e.terms_.push_back(std::move(t));
    return e;
}

long long TensorElem::totalDim() const { return productOfDims(dims_); }

long long TensorElem::flatIndex(const Term& t) const {
    long long idx = 0;
    for (size_t k = 0; k < dims_.size(); ++k) idx = idx * dims_[k] + t.legs[k];
    return idx;
}

void TensorElem::mapLeg(int leg, const Matrix& op) {
    if (op.cols() != dims_[leg]) throw ShapeMismatch("mapLeg dimension");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int v = t.legs[leg];
        for (int r = 0; r < op.rows(); ++r) {
            const Scalar& c = op(r, v);
            if (c.isZero()) continue;
            Term nt = t;
            nt.legs[leg] = r;
            nt.c = t.c * c;
            out.push_back(std::move(nt));
        }
    }
    dims_[leg] = op.rows();
    terms_ = std::move(out);
}

void TensorElem::splitLeg(int leg, const Matrix& op, int dA, int dB) {
    if (op.cols() != dims_[leg] || op.rows() != dA * dB)
        throw ShapeMismatch("splitLeg dimension");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int v = t.legs[leg];
        for (int r = 0; r < op.rows(); ++r) {
            const Scalar& c = op(r, v);
            if (c.isZero()) continue;
            Term nt;
            nt.legs.reserve(t.legs.size() + 1);
            nt.legs.assign(t.legs.begin(), t.legs.begin() + leg);
            nt.legs.push_back(r / dB);
            nt.legs.push_back(r % dB);
            nt.legs.insert(nt.legs.end(), t.legs.begin() + leg + 1, t.legs.end());
            nt.c = t.c * c;
            out.push_back(std::move(nt));
        }
    }
    dims_.erase(dims_.begin() + leg);
    dims_.insert(dims_.begin() + leg, {dA, dB});
    terms_ = std::move(out);
}

void TensorElem::mergeLegs(int leg, const Matrix& op, int dOut) {
    int dA = dims_[leg], dB = dims_[leg + 1];
    if (op.cols() != dA * dB || op.rows() != dOut)
        throw ShapeMismatch("mergeLegs dimension");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int v = t.legs[leg] * dB + t.legs[leg + 1];
        for (int r = 0; r < dOut; ++r) {
            const Scalar& c = op(r, v);
            if (c.isZero()) continue;
            Term nt;
            nt.legs.reserve(t.legs.size() - 1);
            nt.legs.assign(t.legs.begin(), t.legs.begin() + leg);
            nt.legs.push_back(r);
            nt.legs.insert(nt.legs.end(), t.legs.begin() + leg + 2, t.legs.end());
            nt.c = t.c * c;
            out.push_back(std::move(nt));
        }
    }
    dims_.erase(dims_.begin() + leg + 1);
    dims_[leg] = dOut;
    terms_ = std::move(out);
}

void TensorElem::functionalLeg(int leg, const Matrix& op) {
    if (op.rows() != 1 || op.cols() != dims_[leg])
        throw ShapeMismatch("functionalLeg dimension");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const Scalar& c = op(0, t.legs[leg]);
        if (c.isZero()) continue;
        Term nt;
        nt.legs.reserve(t.legs.size() - 1);
        nt.legs.assign(t.legs.begin(), t.legs.begin() + leg);
        nt.legs.insert(nt.legs.end(), t.legs.begin() + leg + 1, t.legs.end());
        nt.c = t.c * c;
        out.push_back(std::move(nt));
    }
    dims_.erase(dims_.begin() + leg);
    terms_ = std::move(out);
}

void TensorElem::insertLeg(int pos, const Matrix& vec) {
    if (vec.cols() != 1) throw ShapeMismatch("insertLeg expects a column vector");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        for (int r = 0; r < vec.rows(); ++r) {
            const Scalar& c = vec(r, 0);
            if (c.isZero()) continue;
            Term nt;
            nt.legs.reserve(t.legs.size() + 1);
            nt.legs.assign(t.legs.begin(), t.legs.begin() + pos);
            nt.legs.push_back(r);
            nt.legs.insert(nt.legs.end(), t.legs.begin() + pos, t.legs.end());
            nt.c = t.c * c;
            out.push_back(std::move(nt));
        }
    }
    dims_.insert(dims_.begin() + pos, vec.rows());
    terms_ = std::move(out);
}

void TensorElem::permuteLegs(const std::vector<int>& perm) {
    if (perm.size() != dims_.size()) throw ShapeMismatch("permuteLegs arity");
    std::vector<int> newDims(dims_.size());
    for (size_t k = 0; k < perm.size(); ++k) newDims[k] = dims_[perm[k]];
    for (auto& t : terms_) {
        std::vector<int> legs(t.legs.size());
        for (size_t k = 0; k < perm.size(); ++k) legs[k] = t.legs[perm[k]];
        t.legs = std::move(legs);
    }
    dims_ = std::move(newDims);
}

void TensorElem::moveLeg(int from, int to) {
    std::vector<int> perm;
    perm.reserve(dims_.size());
    for (int k = 0; k < int(dims_.size()); ++k)
        if (k != from) perm.push_back(k);
    perm.insert(perm.begin() + to, from);
    permuteLegs(perm);
}

void TensorElem::compress() {
    std::map<std::vector<int>, Scalar> acc;
    for (auto& t : terms_) {
        auto it = acc.find(t.legs);
        if (it == acc.end())
            acc.emplace(std::move(t.legs), std::move(t.c));
        else
            it->second += t.c;
    }
    terms_.clear();
    for (auto& [legs, c] : acc) {
        if (c.isZero()) continue;
        terms_.push_back(Term{legs, c});
    }
}

void TensorElem::addToColumn(Matrix& m, int col) const {
    for (const auto& t : terms_) {
        long long r = flatIndex(t);
        m.set(int(r), col, m(int(r), col) + t.c);
    }
}

Matrix operatorMatrix(const std::vector<int>& srcDims, long long tgtDim, FieldTag field,
                      const std::function<void(TensorElem&)>& pipeline) {
    long long srcDim = productOfDims(srcDims);
    Matrix m(int(tgtDim), int(srcDim), field);
    for (long long j = 0; j < srcDim; ++j) {
        TensorElem e = TensorElem::basisVector(srcDims, j, field);
        pipeline(e);
        e.compress();
        if (e.totalDim() != tgtDim)
            throw ShapeMismatch("pipeline produced wrong target dimension");
        e.addToColumn(m, int(j));
    }
    return m;
}

}  // namespace hopfcyc
