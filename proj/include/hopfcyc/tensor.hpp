#pragma once

#include <functional>
#include <vector>

#include "hopfcyc/matrix.hpp"

namespace hopfcyc {

/// A sparse element of a tensor product of based spaces, kept as a list of
/// (basis leg tuple, coefficient) terms.  Operator matrices for the various
/// chain modules are assembled by pushing basis vectors through short
/// pipelines of the leg operations below, which mirror Sweedler notation:
/// splitLeg realizes h -> h^(1) (x) h^(2), mergeLegs realizes multiplication
/// of adjacent legs, functionalLeg applies eps or a character, insertLeg
/// tensors in a fixed vector (1 or a grouplike).
class TensorElem {
public:
    TensorElem(std::vector<int> dims, FieldTag field);

    static TensorElem basisVector(const std::vector<int>& dims, long long flatIndex,
                                  FieldTag field);

    const std::vector<int>& dims() const { return dims_; }
    FieldTag field() const { return field_; }
    long long totalDim() const;

    /// Applies a dOut x dIn matrix to one leg.
    void mapLeg(int leg, const Matrix& op);
    /// Replaces leg by two legs via a (dA*dB) x dIn matrix (comult, coaction).
    void splitLeg(int leg, const Matrix& op, int dA, int dB);
    /// Merges legs (leg, leg+1) via a dOut x (dLeg*dNext) matrix (mult, action).
    void mergeLegs(int leg, const Matrix& op, int dOut);
    /// Applies a 1 x dIn functional and removes the leg (counit, character).
    void functionalLeg(int leg, const Matrix& op);
    /// Inserts a fixed d x 1 vector as a new leg at position pos.
    void insertLeg(int pos, const Matrix& vec);
    /// Reorders legs: new leg k is old leg perm[k].
    void permuteLegs(const std::vector<int>& perm);
    void moveLeg(int from, int to);

    /// Combines duplicate tuples and drops zero terms.
    void compress();

    /// Writes the element into column col of m (m.rows() == totalDim()).
    void addToColumn(Matrix& m, int col) const;

private:
    struct Term {
        std::vector<int> legs;
        Scalar c;
    };

    long long flatIndex(const Term& t) const;

    std::vector<int> dims_;
    FieldTag field_;
    std::vector<Term> terms_;
};

/// Builds the matrix of an operator between tensor-product spaces by running
/// `pipeline` on every source basis vector.
Matrix operatorMatrix(const std::vector<int>& srcDims, long long tgtDim, FieldTag field,
                      const std::function<void(TensorElem&)>& pipeline);

long long productOfDims(const std::vector<int>& dims);

}  // namespace hopfcyc
