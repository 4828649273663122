#include "hopfcyc/sayd.hpp"

#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

std::string saydVariantName(SaydVariant v) {
    switch (v) {
        case SaydVariant::LL: return "LL";
        case SaydVariant::LR: return "LR";
        case SaydVariant::RL: return "RL";
        case SaydVariant::RR: return "RR";
    }
    return "?";
}

SaydVariant saydVariantFromName(const std::string& s) {
    if (s == "LL") return SaydVariant::LL;
    if (s == "LR") return SaydVariant::LR;
    if (s == "RL") return SaydVariant::RL;
    if (s == "RR") return SaydVariant::RR;
    throw ParseError("unknown SAYD variant \"" + s + "\"");
}

namespace {

bool leftModule(SaydVariant v) { return v == SaydVariant::LL || v == SaydVariant::LR; }
bool leftComodule(SaydVariant v) { return v == SaydVariant::LL || v == SaydVariant::RL; }

void checkShapes(const HopfAlgebraData& h, const SAYDModuleData& m) {
    int d = h.dim(), md = m.dim();
    int actCols = leftModule(m.variant) ? d * md : md * d;
    if (m.action.rows() != md || m.action.cols() != actCols)
        throw ShapeMismatch("SAYD action shape for variant " + saydVariantName(m.variant));
    int coRows = leftComodule(m.variant) ? d * md : md * d;
    if (m.coaction.rows() != coRows || m.coaction.cols() != md)
        throw ShapeMismatch("SAYD coaction shape for variant " + saydVariantName(m.variant));
    if (!(m.field() == h.field())) throw ShapeMismatch("SAYD field mismatch");
}

// The anti-Yetter-Drinfeld compatibility, per variant.  Each right-hand side
// is assembled by a tensor pipeline realizing the displayed Sweedler formula.
Matrix aydRhs(const HopfAlgebraData& h, const SAYDModuleData& m) {
    int d = h.dim(), md = m.dim();
    FieldTag f = h.field();
    Matrix sInv = antipodeInverse(h);
    switch (m.variant) {
        case SaydVariant::LL:
            // (hm) |-> h^(1) m^(-1) S^{-1}(h^(3)) (x) h^(2) m^(0)
            return operatorMatrix({d, md}, (long long)d * md, f, [&](TensorElem& e) {
                e.splitLeg(0, h.comult, d, d);
                e.splitLeg(0, h.comult, d, d);
                e.splitLeg(3, m.coaction, d, md);
                e.permuteLegs({0, 3, 2, 1, 4});
                e.mapLeg(2, sInv);
                e.mergeLegs(0, h.mult, d);
                e.mergeLegs(0, h.mult, d);
                e.mergeLegs(1, m.action, md);
            });
        case SaydVariant::LR:
            // (hm) |-> h^(2) m^(0) (x) h^(3) m^(1) S(h^(1))
            return operatorMatrix({d, md}, (long long)md * d, f, [&](TensorElem& e) {
                e.splitLeg(0, h.comult, d, d);
                e.splitLeg(0, h.comult, d, d);
                e.splitLeg(3, m.coaction, md, d);
                e.permuteLegs({1, 3, 2, 4, 0});
                e.mergeLegs(0, m.action, md);
                e.mapLeg(3, h.antipode);
                e.mergeLegs(1, h.mult, d);
                e.mergeLegs(1, h.mult, d);
            });
        case SaydVariant::RL:
            // (mh) |-> S(h^(3)) m^(-1) h^(1) (x) m^(0) h^(2)
            return operatorMatrix({md, d}, (long long)d * md, f, [&](TensorElem& e) {
                e.splitLeg(1, h.comult, d, d);
                e.splitLeg(1, h.comult, d, d);
                e.splitLeg(0, m.coaction, d, md);
                e.permuteLegs({4, 0, 2, 1, 3});
                e.mapLeg(0, h.antipode);
                e.mergeLegs(0, h.mult, d);
                e.mergeLegs(0, h.mult, d);
                e.mergeLegs(1, m.action, md);
            });
        case SaydVariant::RR:
            // (mh) |-> m^(0) h^(2) (x) S^{-1}(h^(1)) m^(1) h^(3)
            return operatorMatrix({md, d}, (long long)md * d, f, [&](TensorElem& e) {
                e.splitLeg(1, h.comult, d, d);
                e.splitLeg(1, h.comult, d, d);
                e.splitLeg(0, m.coaction, md, d);
                e.permuteLegs({0, 3, 2, 1, 4});
                e.mergeLegs(0, m.action, md);
                e.mapLeg(1, sInv);
                e.mergeLegs(1, h.mult, d);
                e.mergeLegs(1, h.mult, d);
            });
    }
    throw Error("unreachable");
}

}  // namespace

Report verifySAYD(const HopfAlgebraData& h, const SAYDModuleData& m) {
    checkShapes(h, m);
    int d = h.dim(), md = m.dim();
    FieldTag f = h.field();
    Matrix idM = Matrix::identity(md, f);
    Matrix idH = Matrix::identity(d, f);
    Report r;

    if (leftModule(m.variant)) {
        r.add("module-assoc", m.action * Matrix::kron(h.mult, idM) ==
                                  m.action * Matrix::kron(idH, m.action));
        r.add("module-unital", m.action * Matrix::kron(h.unit, idM) == idM);
    } else {
        r.add("module-assoc", m.action * Matrix::kron(idM, h.mult) ==
                                  m.action * Matrix::kron(m.action, idH));
        r.add("module-unital", m.action * Matrix::kron(idM, h.unit) == idM);
    }

    if (leftComodule(m.variant)) {
        r.add("comodule-coassoc", Matrix::kron(h.comult, idM) * m.coaction ==
                                      Matrix::kron(idH, m.coaction) * m.coaction);
        r.add("comodule-counital", Matrix::kron(h.counit, idM) * m.coaction == idM);
    } else {
        r.add("comodule-coassoc", Matrix::kron(m.coaction, idH) * m.coaction ==
                                      Matrix::kron(idM, h.comult) * m.coaction);
        r.add("comodule-counital", Matrix::kron(idM, h.counit) * m.coaction == idM);
    }

    r.add("ayd-compatibility", m.coaction * m.action == aydRhs(h, m));

    // stability: coaction followed by the action of the H-leg is the identity
    Matrix composite;
    switch (m.variant) {
        case SaydVariant::LL: composite = m.action * m.coaction; break;
        case SaydVariant::LR:
            composite = m.action * legPermutationMatrix({md, d}, {1, 0}, f) * m.coaction;
            break;
        case SaydVariant::RL:
            composite = m.action * legPermutationMatrix({d, md}, {1, 0}, f) * m.coaction;
            break;
        case SaydVariant::RR: composite = m.action * m.coaction; break;
    }
    r.add("stability", composite == idM);
    return r;
}

SAYDModuleData saydFromModularPair(const HopfAlgebraData& h, const ModularPair& pair,
                                   SaydVariant variant) {
    if (!pair.inInvolution)
        throw NotInInvolution("modular pair (" + pair.delta.name + "," + pair.sigma.name +
                              ") is not in involution");
    // dim M = 1, so H (x) M and M (x) H have identical index spaces and the
    // action/coaction matrices coincide with delta / sigma.
    BasedSpace space = BasedSpace::make(1, h.field(), {"m"});
    SAYDModuleData m{space, variant, pair.delta.functional, pair.sigma.vector};
    Report chk = verifySAYD(h, m);
    if (!chk.allPass()) {
        std::string what;
        for (const auto& n : chk.failures()) what += " " + n;
        throw SAYDViolation("k_(delta,sigma) fails SAYD for variant " +
                            saydVariantName(variant) + ":" + what);
    }
    return m;
}

SAYDModuleData trivialSAYD(const HopfAlgebraData& h, SaydVariant variant) {
    BasedSpace space = BasedSpace::make(1, h.field(), {"m"});
    SAYDModuleData m{space, variant, h.counit, h.unit};
    Report chk = verifySAYD(h, m);
    if (!chk.allPass())
        throw SAYDViolation("trivial coefficients fail SAYD for variant " +
                            saydVariantName(variant));
    return m;
}

Matrix cotensorSubspace(const Matrix& coactM, int mDim, const Matrix& coactN, int nDim,
                        int hopfDim) {
    FieldTag f = coactM.field();
    if (coactM.rows() != mDim * hopfDim || coactM.cols() != mDim)
        throw ShapeMismatch("cotensor: right coaction shape");
    if (coactN.rows() != hopfDim * nDim || coactN.cols() != nDim)
        throw ShapeMismatch("cotensor: left coaction shape");
    Matrix lhs = Matrix::kron(coactM, Matrix::identity(nDim, f));
    Matrix rhs = Matrix::kron(Matrix::identity(mDim, f), coactN);
    return (lhs - rhs).kernelBasis();
}

Matrix diagonalLeftCoaction(const HopfAlgebraData& h, int count) {
    if (count == 0) return h.unit;
    int d = h.dim();
    std::vector<int> dims(count, d);
    return operatorMatrix(dims, productOfDims(dims) * d, h.field(), [&](TensorElem& e) {
        for (int j = count - 1; j >= 0; --j) e.splitLeg(j, h.comult, d, d);
        std::vector<int> perm;
        for (int j = 0; j < count; ++j) perm.push_back(2 * j);
        for (int j = 0; j < count; ++j) perm.push_back(2 * j + 1);
        e.permuteLegs(perm);
        for (int j = 1; j < count; ++j) e.mergeLegs(0, h.mult, d);
    });
}

Matrix rightDiagonalAction(const HopfAlgebraData& h, int count) {
    if (count < 1) throw ShapeMismatch("rightDiagonalAction needs count >= 1");
    int d = h.dim();
    std::vector<int> dims(count + 1, d);
    long long tgt = productOfDims(std::vector<int>(count, d));
    return operatorMatrix(dims, tgt, h.field(), [&](TensorElem& e) {
        for (int i = 1; i < count; ++i) e.splitLeg(count + i - 1, h.comult, d, d);
        std::vector<int> perm;
        for (int j = 0; j < count; ++j) {
            perm.push_back(j);
            perm.push_back(count + j);
        }
        e.permuteLegs(perm);
        for (int j = 0; j < count; ++j) e.mergeLegs(j, h.mult, d);
    });
}

QuotientData hTensorQuotient(const HopfAlgebraData& h, int n, const SAYDModuleData& m) {
    if (!leftModule(m.variant))
        throw ShapeMismatch("hTensorQuotient needs a left H-module");
    int d = h.dim(), md = m.dim();
    FieldTag f = h.field();
    long long hn = 1;
    for (int i = 0; i <= n; ++i) hn *= d;
    Matrix relations =
        Matrix::kron(rightDiagonalAction(h, n + 1), Matrix::identity(md, f)) -
        Matrix::kron(Matrix::identity(int(hn), f), m.action);
    return quotientData(relations, int(hn * md));
}

}  // namespace hopfcyc
