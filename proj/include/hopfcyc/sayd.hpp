#pragma once

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

/// Module side x comodule side.  LR = left module, right comodule (the
/// variant the coefficient-bearing chain modules use).
enum class SaydVariant { LL, LR, RL, RR };

std::string saydVariantName(SaydVariant v);
SaydVariant saydVariantFromName(const std::string& s);

/// A finite-dimensional H-module/comodule.
/// Action shapes:   LL/LR: m x (d*m)   (H (x) M -> M)
///                  RL/RR: m x (m*d)   (M (x) H -> M)
/// Coaction shapes: LL/RL: (d*m) x m   (M -> H (x) M)
///                  LR/RR: (m*d) x m   (M -> M (x) H)
struct SAYDModuleData {
    BasedSpace space;
    SaydVariant variant = SaydVariant::LR;
    Matrix action;
    Matrix coaction;

    int dim() const { return space.dim; }
    FieldTag field() const { return space.field; }
};

/// Verifies module axioms, comodule axioms, the variant's
/// anti-Yetter-Drinfeld compatibility, and stability, all as exact matrix
/// identities.
Report verifySAYD(const HopfAlgebraData& h, const SAYDModuleData& m);

/// The 1-dimensional module k_{(delta,sigma)}: action through delta,
/// coaction through sigma.  Requires pair.inInvolution (for the LR variant
/// this is exactly the SAYD condition); the built candidate is re-checked.
SAYDModuleData saydFromModularPair(const HopfAlgebraData& h, const ModularPair& pair,
                                   SaydVariant variant = SaydVariant::LR);

/// Trivial coefficients: action through eps, coaction through 1.
SAYDModuleData trivialSAYD(const HopfAlgebraData& h, SaydVariant variant = SaydVariant::LR);

/// Cotensor product M box_H N of a right H-comodule and a left H-comodule:
/// the kernel of coactM (x) 1 - 1 (x) coactN inside M (x) N.  Returns the
/// inclusion matrix (columns = kernel basis).
Matrix cotensorSubspace(const Matrix& coactM, int mDim, const Matrix& coactN, int nDim,
                        int hopfDim);

/// Diagonal left coaction on H^{(x)count}: h_0...h_count-1 ->
/// h_0^(1)...h_{count-1}^(1) (x) (h_0^(2) (x) ... (x) h_{count-1}^(2)).
Matrix diagonalLeftCoaction(const HopfAlgebraData& h, int count);

/// Right diagonal action of H on H^{(x)count} through Delta^{count-1}.
Matrix rightDiagonalAction(const HopfAlgebraData& h, int count);

/// Quotient H^{(x)(n+1)} (x) M -> H^{(x)(n+1)} (x)_H M by the span of
/// (x.g (x) m) - (x (x) g.m) over basis x, g, m, for a left H-module M.
QuotientData hTensorQuotient(const HopfAlgebraData& h, int n, const SAYDModuleData& m);

}  // namespace hopfcyc
