#pragma once

#include "hopfcyc/cyclic_module.hpp"
#include "hopfcyc/sayd.hpp"

namespace hopfcyc {

/// A_n = A^{(x)(n+1)}: delta_i multiplies adjacent factors, delta_n wraps
/// a_n a_0, sigma_i inserts 1, tau rotates the last factor to the front.
ParaCyclicModule algebraCyclic(const AlgebraData& a, int N);

/// C^n = C^{(x)(n+1)}: d_i comultiplies factor i, d_{n+1} splits c_0 with
/// wrap-around, s_i applies the counit to factor i+1, t rotates left.
ParaCocyclicModule coalgebraCocyclic(const CoalgebraData& c, int N);

/// The Connes-Moscovici cocyclic module of (H, delta, sigma): degree-n space
/// H^{(x)n} (degree 0 = k), t_n = Delta^{n-1}(S~(h_1)) . (h_2 (x)...(x) sigma).
ParaCocyclicModule connesMoscoviciCocyclic(const HopfAlgebraData& h, const ModularPair& pair,
                                           int N);

/// The cyclic module H~_{(delta,sigma)}: degree-n space H^{(x)n},
/// tau_n = delta(h_n^(2)) sigma S(h_1^(1)...h_n^(1)) (x) h_1^(2) (x)...
ParaCyclicModule krCyclic(const HopfAlgebraData& h, const ModularPair& pair, int N);

/// C_n = M (x) H^{(x)(n+1)} with the twisted wrap face and cyclic operator
/// tau(m (x) h_0 ... h_n) = h_n^(1) m (x) h_n^(2) (x) h_0 (x) ... (x) h_{n-1}.
ParaCyclicModule algWithCoefficients(const HopfAlgebraData& h, const SAYDModuleData& m,
                                     int N);

/// C^n = H^{(x)(n+1)} (x) M with
/// t_n(h_0 ... h_n (x) m) = h_1 (x)...(x) h_n (x) h_0 S^{-1}(m^(1)) (x) m^(0).
ParaCocyclicModule coalgWithCoefficients(const HopfAlgebraData& h, const SAYDModuleData& m,
                                         int N);

/// The dual paracyclic module K_*(H, M): built from its printed operator
/// formulas AND as hatDual(coalgWithCoefficients); the two are compared
/// matrix-for-matrix and MismatchWithHatDual is thrown on any difference.
ParaCyclicModule kDualModule(const HopfAlgebraData& h, const SAYDModuleData& m, int N);

/// The subcomplex of invariant chains C^H_n = M box_H H^{(x)(n+1)} with the
/// operators of algWithCoefficients restricted to the cotensor subspaces.
struct InvariantCyclic {
    ParaCyclicModule module;
    std::vector<Matrix> inclusions;  // cotensor inclusion per degree
};
InvariantCyclic invariantCyclic(const HopfAlgebraData& h, const SAYDModuleData& m, int N);

/// The quotient complex C^n_H = H^{(x)(n+1)} (x)_H M with the operators of
/// coalgWithCoefficients induced on the quotients.
struct CoinvariantCocyclic {
    ParaCocyclicModule module;
    std::vector<QuotientData> quotients;
};
CoinvariantCocyclic coinvariantCocyclic(const HopfAlgebraData& h, const SAYDModuleData& m,
                                        int N);

/// Shared precondition of the coefficient-bearing constructions: M is a
/// verified left-module / right-comodule SAYD module over H.
void requireSaydLR(const HopfAlgebraData& h, const SAYDModuleData& m);

}  // namespace hopfcyc
