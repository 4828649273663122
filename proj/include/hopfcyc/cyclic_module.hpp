#pragma once

#include <optional>

#include "hopfcyc/matrix.hpp"
#include "hopfcyc/report.hpp"

namespace hopfcyc {

/// A paracyclic module truncated at degree N: spaces X_0..X_N with faces
/// (out of degrees 1..N), degeneracies (out of 0..N-1) and invertible cyclic
/// operators.  Cyclicity (tau_n^{n+1} = id) is always computed by the
/// checker, never trusted as an annotation.
struct ParaCyclicModule {
    int N = 0;
    FieldTag field;
    std::vector<int> dims;                   // 0..N
    std::vector<std::vector<Matrix>> faces;  // faces[n][i]: X_n -> X_{n-1}, 0<=i<=n
    std::vector<std::vector<Matrix>> degens; // degens[n][i]: X_n -> X_{n+1}, 0<=i<=n
    std::vector<Matrix> cyclic;              // cyclic[n]: X_n -> X_n
};

/// Cocyclic counterpart: cofaces out of degrees 0..N-1 (n+2 of them out of
/// degree n), codegeneracies out of degrees 1..N (n of them out of degree n).
struct ParaCocyclicModule {
    int N = 0;
    FieldTag field;
    std::vector<int> dims;
    std::vector<std::vector<Matrix>> cofaces;   // cofaces[n][i]: X^n -> X^{n+1}, 0<=i<=n+1
    std::vector<std::vector<Matrix>> codegens;  // codegens[n][i]: X^n -> X^{n-1}, 0<=i<=n-1
    std::vector<Matrix> cyclic;                 // cyclic[n]: X^n -> X^n
};

/// A degreewise linear map between two modules of the same kind.
struct GradedMap {
    std::vector<Matrix> mats;  // 0..N
};

struct RelationReport {
    Report report;
    /// Per degree, the least 1 <= k <= n+1 with tau_n^k = id (nullopt when
    /// the cyclic operator has order beyond n+1: "paracyclic only").
    std::vector<std::optional<int>> cyclicOrder;
    bool simplicialOk = false;  // (co)simplicial identities
    bool paracyclicOk = false;  // + the four extra relations
    bool isCyclic = false;      // + tau_n^{n+1} = id in every degree
};

void validateShapes(const ParaCyclicModule& x);
void validateShapes(const ParaCocyclicModule& x);

/// Evaluates every simplicial identity and every cyclic compatibility
/// relation as an exact matrix equality in all degrees <= N, reporting each
/// (relation, degree, index) triple.
RelationReport checkRelations(const ParaCyclicModule& x);
RelationReport checkRelations(const ParaCocyclicModule& x);

/// Connes' duality functor X -> X^: faces delta_i = s_{i-1} (1<=i<=n),
/// delta_0 = s_{n-1} t_n, degeneracies sigma_i = d_i, tau_n = t_n^{-1}.
ParaCyclicModule hatDual(const ParaCocyclicModule& x);

/// The other direction X -> X~: cofaces d_i = sigma_{i-1} (1<=i<=n+1),
/// d_0 = tau_{n+1} sigma_n, codegeneracies s_i = delta_i, t_n = tau_n^{-1}.
ParaCocyclicModule checkDual(const ParaCyclicModule& x);

/// Degreewise commutation of f with faces, degeneracies and the cyclic
/// operators; identities reaching past the truncation are reported skipped.
Report verifyMorphism(const GradedMap& f, const ParaCyclicModule& x,
                      const ParaCyclicModule& y);
Report verifyMorphism(const GradedMap& f, const ParaCocyclicModule& x,
                      const ParaCocyclicModule& y);

/// Hom-dual: transposes all operators, turning a cyclic module into a
/// cocyclic one on the dual spaces (and conversely).
ParaCocyclicModule transposeDual(const ParaCyclicModule& x);
ParaCyclicModule transposeDual(const ParaCocyclicModule& x);

}  // namespace hopfcyc
