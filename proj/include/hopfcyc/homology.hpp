#pragma once

#include "hopfcyc/cyclic_module.hpp"

namespace hopfcyc {

enum class HomologyKind { Hochschild, Cyclic };
enum class Direction { Homology, Cohomology };

struct HomologyReport {
    HomologyKind kind = HomologyKind::Hochschild;
    Direction direction = Direction::Homology;
    std::vector<std::pair<int, int>> dims;  // (degree, dimension)
    int guaranteedUpTo = -1;                // degrees <= this are final
    std::string truncationNote;

    int dimAt(int degree) const {
        for (auto& [n, d] : dims)
            if (n == degree) return d;
        throw ShapeMismatch("degree " + std::to_string(degree) + " not in report");
    }
    bool sameDims(const HomologyReport& o) const { return dims == o.dims; }
};

/// b = sum (-1)^i delta_i out of each degree; checks bate b = 0 before ranking.
Matrix hochschildBoundary(const ParaCyclicModule& x, int n);
/// b = sum_{i=0}^{n+1} (-1)^i d_i out of degree n.
Matrix hochschildCoboundary(const ParaCocyclicModule& x, int n);

/// Homology dimensions of the b-complex, degrees 0..upTo (upTo <= N-1).
/// Throws NotAComplex when b o b != 0.
HomologyReport hochschildDims(const ParaCyclicModule& x, int upTo);
/// Cohomology of the cosimplicial b-complex (transposed differentials).
HomologyReport hochschildDims(const ParaCocyclicModule& x, int upTo);

/// Cyclic homology dimensions via the first-quadrant (b, b', 1-lambda, N)
/// bicomplex, degrees 0..upTo.  Requires a genuinely cyclic module
/// (tau^{n+1} = id through degree upTo+1); throws NotCyclic otherwise.
/// The bicomplex anticommutation identities are verified before ranking.
HomologyReport cyclicDims(const ParaCyclicModule& x, int upTo);
/// Cyclic cohomology of a cocyclic module (the transposed bicomplex).
HomologyReport cyclicDims(const ParaCocyclicModule& x, int upTo);

/// Independent pipeline: homology of the quotient complex X/(1-lambda) with
/// the induced b.  Valid over Q, or F_p with p > upTo+1 (refused otherwise).
HomologyReport cyclicDimsConnes(const ParaCyclicModule& x, int upTo);
HomologyReport cyclicDimsConnes(const ParaCocyclicModule& x, int upTo);

/// Umbrella for cocyclic inputs, selecting Hochschild or cyclic cohomology.
HomologyReport cohomologyDims(const ParaCocyclicModule& x, int upTo, HomologyKind kind);

/// Diagnostic: degreewise exactness of b' (dim ker = dim im), reported per
/// degree, never assumed by the engine.
Report bPrimeExactness(const ParaCyclicModule& x, int upTo);

}  // namespace hopfcyc
