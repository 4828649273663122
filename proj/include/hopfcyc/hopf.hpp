#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/matrix.hpp"
#include "hopfcyc/report.hpp"

namespace hopfcyc {

/// A finite-dimensional k-vector space with a distinguished ordered basis.
struct BasedSpace {
    int dim = 0;
    std::vector<std::string> labels;  // distinct; auto-generated when empty
    FieldTag field;

    static BasedSpace make(int dim, FieldTag field, std::vector<std::string> labels = {});
};

/// Unital associative algebra by structure constants.
/// mult: d x d^2, unit: d x 1 (maps act on columns).
struct AlgebraData {
    BasedSpace space;
    Matrix mult, unit;
    int dim() const { return space.dim; }
    FieldTag field() const { return space.field; }
};

/// Counital coassociative coalgebra: comult d^2 x d, counit 1 x d.
struct CoalgebraData {
    BasedSpace space;
    Matrix comult, counit;
    int dim() const { return space.dim; }
    FieldTag field() const { return space.field; }
};

/// A finite-dimensional Hopf algebra given by structure-constant matrices.
struct HopfAlgebraData {
    BasedSpace space;
    Matrix mult;        // d x d^2
    Matrix unit;        // d x 1
    Matrix comult;      // d^2 x d
    Matrix counit;      // 1 x d
    Matrix antipode;    // d x d
    std::optional<Matrix> antipodeInv;  // cached by verified constructors

    int dim() const { return space.dim; }
    FieldTag field() const { return space.field; }
    AlgebraData algebra() const { return {space, mult, unit}; }
    CoalgebraData coalgebra() const { return {space, comult, counit}; }
};

/// h -> delta(h) with delta an algebra map H -> k.
struct Character {
    std::string name;
    Matrix functional;  // 1 x d
};

/// sigma with comult(sigma) = sigma (x) sigma, counit(sigma) = 1.
struct GrouplikeElement {
    std::string name;
    Matrix vector;  // d x 1
};

struct ModularPair {
    Character delta;
    GrouplikeElement sigma;
    bool inInvolution = false;
};

Report verifyAlgebraAxioms(const AlgebraData& a);
Report verifyCoalgebraAxioms(const CoalgebraData& c);

/// Checks every Hopf axiom as an exact matrix identity: associativity,
/// unitality, coassociativity, counitality, comult/counit algebra maps,
/// and the two antipode identities.
Report verifyHopfAxioms(const HopfAlgebraData& h);

/// Exact inverse of the antipode; throws Singular when S is not bijective.
Matrix antipodeInverse(const HopfAlgebraData& h);

bool isCharacter(const HopfAlgebraData& h, const Matrix& functional);
bool isGrouplike(const HopfAlgebraData& h, const Matrix& vector);

/// S~(h) = delta(h^(1)) S(h^(2)).
Matrix twistedAntipode(const HopfAlgebraData& h, const Character& delta);

/// Matrix of x -> v x (left multiplication by the vector v).
Matrix leftMultiplication(const HopfAlgebraData& h, const Matrix& v);

/// Checks delta(sigma) = 1 (throws NotModularPair otherwise) and computes
/// whether (sigma^{-1} S~)^2 = id.
ModularPair verifyModularPair(const HopfAlgebraData& h, const Character& delta,
                              const GrouplikeElement& sigma);

/// Group algebra k[G] from a multiplication table: table[i][j] = index of
/// g_i g_j.  Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}.
HopfAlgebraData groupAlgebra(const std::vector<std::vector<int>>& table, FieldTag field,
                             std::vector<std::string> labels = {});

/// Structure maps transposed with mult/comult and unit/counit swapped.
HopfAlgebraData dualHopf(const HopfAlgebraData& h);

/// The 4-dimensional Sweedler Hopf algebra, basis {1, g, x, gx}:
/// g^2 = 1, x^2 = 0, xg = -gx, Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x.
HopfAlgebraData sweedlerH4(FieldTag field = FieldTag::rationals());

/// Delta^{parts-1}: H -> H^{(x) parts}, parts >= 1 (parts = 1 is identity).
Matrix sweedlerSplit(const HopfAlgebraData& h, int parts);
/// Iterated multiplication H^{(x) parts} -> H; parts = 0 gives the unit.
Matrix iteratedMult(const HopfAlgebraData& h, int parts);

/// Exhaustive searches over the coefficient grid {-1,0,1}^d, enumerated in
/// lexicographic order with -1 < 0 < 1.  Intended for the tiny built-in
/// examples; returns nothing for dim > 10.
std::vector<Character> searchCharacters(const HopfAlgebraData& h);
std::vector<GrouplikeElement> searchGrouplikes(const HopfAlgebraData& h);
/// All modular pairs in involution found by the grid searches.
std::vector<ModularPair> searchInvolutionPairs(const HopfAlgebraData& h);

/// Named built-in Hopf algebras: k, c2, c3, c4, s3, h4, and "<name>-dual".
HopfAlgebraData builtinHopf(const std::string& name, FieldTag field = FieldTag::rationals());
std::vector<std::string> builtinHopfNames();

/// Named characters/grouplikes: always "eps"/"one"; grid-found extras are
/// named "delta"/"sigma" (numbered when several), grouplikes by basis label
/// when they are basis vectors.
std::vector<Character> namedCharacters(const HopfAlgebraData& h);
std::vector<GrouplikeElement> namedGrouplikes(const HopfAlgebraData& h);

}  // namespace hopfcyc
