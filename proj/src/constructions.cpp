#include "hopfcyc/constructions.hpp"

#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

namespace {

std::vector<int> repeated(int d, int count) { return std::vector<int>(count, d); }

long long ipow(int d, int e) {
    long long t = 1;
    for (int i = 0; i < e; ++i) t *= d;
    return t;
}

}  // namespace

ParaCyclicModule algebraCyclic(const AlgebraData& a, int N) {
    Report ax = verifyAlgebraAxioms(a);
    if (!ax.allPass()) throw Error("algebraCyclic: input algebra fails its axioms");
    int d = a.dim();
    FieldTag f = a.field();
    Matrix unitVec = a.unit;

    ParaCyclicModule x;
    x.N = N;
    x.field = f;
    x.faces.resize(N + 1);
    x.degens.resize(N + 1);
    for (int n = 0; n <= N; ++n) x.dims.push_back(int(ipow(d, n + 1)));

    for (int n = 1; n <= N; ++n) {
        auto src = repeated(d, n + 1);
        long long tgt = ipow(d, n);
        for (int i = 0; i < n; ++i)
            x.faces[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.mergeLegs(i, a.mult, d);
            }));
        // delta_n(a_0 ... a_n) = a_n a_0 (x) a_1 (x) ... (x) a_{n-1}
        x.faces[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
            e.moveLeg(n, 0);
            e.mergeLegs(0, a.mult, d);
        }));
    }
    for (int n = 0; n < N; ++n) {
        auto src = repeated(d, n + 1);
        long long tgt = ipow(d, n + 2);
        for (int i = 0; i <= n; ++i)
            x.degens[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.insertLeg(i + 1, unitVec);
            }));
    }
    for (int n = 0; n <= N; ++n)
        x.cyclic.push_back(operatorMatrix(repeated(d, n + 1), ipow(d, n + 1), f,
                                          [&](TensorElem& e) { e.moveLeg(n, 0); }));
    return x;
}

ParaCocyclicModule coalgebraCocyclic(const CoalgebraData& c, int N) {
    Report ax = verifyCoalgebraAxioms(c);
    if (!ax.allPass()) throw Error("coalgebraCocyclic: input coalgebra fails its axioms");
    int d = c.dim();
    FieldTag f = c.field();

    ParaCocyclicModule x;
    x.N = N;
    x.field = f;
    x.cofaces.resize(N + 1);
    x.codegens.resize(N + 1);
    for (int n = 0; n <= N; ++n) x.dims.push_back(int(ipow(d, n + 1)));

    for (int n = 0; n < N; ++n) {
        auto src = repeated(d, n + 1);
        long long tgt = ipow(d, n + 2);
        for (int i = 0; i <= n; ++i)
            x.cofaces[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.splitLeg(i, c.comult, d, d);
            }));
        // d_{n+1}(c_0 ... c_n) = c_0^(2) (x) c_1 (x) ... (x) c_n (x) c_0^(1)
        x.cofaces[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
            e.splitLeg(0, c.comult, d, d);
            e.moveLeg(0, n + 1);
        }));
    }
    for (int n = 1; n <= N; ++n) {
        auto src = repeated(d, n + 1);
        long long tgt = ipow(d, n);
        for (int i = 0; i < n; ++i)
            x.codegens[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.functionalLeg(i + 1, c.counit);
            }));
    }
    for (int n = 0; n <= N; ++n)
        x.cyclic.push_back(operatorMatrix(repeated(d, n + 1), ipow(d, n + 1), f,
                                          [&](TensorElem& e) { e.moveLeg(0, n); }));
    return x;
}

ParaCocyclicModule connesMoscoviciCocyclic(const HopfAlgebraData& h, const ModularPair& pair,
                                           int N) {
    if (!pair.inInvolution)
        throw NotInInvolution("Connes-Moscovici module needs a modular pair in involution");
    int d = h.dim();
    FieldTag f = h.field();
    Matrix st = twistedAntipode(h, pair.delta);
    const Matrix& sigma = pair.sigma.vector;

    ParaCocyclicModule x;
    x.N = N;
    x.field = f;
    x.cofaces.resize(N + 1);
    x.codegens.resize(N + 1);
    for (int n = 0; n <= N; ++n) x.dims.push_back(int(ipow(d, n)));

    for (int n = 0; n < N; ++n) {
        auto src = repeated(d, n);
        long long tgt = ipow(d, n + 1);
        x.cofaces[n].push_back(operatorMatrix(
            src, tgt, f, [&](TensorElem& e) { e.insertLeg(0, h.unit); }));
        for (int i = 1; i <= n; ++i)
            x.cofaces[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.splitLeg(i - 1, h.comult, d, d);
            }));
        x.cofaces[n].push_back(operatorMatrix(
            src, tgt, f, [&](TensorElem& e) { e.insertLeg(n, sigma); }));
    }
    for (int n = 1; n <= N; ++n) {
        auto src = repeated(d, n);
        long long tgt = ipow(d, n - 1);
        for (int i = 0; i < n; ++i)
            x.codegens[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.functionalLeg(i, h.counit);
            }));
    }
    // t_n = Delta^{n-1}(S~(h_1)) . (h_2 (x) ... (x) h_n (x) sigma)
    for (int n = 0; n <= N; ++n)
        x.cyclic.push_back(operatorMatrix(repeated(d, n), ipow(d, n), f,
                                          [&](TensorElem& e) {
            if (n == 0) return;  // t_0 = id on k
            e.mapLeg(0, st);
            e.insertLeg(n, sigma);
            for (int j = 1; j < n; ++j) e.splitLeg(0, h.comult, d, d);
            std::vector<int> perm;
            for (int j = 0; j < n; ++j) {
                perm.push_back(j);
                perm.push_back(n + j);
            }
            e.permuteLegs(perm);
            for (int j = 0; j < n; ++j) e.mergeLegs(j, h.mult, d);
        }));
    return x;
}

ParaCyclicModule krCyclic(const HopfAlgebraData& h, const ModularPair& pair, int N) {
    if (!pair.inInvolution)
        throw NotInInvolution("the cyclic module needs a modular pair in involution");
    int d = h.dim();
    FieldTag f = h.field();
    const Matrix& delta = pair.delta.functional;
    const Matrix& sigma = pair.sigma.vector;

    ParaCyclicModule x;
    x.N = N;
    x.field = f;
    x.faces.resize(N + 1);
    x.degens.resize(N + 1);
    for (int n = 0; n <= N; ++n) x.dims.push_back(int(ipow(d, n)));

    for (int n = 1; n <= N; ++n) {
        auto src = repeated(d, n);
        long long tgt = ipow(d, n - 1);
        x.faces[n].push_back(operatorMatrix(
            src, tgt, f, [&](TensorElem& e) { e.functionalLeg(0, h.counit); }));
        for (int i = 1; i < n; ++i)
            x.faces[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.mergeLegs(i - 1, h.mult, d);
            }));
        x.faces[n].push_back(operatorMatrix(
            src, tgt, f, [&](TensorElem& e) { e.functionalLeg(n - 1, delta); }));
    }
    for (int n = 0; n < N; ++n) {
        auto src = repeated(d, n);
        long long tgt = ipow(d, n + 1);
        for (int i = 0; i <= n; ++i)
            x.degens[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.insertLeg(i, h.unit);
            }));
    }
    // tau_n = delta(h_n^(2)) sigma S(h_1^(1) ... h_n^(1)) (x) h_1^(2) ... h_{n-1}^(2)
    for (int n = 0; n <= N; ++n)
        x.cyclic.push_back(operatorMatrix(repeated(d, n), ipow(d, n), f,
                                          [&](TensorElem& e) {
            if (n == 0) return;
            for (int j = n - 1; j >= 0; --j) e.splitLeg(j, h.comult, d, d);
            e.functionalLeg(2 * n - 1, delta);
            std::vector<int> perm;
            for (int j = 0; j < n; ++j) perm.push_back(2 * j);
            for (int j = 0; j + 1 < n; ++j) perm.push_back(2 * j + 1);
            e.permuteLegs(perm);
            for (int j = 1; j < n; ++j) e.mergeLegs(0, h.mult, d);
            e.mapLeg(0, h.antipode);
            e.insertLeg(0, sigma);
            e.mergeLegs(0, h.mult, d);
        }));
    return x;
}

void requireSaydLR(const HopfAlgebraData& h, const SAYDModuleData& m) {
    if (m.variant != SaydVariant::LR)
        throw SAYDViolation("this construction takes a left-module/right-comodule SAYD module");
    Report r = verifySAYD(h, m);
    if (!r.allPass()) {
        std::string what;
        for (const auto& n : r.failures()) what += " " + n;
        throw SAYDViolation("coefficients fail the SAYD checks:" + what);
    }
}

ParaCyclicModule algWithCoefficients(const HopfAlgebraData& h, const SAYDModuleData& m,
                                     int N) {
    requireSaydLR(h, m);
    int d = h.dim(), md = m.dim();
    FieldTag f = h.field();

    ParaCyclicModule x;
    x.N = N;
    x.field = f;
    x.faces.resize(N + 1);
    x.degens.resize(N + 1);
    for (int n = 0; n <= N; ++n) x.dims.push_back(int(md * ipow(d, n + 1)));

    auto legDims = [&](int n) {
        std::vector<int> dims{md};
        for (int i = 0; i <= n; ++i) dims.push_back(d);
        return dims;
    };

    for (int n = 1; n <= N; ++n) {
        auto src = legDims(n);
        long long tgt = md * ipow(d, n);
        for (int i = 0; i < n; ++i)
            x.faces[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.mergeLegs(1 + i, h.mult, d);
            }));
        // delta_n(m (x) h_0 ... h_n) = h_n^(1) m (x) h_n^(2) h_0 (x) h_1 ...
        x.faces[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
            e.splitLeg(n + 1, h.comult, d, d);
            e.moveLeg(n + 1, 0);
            e.mergeLegs(0, m.action, md);
            e.moveLeg(n + 1, 1);
            e.mergeLegs(1, h.mult, d);
        }));
    }
    for (int n = 0; n < N; ++n) {
        auto src = legDims(n);
        long long tgt = md * ipow(d, n + 2);
        for (int i = 0; i <= n; ++i)
            x.degens[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.insertLeg(i + 2, h.unit);
            }));
    }
    // tau(m (x) h_0 ... h_n) = h_n^(1) m (x) h_n^(2) (x) h_0 (x) ... (x) h_{n-1}
    for (int n = 0; n <= N; ++n)
        x.cyclic.push_back(operatorMatrix(legDims(n), md * ipow(d, n + 1), f,
                                          [&](TensorElem& e) {
            e.splitLeg(n + 1, h.comult, d, d);
            e.moveLeg(n + 1, 0);
            e.mergeLegs(0, m.action, md);
            e.moveLeg(n + 1, 1);
        }));
    return x;
}

ParaCocyclicModule coalgWithCoefficients(const HopfAlgebraData& h, const SAYDModuleData& m,
                                         int N) {
    requireSaydLR(h, m);
    Matrix sInv = antipodeInverse(h);
    int d = h.dim(), md = m.dim();
    FieldTag f = h.field();

    ParaCocyclicModule x;
    x.N = N;
    x.field = f;
    x.cofaces.resize(N + 1);
    x.codegens.resize(N + 1);
    for (int n = 0; n <= N; ++n) x.dims.push_back(int(ipow(d, n + 1) * md));

    auto legDims = [&](int n) {
        std::vector<int> dims(n + 1, d);
        dims.push_back(md);
        return dims;
    };

    for (int n = 0; n < N; ++n) {
        auto src = legDims(n);
        long long tgt = ipow(d, n + 2) * md;
        for (int i = 0; i <= n; ++i)
            x.cofaces[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.splitLeg(i, h.comult, d, d);
            }));
        // d_{n+1} = h_0^(2) (x) h_1 ... h_n (x) h_0^(1) S^{-1}(m^(1)) (x) m^(0)
        x.cofaces[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
            e.splitLeg(0, h.comult, d, d);
            e.splitLeg(n + 2, m.coaction, md, d);
            e.mapLeg(n + 3, sInv);
            e.moveLeg(0, n + 1);      // h_0^(1) in front of the coefficient legs
            e.moveLeg(n + 3, n + 2);  // S^{-1}(m^(1)) next to it
            e.mergeLegs(n + 1, h.mult, d);
        }));
    }
    for (int n = 1; n <= N; ++n) {
        auto src = legDims(n);
        long long tgt = ipow(d, n) * md;
        for (int i = 0; i < n; ++i)
            x.codegens[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.functionalLeg(i + 1, h.counit);
            }));
    }
    // t_n = h_1 (x) ... (x) h_n (x) h_0 S^{-1}(m^(1)) (x) m^(0)
    for (int n = 0; n <= N; ++n)
        x.cyclic.push_back(operatorMatrix(legDims(n), ipow(d, n + 1) * md, f,
                                          [&](TensorElem& e) {
            e.splitLeg(n + 1, m.coaction, md, d);
            e.mapLeg(n + 2, sInv);
            e.moveLeg(n + 2, 1);
            e.mergeLegs(0, h.mult, d);
            e.moveLeg(0, n);
        }));
    return x;
}

ParaCyclicModule kDualModule(const HopfAlgebraData& h, const SAYDModuleData& m, int N) {
    requireSaydLR(h, m);
    int d = h.dim(), md = m.dim();
    FieldTag f = h.field();

    ParaCyclicModule x;
    x.N = N;
    x.field = f;
    x.faces.resize(N + 1);
    x.degens.resize(N + 1);
    for (int n = 0; n <= N; ++n) x.dims.push_back(int(ipow(d, n + 1) * md));

    auto legDims = [&](int n) {
        std::vector<int> dims(n + 1, d);
        dims.push_back(md);
        return dims;
    };

    for (int n = 1; n <= N; ++n) {
        auto src = legDims(n);
        long long tgt = ipow(d, n) * md;
        for (int i = 0; i <= n; ++i)
            x.faces[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.functionalLeg(i, h.counit);
            }));
    }
    for (int n = 0; n < N; ++n) {
        auto src = legDims(n);
        long long tgt = ipow(d, n + 2) * md;
        for (int i = 0; i <= n; ++i)
            x.degens[n].push_back(operatorMatrix(src, tgt, f, [&](TensorElem& e) {
                e.splitLeg(i, h.comult, d, d);
            }));
    }
    // tau = h_n m^(1) (x) h_0 (x) ... (x) h_{n-1} (x) m^(0)
    for (int n = 0; n <= N; ++n)
        x.cyclic.push_back(operatorMatrix(legDims(n), ipow(d, n + 1) * md, f,
                                          [&](TensorElem& e) {
            e.splitLeg(n + 1, m.coaction, md, d);
            e.moveLeg(n + 2, n + 1);
            e.mergeLegs(n, h.mult, d);
            e.moveLeg(n, 0);
        }));

    // the printed formulas must reproduce hatDual(C^*_coalg) matrix-for-matrix
    ParaCyclicModule viaHat = hatDual(coalgWithCoefficients(h, m, N));
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i)
            if (x.faces[n][i] != viaHat.faces[n][i])
                throw MismatchWithHatDual("face " + std::to_string(i) + " at degree " +
                                          std::to_string(n));
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n; ++i)
            if (x.degens[n][i] != viaHat.degens[n][i])
                throw MismatchWithHatDual("degeneracy " + std::to_string(i) + " at degree " +
                                          std::to_string(n));
    for (int n = 0; n <= N; ++n)
        if (x.cyclic[n] != viaHat.cyclic[n])
            throw MismatchWithHatDual("cyclic operator at degree " + std::to_string(n));
    return x;
}

InvariantCyclic invariantCyclic(const HopfAlgebraData& h, const SAYDModuleData& m, int N) {
    ParaCyclicModule big = algWithCoefficients(h, m, N);
    int d = h.dim(), md = m.dim();

    std::vector<Matrix> incl;
    for (int n = 0; n <= N; ++n)
        incl.push_back(cotensorSubspace(m.coaction, md, diagonalLeftCoaction(h, n + 1),
                                        int(ipow(d, n + 1)), d));

    ParaCyclicModule x;
    x.N = N;
    x.field = h.field();
    x.faces.resize(N + 1);
    x.degens.resize(N + 1);
    for (int n = 0; n <= N; ++n) x.dims.push_back(incl[n].cols());
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i)
            x.faces[n].push_back(restrictToSubspace(big.faces[n][i], incl[n], incl[n - 1]));
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n; ++i)
            x.degens[n].push_back(restrictToSubspace(big.degens[n][i], incl[n], incl[n + 1]));
    for (int n = 0; n <= N; ++n)
        x.cyclic.push_back(restrictToSubspace(big.cyclic[n], incl[n], incl[n]));
    return InvariantCyclic{std::move(x), std::move(incl)};
}

CoinvariantCocyclic coinvariantCocyclic(const HopfAlgebraData& h, const SAYDModuleData& m,
                                        int N) {
    ParaCocyclicModule big = coalgWithCoefficients(h, m, N);

    std::vector<QuotientData> quot;
    for (int n = 0; n <= N; ++n) quot.push_back(hTensorQuotient(h, n, m));

    ParaCocyclicModule x;
    x.N = N;
    x.field = h.field();
    x.cofaces.resize(N + 1);
    x.codegens.resize(N + 1);
    for (int n = 0; n <= N; ++n) x.dims.push_back(quot[n].quotientDim);
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n + 1; ++i)
            x.cofaces[n].push_back(induceOnQuotient(big.cofaces[n][i], quot[n], quot[n + 1]));
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i < n; ++i)
            x.codegens[n].push_back(induceOnQuotient(big.codegens[n][i], quot[n], quot[n - 1]));
    for (int n = 0; n <= N; ++n)
        x.cyclic.push_back(induceOnQuotient(big.cyclic[n], quot[n], quot[n]));
    return CoinvariantCocyclic{std::move(x), std::move(quot)};
}

}  // namespace hopfcyc
