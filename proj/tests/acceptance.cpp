// Acceptance suite: runs every top-level correctness criterion end to end and
// prints one pass/fail line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "hopfcyc/cli.hpp"
#include "hopfcyc/theorems.hpp"

using namespace hopfcyc;

namespace {

const FieldTag Q = FieldTag::rationals();
int failures = 0;

void criterion(int id, const std::string& desc, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
        body();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    if (pass) {
        std::printf("criterion %2d: PASS — %s (%.1fs)\n", id, desc.c_str(), secs);
    } else {
        std::printf("criterion %2d: FAIL — %s: %s (%.1fs)\n", id, desc.c_str(),
                    detail.c_str(), secs);
        ++failures;
    }
    std::fflush(stdout);
}

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(what);
}

ModularPair trivialPair(const HopfAlgebraData& h) {
    return verifyModularPair(h, Character{"eps", h.counit}, GrouplikeElement{"one", h.unit});
}

ModularPair twistedPair(const HopfAlgebraData& h) {
    for (const auto& p : searchInvolutionPairs(h))
        if (p.delta.functional != h.counit) return p;
    throw Error("no involution pair with a nontrivial character");
}

std::vector<int> dimsOf(const HomologyReport& r) {
    std::vector<int> out;
    for (auto& [n, d] : r.dims) out.push_back(d);
    return out;
}

void requireTwoPipelineAgreement(const ParaCyclicModule& x, const std::string& name) {
    int upTo = x.N - 1;
    require(cyclicDims(x, upTo).sameDims(cyclicDimsConnes(x, upTo)),
            "pipeline disagreement on " + name);
}

void requireTwoPipelineAgreement(const ParaCocyclicModule& x, const std::string& name) {
    int upTo = x.N - 1;
    require(cyclicDims(x, upTo).sameDims(cyclicDimsConnes(x, upTo)),
            "pipeline disagreement on " + name);
}

}  // namespace

int main() {
    HopfAlgebraData c2 = builtinHopf("c2");
    HopfAlgebraData h4 = builtinHopf("h4");
    ModularPair c2Pair = trivialPair(c2);       // (eps, 1)
    ModularPair h4Pair = twistedPair(h4);       // (delta, 1), delta(g) = -1
    SAYDModuleData mC2 = saydFromModularPair(c2, c2Pair);
    SAYDModuleData mH4 = saydFromModularPair(h4, h4Pair);

    criterion(1, "Hopf axiom suites for the built-ins, duals, and sabotage fixtures", [&] {
        auto start = std::chrono::steady_clock::now();
        for (const auto& name : builtinHopfNames())
            require(verifyHopfAxioms(builtinHopf(name)).allPass(), name + " fails axioms");
        HopfAlgebraData bad = builtinHopf("c2");
        bad.antipode = Matrix::zero(2, 2, Q);
        bad.antipodeInv.reset();
        Report r = verifyHopfAxioms(bad);
        auto fails = r.failures();
        require(fails.size() == 2 && fails[0] == "antipode-left" &&
                    fails[1] == "antipode-right",
                "sabotaged antipode not reported by name");
        HopfAlgebraData bad2 = builtinHopf("c3");
        bad2.comult = Matrix::zero(9, 3, Q);
        Report r2 = verifyHopfAxioms(bad2);
        require(!r2.allPass(), "sabotaged comult undetected");
        bool coassocNamed = false;
        for (const auto& f : r2.failures())
            if (f == "counit-left") coassocNamed = true;
        require(coassocNamed, "sabotaged comult failure not named");
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(secs < 5.0, "axiom suite exceeded 5 s");
    });

    std::vector<std::pair<std::string, RelationReport>> cyclicReports, cocyclicReports;
    criterion(2, "relation suites for every construction at the stated strength", [&] {
        auto start = std::chrono::steady_clock::now();
        auto needCyclic = [&](ParaCyclicModule x, const std::string& name) {
            RelationReport r = checkRelations(x);
            require(r.isCyclic, name + " not cyclic");
            cyclicReports.emplace_back(name, std::move(r));
        };
        auto needParacyclic = [&](ParaCyclicModule x, const std::string& name) {
            RelationReport r = checkRelations(x);
            require(r.paracyclicOk, name + " fails paracyclic relations");
            cyclicReports.emplace_back(name, std::move(r));
        };
        auto needCocyclic = [&](ParaCocyclicModule x, const std::string& name) {
            RelationReport r = checkRelations(x);
            require(r.isCyclic, name + " not cocyclic");
            cocyclicReports.emplace_back(name, std::move(r));
        };
        auto needParacocyclic = [&](ParaCocyclicModule x, const std::string& name) {
            RelationReport r = checkRelations(x);
            require(r.paracyclicOk, name + " fails paracocyclic relations");
            cocyclicReports.emplace_back(name, std::move(r));
        };

        needCyclic(algebraCyclic(c2.algebra(), 4), "A-natural(k[C2], N=4)");
        needCocyclic(coalgebraCocyclic(c2.coalgebra(), 4), "C-natural(k[C2], N=4)");
        needCocyclic(connesMoscoviciCocyclic(c2, c2Pair, 4), "CM(k[C2], N=4)");
        needCyclic(krCyclic(c2, c2Pair, 4), "KR(k[C2], N=4)");
        needCyclic(algebraCyclic(h4.algebra(), 3), "A-natural(H4, N=3)");
        needCocyclic(coalgebraCocyclic(h4.coalgebra(), 3), "C-natural(H4, N=3)");
        needCocyclic(connesMoscoviciCocyclic(h4, h4Pair, 3), "CM(H4, N=3)");
        needCyclic(krCyclic(h4, h4Pair, 3), "KR(H4, N=3)");
        needParacyclic(algWithCoefficients(h4, mH4, 3), "C_alg(H4, k_(delta,sigma), N=3)");
        needParacocyclic(coalgWithCoefficients(h4, mH4, 3),
                         "C_coalg(H4, k_(delta,sigma), N=3)");
        needParacyclic(kDualModule(h4, mH4, 3), "K(H4, k_(delta,sigma), N=3)");
        needCyclic(invariantCyclic(h4, mH4, 3).module, "invariant(H4, N=3)");
        needCocyclic(coinvariantCocyclic(h4, mH4, 3).module, "coinvariant(H4, N=3)");

        // every simplicial identity and every one of the 4 + 4 extra
        // relations appears as an individually asserted item
        std::set<std::string> cyclicNames, cocyclicNames;
        for (auto& [name, r] : cyclicReports)
            for (auto& item : r.report.items) cyclicNames.insert(item.name);
        for (auto& [name, r] : cocyclicReports)
            for (auto& item : r.report.items) cocyclicNames.insert(item.name);
        for (const char* want : {"face-face", "degen-degen", "face-degen", "delta-tau",
                                 "delta0-tau", "sigma-tau", "sigma0-tau"})
            require(cyclicNames.count(want), std::string("missing relation family ") + want);
        for (const char* want :
             {"coface-coface", "codegen-codegen", "codegen-coface", "t-coface", "t-coface0",
              "t-codegen", "t-codegen0"})
            require(cocyclicNames.count(want),
                    std::string("missing relation family ") + want);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(secs < 120.0, "relation suite exceeded 2 min");
    });

    criterion(3, "duality functors: dual-side checkers and printed K formulas", [&] {
        require(checkRelations(hatDual(coalgebraCocyclic(c2.coalgebra(), 4))).isCyclic,
                "hat(C-natural(k[C2])) not cyclic");
        require(checkRelations(hatDual(coalgebraCocyclic(h4.coalgebra(), 3))).isCyclic,
                "hat(C-natural(H4)) not cyclic");
        require(checkRelations(hatDual(connesMoscoviciCocyclic(c2, c2Pair, 4))).isCyclic,
                "hat(CM(k[C2])) not cyclic");
        require(checkRelations(hatDual(connesMoscoviciCocyclic(h4, h4Pair, 3))).isCyclic,
                "hat(CM(H4)) not cyclic");
        require(
            checkRelations(hatDual(coalgWithCoefficients(h4, mH4, 3))).paracyclicOk,
            "hat(C_coalg(H4)) fails paracyclic relations");

        require(checkRelations(checkDual(algebraCyclic(c2.algebra(), 4))).isCyclic,
                "check(A-natural(k[C2])) not cocyclic");
        require(checkRelations(checkDual(algebraCyclic(h4.algebra(), 3))).isCyclic,
                "check(A-natural(H4)) not cocyclic");
        require(checkRelations(checkDual(krCyclic(c2, c2Pair, 4))).isCyclic,
                "check(KR(k[C2])) not cocyclic");
        require(checkRelations(checkDual(krCyclic(h4, h4Pair, 3))).isCyclic,
                "check(KR(H4)) not cocyclic");
        require(checkRelations(checkDual(algWithCoefficients(h4, mH4, 3))).paracyclicOk,
                "check(C_alg(H4)) fails paracocyclic relations");

        // kDualModule internally asserts printed formulas == hatDual output
        kDualModule(c2, mC2, 4);
        kDualModule(h4, mH4, 3);
    });

    criterion(4, "contracting homotopies: bh + hb = id in degrees 1..3, vanishing dims",
              [&] {
        Matrix phiC2 = Matrix::fromStrings({{"1", "0"}}, Q);
        Matrix phiH4 = Matrix::fromStrings({{"1", "0", "0", "0"}}, Q);
        for (auto& [alg, phi, name] :
             {std::tuple<AlgebraData, Matrix, const char*>{c2.algebra(), phiC2, "k[C2]"},
              std::tuple<AlgebraData, Matrix, const char*>{h4.algebra(), phiH4, "H4"}}) {
            HomotopyReport r = contractingHomotopyAlgebra(alg, phi, 4);
            int identityDegrees = 0;
            for (auto& item : r.identities.items)
                if (item.name == "homotopy-identity") {
                    require(item.passed(), std::string(name) + " algebra homotopy fails");
                    ++identityDegrees;
                }
            require(identityDegrees == 3, "expected homotopy identities in degrees 1..3");
            for (int n = 1; n <= 3; ++n)
                require(r.vanishing.dimAt(n) == 0,
                        std::string(name) + " dual Hochschild cohomology nonzero");
        }
        for (auto& [coalg, name] :
             {std::pair<CoalgebraData, const char*>{c2.coalgebra(), "k[C2]"},
              std::pair<CoalgebraData, const char*>{h4.coalgebra(), "H4"}}) {
            HomotopyReport r = contractingHomotopyCoalgebra(
                coalg, coalg.space.dim == 2 ? c2.unit : h4.unit, 4);
            for (auto& item : r.identities.items)
                if (item.name == "homotopy-identity")
                    require(item.passed(), std::string(name) + " coalgebra homotopy fails");
            for (int n = 1; n <= 3; ++n)
                require(r.vanishing.dimAt(n) == 0,
                        std::string(name) + " dual Hochschild homology nonzero");
        }
    });

    criterion(5, "theta is a morphism of paracyclic modules and descends", [&] {
        for (auto& [h, m, N, name] :
             {std::tuple<HopfAlgebraData, SAYDModuleData, int, const char*>{c2, mC2, 4,
                                                                            "k[C2]"},
              std::tuple<HopfAlgebraData, SAYDModuleData, int, const char*>{h4, mH4, 3,
                                                                            "H4"}}) {
            ParaCyclicModule k = kDualModule(h, m, N);
            ParaCyclicModule calg = algWithCoefficients(h, m, N);
            GradedMap theta;
            for (int n = 0; n <= N; ++n) theta.mats.push_back(thetaMap(h, m, n));
            require(verifyMorphism(theta, k, calg).allPass(),
                    std::string(name) + ": theta is not a morphism");
            require(verifyThetaDescent(h, m, N).allPass(),
                    std::string(name) + ": descent fails");
        }
    });

    criterion(6, "induced theta is an isomorphism of cyclic modules, dims agree", [&] {
        require(checkTheorem31(c2, mC2, 4).allPass(), "k[C2] case fails");
        require(checkTheorem31(h4, mH4, 3).allPass(), "H4 case fails");
    });

    criterion(7, "coefficient identifications at M = k for both fixtures", [&] {
        for (auto& [h, pair, m, N, name] :
             {std::tuple<HopfAlgebraData, ModularPair, SAYDModuleData, int, const char*>{
                  c2, c2Pair, mC2, 4, "k[C2]"},
              std::tuple<HopfAlgebraData, ModularPair, SAYDModuleData, int, const char*>{
                  h4, h4Pair, mH4, 3, "H4"}}) {
            InvariantCyclic inv = invariantCyclic(h, m, N);
            ParaCyclicModule kr = krCyclic(h, pair, N);
            GradedMap f = invariantKRIdentification(h, m, inv, kr);
            require(verifyMorphism(f, inv.module, kr).allPass(),
                    std::string(name) + ": invariant != KR");
            CoinvariantCocyclic co = coinvariantCocyclic(h, m, N);
            ParaCocyclicModule cm = connesMoscoviciCocyclic(h, pair, N);
            GradedMap g = coinvariantCMIdentification(h, m, co, cm);
            require(verifyMorphism(g, co.module, cm).allPass(),
                    std::string(name) + ": coinvariant != CM");
            for (int n = 0; n <= N; ++n)
                require(f.mats[n].rank() == inv.module.dims[n] &&
                            g.mats[n].rank() == co.module.dims[n],
                        std::string(name) + ": identification not invertible");
        }
    });

    criterion(8, "evaluation pairing against the dual: morphism and invertibility", [&] {
        PairingCheck pc = checkPairingProp(c2, c2Pair, 3);
        require(pc.hopfPairing.allPass(), "Hopf pairing conditions fail");
        require(pc.modulePairing.allPass(), "module pairing conditions fail");
        require(pc.morphism.allPass(), "pairing map is not a morphism");
        require(pc.invertibility.allPass(), "pairing map not invertible through degree 3");
    });

    criterion(9, "homology oracles and two-pipeline agreement on cyclic fixtures", [&] {
        ParaCyclicModule anK = algebraCyclic(builtinHopf("k").algebra(), 4);
        require(dimsOf(cyclicDims(anK, 3)) == std::vector<int>{1, 0, 1, 0},
                "HC(A-natural(k)) wrong via bicomplex");
        require(dimsOf(cyclicDimsConnes(anK, 3)) == std::vector<int>{1, 0, 1, 0},
                "HC(A-natural(k)) wrong via quotient pipeline");
        ParaCyclicModule anC2 = algebraCyclic(c2.algebra(), 4);
        require(dimsOf(hochschildDims(anC2, 3)) == std::vector<int>{2, 0, 0, 0},
                "HH(A-natural(k[C2])) wrong");

        requireTwoPipelineAgreement(anK, "A-natural(k)");
        requireTwoPipelineAgreement(anC2, "A-natural(k[C2])");
        requireTwoPipelineAgreement(algebraCyclic(h4.algebra(), 3), "A-natural(H4)");
        requireTwoPipelineAgreement(krCyclic(c2, c2Pair, 4), "KR(k[C2])");
        requireTwoPipelineAgreement(krCyclic(h4, h4Pair, 3), "KR(H4)");
        requireTwoPipelineAgreement(invariantCyclic(c2, mC2, 4).module,
                                    "invariant(k[C2])");
        requireTwoPipelineAgreement(invariantCyclic(h4, mH4, 3).module, "invariant(H4)");
        requireTwoPipelineAgreement(coalgebraCocyclic(c2.coalgebra(), 4),
                                    "C-natural(k[C2])");
        requireTwoPipelineAgreement(connesMoscoviciCocyclic(c2, c2Pair, 4), "CM(k[C2])");
        requireTwoPipelineAgreement(connesMoscoviciCocyclic(h4, h4Pair, 3), "CM(H4)");
        requireTwoPipelineAgreement(coinvariantCocyclic(c2, mC2, 4).module,
                                    "coinvariant(k[C2])");
        requireTwoPipelineAgreement(coinvariantCocyclic(h4, mH4, 3).module,
                                    "coinvariant(H4)");
    });

    criterion(10, "repeated CLI runs produce byte-identical reports", [&] {
        std::vector<std::vector<std::string>> commands = {
            {"examples"},
            {"verify-hopf", "h4"},
            {"build", "--construction", "invariant", "--hopf", "h4", "--pair",
             "delta,one", "--N", "2"},
            {"homology", "--kind", "cyclic", "--construction", "kr", "--hopf", "c2",
             "--pair", "eps,one", "--N", "3"},
            {"check-lemma23", "--hopf", "c2", "--N", "3"},
        };
        for (const auto& cmd : commands) {
            CliResult a = runCli(cmd);
            CliResult b = runCli(cmd);
            require(a.exitCode == 0, "command failed: " + cmd[0]);
            require(a.exitCode == b.exitCode && a.output == b.output,
                    "nondeterministic output for " + cmd[0]);
        }
    });

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
