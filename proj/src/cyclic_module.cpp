#include "hopfcyc/cyclic_module.hpp"

namespace hopfcyc {

namespace {

void shapeCheck(bool ok, const std::string& what, int n, int i = -1) {
    if (!ok)
        throw ShapeMismatch(what + " at degree " + std::to_string(n) +
                            (i >= 0 ? " index " + std::to_string(i) : ""));
}

}  // namespace

void validateShapes(const ParaCyclicModule& x) {
    int N = x.N;
    shapeCheck(int(x.dims.size()) == N + 1, "dims length", N);
    shapeCheck(int(x.faces.size()) == N + 1, "faces length", N);
    shapeCheck(int(x.degens.size()) == N + 1, "degens length", N);
    shapeCheck(int(x.cyclic.size()) == N + 1, "cyclic length", N);
    shapeCheck(x.faces[0].empty(), "faces out of degree 0", 0);
    shapeCheck(x.degens[N].empty(), "degeneracies out of degree N", N);
    for (int n = 1; n <= N; ++n) {
        shapeCheck(int(x.faces[n].size()) == n + 1, "face count", n);
        for (int i = 0; i <= n; ++i)
            shapeCheck(x.faces[n][i].rows() == x.dims[n - 1] &&
                           x.faces[n][i].cols() == x.dims[n],
                       "face shape", n, i);
    }
    for (int n = 0; n < N; ++n) {
        shapeCheck(int(x.degens[n].size()) == n + 1, "degeneracy count", n);
        for (int i = 0; i <= n; ++i)
            shapeCheck(x.degens[n][i].rows() == x.dims[n + 1] &&
                           x.degens[n][i].cols() == x.dims[n],
                       "degeneracy shape", n, i);
    }
    for (int n = 0; n <= N; ++n)
        shapeCheck(x.cyclic[n].rows() == x.dims[n] && x.cyclic[n].cols() == x.dims[n],
                   "cyclic operator shape", n);
}

void validateShapes(const ParaCocyclicModule& x) {
    int N = x.N;
    shapeCheck(int(x.dims.size()) == N + 1, "dims length", N);
    shapeCheck(int(x.cofaces.size()) == N + 1, "cofaces length", N);
    shapeCheck(int(x.codegens.size()) == N + 1, "codegens length", N);
    shapeCheck(int(x.cyclic.size()) == N + 1, "cyclic length", N);
    shapeCheck(x.cofaces[N].empty(), "cofaces out of degree N", N);
    shapeCheck(x.codegens[0].empty(), "codegeneracies out of degree 0", 0);
    for (int n = 0; n < N; ++n) {
        shapeCheck(int(x.cofaces[n].size()) == n + 2, "coface count", n);
        for (int i = 0; i <= n + 1; ++i)
            shapeCheck(x.cofaces[n][i].rows() == x.dims[n + 1] &&
                           x.cofaces[n][i].cols() == x.dims[n],
                       "coface shape", n, i);
    }
    for (int n = 1; n <= N; ++n) {
        shapeCheck(int(x.codegens[n].size()) == n, "codegeneracy count", n);
        for (int i = 0; i < n; ++i)
            shapeCheck(x.codegens[n][i].rows() == x.dims[n - 1] &&
                           x.codegens[n][i].cols() == x.dims[n],
                       "codegeneracy shape", n, i);
    }
    for (int n = 0; n <= N; ++n)
        shapeCheck(x.cyclic[n].rows() == x.dims[n] && x.cyclic[n].cols() == x.dims[n],
                   "cyclic operator shape", n);
}

namespace {

// Shared tail of both checkers: invertibility and order of the cyclic
// operators.  Writes cyclicOrder and the isCyclic flag.
void cyclicOrderScan(const std::vector<Matrix>& taus, const std::vector<int>& dims, int N,
                     const char* invName, RelationReport& out) {
    bool cyclic = true;
    out.cyclicOrder.assign(N + 1, std::nullopt);
    for (int n = 0; n <= N; ++n) {
        out.report.add(invName, taus[n].rank() == dims[n], n);
        Matrix power = taus[n];
        for (int k = 1; k <= n + 1; ++k) {
            if (power.isIdentity()) {
                out.cyclicOrder[n] = k;
                break;
            }
            if (k <= n) power = power * taus[n];
        }
        // tau_n^{n+1} = id iff the least order divides n+1
        if (!out.cyclicOrder[n] || (n + 1) % *out.cyclicOrder[n] != 0) cyclic = false;
    }
    out.isCyclic = cyclic;
}

}  // namespace

RelationReport checkRelations(const ParaCyclicModule& x) {
    validateShapes(x);
    const int N = x.N;
    RelationReport out;
    Report simp, extra;

    // delta_i delta_j = delta_{j-1} delta_i, i < j
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                simp.add("face-face",
                         x.faces[n - 1][i] * x.faces[n][j] ==
                             x.faces[n - 1][j - 1] * x.faces[n][i],
                         n, i * 100 + j);
    // sigma_i sigma_j = sigma_{j+1} sigma_i, i <= j
    for (int n = 0; n + 2 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                simp.add("degen-degen",
                         x.degens[n + 1][i] * x.degens[n][j] ==
                             x.degens[n + 1][j + 1] * x.degens[n][i],
                         n, i * 100 + j);
    // delta_i sigma_j
    for (int n = 0; n + 1 <= N; ++n)
        for (int i = 0; i <= n + 1; ++i)
            for (int j = 0; j <= n; ++j) {
                Matrix lhs = x.faces[n + 1][i] * x.degens[n][j];
                bool ok;
                if (i == j || i == j + 1)
                    ok = lhs.isIdentity();
                else if (i < j)
                    ok = lhs == x.degens[n - 1][j - 1] * x.faces[n][i];
                else
                    ok = lhs == x.degens[n - 1][j] * x.faces[n][i - 1];
                simp.add("face-degen", ok, n, i * 100 + j);
            }

    // the four extra relations of a (para)cyclic module
    for (int n = 1; n <= N; ++n) {
        for (int i = 1; i <= n; ++i)
            extra.add("delta-tau",
                      x.faces[n][i] * x.cyclic[n] == x.cyclic[n - 1] * x.faces[n][i - 1], n,
                      i);
        extra.add("delta0-tau", x.faces[n][0] * x.cyclic[n] == x.faces[n][n], n);
    }
    for (int n = 0; n + 1 <= N; ++n) {
        for (int i = 1; i <= n; ++i)
            extra.add("sigma-tau",
                      x.degens[n][i] * x.cyclic[n] == x.cyclic[n + 1] * x.degens[n][i - 1],
                      n, i);
        extra.add("sigma0-tau",
                  x.degens[n][0] * x.cyclic[n] ==
                      x.cyclic[n + 1] * x.cyclic[n + 1] * x.degens[n][n],
                  n);
    }

    out.simplicialOk = simp.allPass();
    bool extraOk = extra.allPass();
    out.report.append(simp);
    out.report.append(extra);
    cyclicOrderScan(x.cyclic, x.dims, N, "tau-invertible", out);
    out.paracyclicOk = out.simplicialOk && extraOk && out.report.allPass();
    out.isCyclic = out.isCyclic && out.paracyclicOk;
    return out;
}

RelationReport checkRelations(const ParaCocyclicModule& x) {
    validateShapes(x);
    const int N = x.N;
    RelationReport out;
    Report simp, extra;

    // d_j d_i = d_i d_{j-1}, i < j
    for (int n = 0; n + 2 <= N; ++n)
        for (int j = 1; j <= n + 2; ++j)
            for (int i = 0; i < j; ++i)
                simp.add("coface-coface",
                         x.cofaces[n + 1][j] * x.cofaces[n][i] ==
                             x.cofaces[n + 1][i] * x.cofaces[n][j - 1],
                         n, i * 100 + j);
    // s_j s_i = s_i s_{j+1}, i <= j
    for (int n = 2; n <= N; ++n)
        for (int j = 0; j + 2 <= n; ++j)
            for (int i = 0; i <= j; ++i)
                simp.add("codegen-codegen",
                         x.codegens[n - 1][j] * x.codegens[n][i] ==
                             x.codegens[n - 1][i] * x.codegens[n][j + 1],
                         n, i * 100 + j);
    // s_j d_i
    for (int n = 0; n + 1 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                Matrix lhs = x.codegens[n + 1][j] * x.cofaces[n][i];
                bool ok;
                if (i == j || i == j + 1)
                    ok = lhs.isIdentity();
                else if (i < j)
                    ok = lhs == x.cofaces[n - 1][i] * x.codegens[n][j - 1];
                else
                    ok = lhs == x.cofaces[n - 1][i - 1] * x.codegens[n][j];
                simp.add("codegen-coface", ok, n, i * 100 + j);
            }

    // the four extra relations of a (para)cocyclic module
    for (int n = 0; n + 1 <= N; ++n) {
        for (int i = 1; i <= n + 1; ++i)
            extra.add("t-coface",
                      x.cyclic[n + 1] * x.cofaces[n][i] == x.cofaces[n][i - 1] * x.cyclic[n],
                      n, i);
        extra.add("t-coface0",
                  x.cyclic[n + 1] * x.cofaces[n][0] == x.cofaces[n][n + 1], n);
    }
    for (int n = 1; n <= N; ++n) {
        for (int i = 1; i < n; ++i)
            extra.add("t-codegen",
                      x.cyclic[n - 1] * x.codegens[n][i] ==
                          x.codegens[n][i - 1] * x.cyclic[n],
                      n, i);
        extra.add("t-codegen0",
                  x.cyclic[n - 1] * x.codegens[n][0] ==
                      x.codegens[n][n - 1] * x.cyclic[n] * x.cyclic[n],
                  n);
    }

    out.simplicialOk = simp.allPass();
    bool extraOk = extra.allPass();
    out.report.append(simp);
    out.report.append(extra);
    cyclicOrderScan(x.cyclic, x.dims, N, "t-invertible", out);
    out.paracyclicOk = out.simplicialOk && extraOk && out.report.allPass();
    out.isCyclic = out.isCyclic && out.paracyclicOk;
    return out;
}

ParaCyclicModule hatDual(const ParaCocyclicModule& x) {
    validateShapes(x);
    int N = x.N;
    ParaCyclicModule y;
    y.N = N;
    y.field = x.field;
    y.dims = x.dims;
    y.faces.resize(N + 1);
    y.degens.resize(N + 1);
    y.cyclic.reserve(N + 1);
    for (int n = 0; n <= N; ++n) {
        try {
            y.cyclic.push_back(x.cyclic[n].inverse());
        } catch (const Singular&) {
            throw Singular("hatDual: t_" + std::to_string(n) + " is not invertible");
        }
    }
    for (int n = 1; n <= N; ++n) {
        y.faces[n].push_back(x.codegens[n][n - 1] * x.cyclic[n]);  // delta_0 = s_{n-1} t_n
        for (int i = 1; i <= n; ++i) y.faces[n].push_back(x.codegens[n][i - 1]);
    }
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n; ++i) y.degens[n].push_back(x.cofaces[n][i]);
    return y;
}

ParaCocyclicModule checkDual(const ParaCyclicModule& x) {
    validateShapes(x);
    int N = x.N;
    ParaCocyclicModule y;
    y.N = N;
    y.field = x.field;
    y.dims = x.dims;
    y.cofaces.resize(N + 1);
    y.codegens.resize(N + 1);
    y.cyclic.reserve(N + 1);
    for (int n = 0; n <= N; ++n) {
        try {
            y.cyclic.push_back(x.cyclic[n].inverse());
        } catch (const Singular&) {
            throw Singular("checkDual: tau_" + std::to_string(n) + " is not invertible");
        }
    }
    for (int n = 0; n < N; ++n) {
        y.cofaces[n].push_back(x.cyclic[n + 1] * x.degens[n][n]);  // d_0 = tau_{n+1} sigma_n
        for (int i = 1; i <= n + 1; ++i) y.cofaces[n].push_back(x.degens[n][i - 1]);
    }
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i < n; ++i) y.codegens[n].push_back(x.faces[n][i]);
    return y;
}

Report verifyMorphism(const GradedMap& f, const ParaCyclicModule& x,
                      const ParaCyclicModule& y) {
    validateShapes(x);
    validateShapes(y);
    int N = x.N;
    if (y.N != N || int(f.mats.size()) != N + 1)
        throw ShapeMismatch("morphism truncation mismatch");
    for (int n = 0; n <= N; ++n)
        if (f.mats[n].cols() != x.dims[n] || f.mats[n].rows() != y.dims[n])
            throw ShapeMismatch("morphism component shape at degree " + std::to_string(n));
    Report r;
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i)
            r.add("face-commute", f.mats[n - 1] * x.faces[n][i] == y.faces[n][i] * f.mats[n],
                  n, i);
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n; ++i)
            r.add("degen-commute",
                  f.mats[n + 1] * x.degens[n][i] == y.degens[n][i] * f.mats[n], n, i);
    r.addSkipped("degen-commute-out-of-truncation", N);
    for (int n = 0; n <= N; ++n)
        r.add("tau-commute", f.mats[n] * x.cyclic[n] == y.cyclic[n] * f.mats[n], n);
    return r;
}

Report verifyMorphism(const GradedMap& f, const ParaCocyclicModule& x,
                      const ParaCocyclicModule& y) {
    validateShapes(x);
    validateShapes(y);
    int N = x.N;
    if (y.N != N || int(f.mats.size()) != N + 1)
        throw ShapeMismatch("morphism truncation mismatch");
    for (int n = 0; n <= N; ++n)
        if (f.mats[n].cols() != x.dims[n] || f.mats[n].rows() != y.dims[n])
            throw ShapeMismatch("morphism component shape at degree " + std::to_string(n));
    Report r;
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n + 1; ++i)
            r.add("coface-commute",
                  f.mats[n + 1] * x.cofaces[n][i] == y.cofaces[n][i] * f.mats[n], n, i);
    r.addSkipped("coface-commute-out-of-truncation", N);
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i < n; ++i)
            r.add("codegen-commute",
                  f.mats[n - 1] * x.codegens[n][i] == y.codegens[n][i] * f.mats[n], n, i);
    for (int n = 0; n <= N; ++n)
        r.add("t-commute", f.mats[n] * x.cyclic[n] == y.cyclic[n] * f.mats[n], n);
    return r;
}

ParaCocyclicModule transposeDual(const ParaCyclicModule& x) {
    validateShapes(x);
    int N = x.N;
    ParaCocyclicModule y;
    y.N = N;
    y.field = x.field;
    y.dims = x.dims;
    y.cofaces.resize(N + 1);
    y.codegens.resize(N + 1);
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n + 1; ++i)
            y.cofaces[n].push_back(x.faces[n + 1][i].transpose());
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i < n; ++i) y.codegens[n].push_back(x.degens[n - 1][i].transpose());
    for (int n = 0; n <= N; ++n) y.cyclic.push_back(x.cyclic[n].transpose());
    return y;
}

ParaCyclicModule transposeDual(const ParaCocyclicModule& x) {
    validateShapes(x);
    int N = x.N;
    ParaCyclicModule y;
    y.N = N;
    y.field = x.field;
    y.dims = x.dims;
    y.faces.resize(N + 1);
    y.degens.resize(N + 1);
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i) y.faces[n].push_back(x.cofaces[n - 1][i].transpose());
    for (int n = 0; n < N; ++n)
        for (int i = 0; i <= n; ++i)
            y.degens[n].push_back(x.codegens[n + 1][i].transpose());
    for (int n = 0; n <= N; ++n) y.cyclic.push_back(x.cyclic[n].transpose());
    return y;
}

}  // namespace hopfcyc
