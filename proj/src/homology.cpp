#include "hopfcyc/homology.hpp"

namespace hopfcyc {

namespace {

Matrix alternatingSum(const std::vector<Matrix>& ops, int count) {
    Matrix acc = ops[0];
    for (int i = 1; i < count; ++i)
        acc = (i % 2 == 0) ? acc + ops[i] : acc - ops[i];
    return acc;
}

// b' omits the last face (the wrap-around one).
Matrix bPrime(const ParaCyclicModule& x, int n) {
    return alternatingSum(x.faces[n], n);
}

Matrix signedCyclic(const ParaCyclicModule& x, int n) {
    // lambda_n = (-1)^n tau_n
    return (n % 2 == 0) ? x.cyclic[n] : -x.cyclic[n];
}

Matrix normOperator(const ParaCyclicModule& x, int n) {
    Matrix lambda = signedCyclic(x, n);
    Matrix acc = Matrix::identity(x.dims[n], x.field);
    Matrix power = lambda;
    for (int i = 1; i <= n; ++i) {
        acc = acc + power;
        if (i < n) power = power * lambda;
    }
    return acc;
}

std::string truncationNote(int N, int guaranteed, int upTo) {
    std::string note = "degrees <= " + std::to_string(guaranteed) +
                       " guaranteed exact at truncation N = " + std::to_string(N);
    if (upTo > guaranteed) note += "; higher degrees boundary-affected";
    return note;
}

}  // namespace

Matrix hochschildBoundary(const ParaCyclicModule& x, int n) {
    if (n < 1 || n > x.N) throw ShapeMismatch("boundary degree out of range");
    return alternatingSum(x.faces[n], n + 1);
}

Matrix hochschildCoboundary(const ParaCocyclicModule& x, int n) {
    if (n < 0 || n >= x.N) throw ShapeMismatch("coboundary degree out of range");
    return alternatingSum(x.cofaces[n], n + 2);
}

HomologyReport hochschildDims(const ParaCyclicModule& x, int upTo) {
    validateShapes(x);
    if (upTo < 0 || upTo > x.N - 1)
        throw ShapeMismatch("hochschildDims needs 0 <= upTo <= N-1");
    std::vector<Matrix> b{Matrix()};  // b[0] unused
    for (int n = 1; n <= upTo + 1; ++n) b.push_back(hochschildBoundary(x, n));
    for (int n = 1; n <= upTo; ++n)
        if (!(b[n] * b[n + 1]).isZero())
            throw NotAComplex("b o b != 0 at degree " + std::to_string(n + 1));

    HomologyReport r;
    r.kind = HomologyKind::Hochschild;
    r.direction = Direction::Homology;
    for (int n = 0; n <= upTo; ++n) {
        int cycles = (n == 0) ? x.dims[0] : x.dims[n] - b[n].rank();
        r.dims.emplace_back(n, cycles - b[n + 1].rank());
    }
    r.guaranteedUpTo = x.N - 1;
    r.truncationNote = truncationNote(x.N, x.N - 1, upTo);
    return r;
}

HomologyReport hochschildDims(const ParaCocyclicModule& x, int upTo) {
    validateShapes(x);
    if (upTo < 0 || upTo > x.N - 1)
        throw ShapeMismatch("hochschildDims needs 0 <= upTo <= N-1");
    std::vector<Matrix> b;
    for (int n = 0; n <= upTo; ++n) b.push_back(hochschildCoboundary(x, n));
    for (int n = 0; n + 1 <= upTo; ++n)
        if (!(b[n + 1] * b[n]).isZero())
            throw NotAComplex("b o b != 0 at degree " + std::to_string(n));

    HomologyReport r;
    r.kind = HomologyKind::Hochschild;
    r.direction = Direction::Cohomology;
    for (int n = 0; n <= upTo; ++n) {
        int cocycles = x.dims[n] - b[n].rank();
        int coboundaries = (n == 0) ? 0 : b[n - 1].rank();
        r.dims.emplace_back(n, cocycles - coboundaries);
    }
    r.guaranteedUpTo = x.N - 1;
    r.truncationNote = truncationNote(x.N, x.N - 1, upTo);
    return r;
}

HomologyReport cyclicDims(const ParaCyclicModule& x, int upTo) {
    validateShapes(x);
    if (upTo < 0 || upTo > x.N - 1)
        throw ShapeMismatch("cyclicDims needs 0 <= upTo <= N-1");

    // cyclic homology is undefined for merely paracyclic input
    for (int n = 0; n <= std::min(upTo + 1, x.N); ++n)
        if (!x.cyclic[n].pow(n + 1).isIdentity())
            throw NotCyclic("tau^{n+1} != id at degree " + std::to_string(n));

    std::vector<Matrix> b{Matrix()}, bp{Matrix()};
    for (int n = 1; n <= upTo + 1; ++n) {
        b.push_back(hochschildBoundary(x, n));
        bp.push_back(bPrime(x, n));
    }
    // bicomplex identities: b^2 = 0, b'^2 = 0, b(1-lambda) = (1-lambda)b', Nb = b'N
    for (int n = 2; n <= upTo + 1; ++n) {
        if (!(b[n - 1] * b[n]).isZero()) throw NotAComplex("b o b != 0");
        if (!(bp[n - 1] * bp[n]).isZero()) throw NotAComplex("b' o b' != 0");
    }
    for (int n = 1; n <= upTo + 1; ++n) {
        Matrix oneMinusL = Matrix::identity(x.dims[n], x.field) - signedCyclic(x, n);
        Matrix oneMinusLown =
            Matrix::identity(x.dims[n - 1], x.field) - signedCyclic(x, n - 1);
        if (b[n] * oneMinusL != oneMinusLown * bp[n])
            throw NotAComplex("b(1-lambda) != (1-lambda)b' at degree " + std::to_string(n));
        if (normOperator(x, n - 1) * b[n] != bp[n] * normOperator(x, n))
            throw NotAComplex("Nb != b'N at degree " + std::to_string(n));
    }

    // total differential D_t: Tot_t -> Tot_{t-1}, Tot_t = (+)_{p=0}^{t} X_{t-p}
    auto totalDifferential = [&](int t) {
        int rows = 0, cols = 0;
        std::vector<int> rowOff, colOff;
        for (int p = 0; p <= t - 1; ++p) {
            rowOff.push_back(rows);
            rows += x.dims[t - 1 - p];
        }
        for (int p = 0; p <= t; ++p) {
            colOff.push_back(cols);
            cols += x.dims[t - p];
        }
        Matrix d(rows, cols, x.field);
        auto place = [&](int rOff, int cOff, const Matrix& blk) {
            for (int i = 0; i < blk.rows(); ++i)
                for (int j = 0; j < blk.cols(); ++j)
                    if (!blk(i, j).isZero()) d.set(rOff + i, cOff + j, blk(i, j));
        };
        for (int p = 0; p <= t; ++p) {
            int q = t - p;
            if (q >= 1)  // vertical: b on even columns, -b' on odd
                place(rowOff[p], colOff[p], (p % 2 == 0) ? b[q] : -bp[q]);
            if (p >= 1) {  // horizontal: (1 - lambda) out of odd, N out of even
                Matrix blk = (p % 2 == 1)
                                 ? Matrix::identity(x.dims[q], x.field) - signedCyclic(x, q)
                                 : normOperator(x, q);
                place(rowOff[p - 1], colOff[p], blk);
            }
        }
        return d;
    };

    std::vector<Matrix> D{Matrix()};
    for (int t = 1; t <= upTo + 1; ++t) D.push_back(totalDifferential(t));
    for (int t = 1; t <= upTo; ++t)
        if (!(D[t] * D[t + 1]).isZero())
            throw NotAComplex("total differential fails D o D = 0 at " + std::to_string(t));

    HomologyReport r;
    r.kind = HomologyKind::Cyclic;
    r.direction = Direction::Homology;
    for (int n = 0; n <= upTo; ++n) {
        int tot = 0;
        for (int p = 0; p <= n; ++p) tot += x.dims[n - p];
        int cycles = (n == 0) ? tot : tot - D[n].rank();
        r.dims.emplace_back(n, cycles - D[n + 1].rank());
    }
    r.guaranteedUpTo = x.N - 2;
    r.truncationNote = truncationNote(x.N, x.N - 2, upTo);
    return r;
}

HomologyReport cyclicDims(const ParaCocyclicModule& x, int upTo) {
    HomologyReport r = cyclicDims(transposeDual(x), upTo);
    r.direction = Direction::Cohomology;
    return r;
}

HomologyReport cyclicDimsConnes(const ParaCyclicModule& x, int upTo) {
    validateShapes(x);
    if (upTo < 0 || upTo > x.N - 1)
        throw ShapeMismatch("cyclicDimsConnes needs 0 <= upTo <= N-1");
    unsigned long p = x.field.characteristic();
    if (p != 0 && p <= (unsigned long)(upTo + 1))
        throw NotCyclic("the (1-lambda) quotient pipeline needs char 0 or p > upTo+1");
    for (int n = 0; n <= std::min(upTo + 1, x.N); ++n)
        if (!x.cyclic[n].pow(n + 1).isIdentity())
            throw NotCyclic("tau^{n+1} != id at degree " + std::to_string(n));

    std::vector<QuotientData> quot;
    for (int n = 0; n <= upTo + 1; ++n) {
        Matrix oneMinusL = Matrix::identity(x.dims[n], x.field) - signedCyclic(x, n);
        quot.push_back(quotientData(oneMinusL, x.dims[n]));
    }
    std::vector<Matrix> bbar{Matrix()};
    for (int n = 1; n <= upTo + 1; ++n)
        bbar.push_back(induceOnQuotient(hochschildBoundary(x, n), quot[n], quot[n - 1]));
    for (int n = 1; n <= upTo; ++n)
        if (!(bbar[n] * bbar[n + 1]).isZero())
            throw NotAComplex("induced b fails b o b = 0 on the quotient complex");

    HomologyReport r;
    r.kind = HomologyKind::Cyclic;
    r.direction = Direction::Homology;
    for (int n = 0; n <= upTo; ++n) {
        int cycles = (n == 0) ? quot[0].quotientDim : quot[n].quotientDim - bbar[n].rank();
        r.dims.emplace_back(n, cycles - bbar[n + 1].rank());
    }
    r.guaranteedUpTo = x.N - 2;
    r.truncationNote = truncationNote(x.N, x.N - 2, upTo);
    return r;
}

HomologyReport cyclicDimsConnes(const ParaCocyclicModule& x, int upTo) {
    HomologyReport r = cyclicDimsConnes(transposeDual(x), upTo);
    r.direction = Direction::Cohomology;
    return r;
}

HomologyReport cohomologyDims(const ParaCocyclicModule& x, int upTo, HomologyKind kind) {
    return kind == HomologyKind::Hochschild ? hochschildDims(x, upTo) : cyclicDims(x, upTo);
}

Report bPrimeExactness(const ParaCyclicModule& x, int upTo) {
    validateShapes(x);
    Report r;
    for (int n = 1; n <= std::min(upTo, x.N - 1); ++n) {
        Matrix cur = bPrime(x, n), next = bPrime(x, n + 1);
        r.add("bprime-exact", x.dims[n] - cur.rank() == next.rank(), n);
    }
    return r;
}

}  // namespace hopfcyc
