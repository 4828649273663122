#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfcyc/matrix.hpp"

using namespace hopfcyc;

namespace {

const FieldTag Q = FieldTag::rationals();

Matrix randomMatrix(int rows, int cols, FieldTag f, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    Matrix m(rows, cols, f);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, Scalar(num(rng), f));
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
    Scalar a = Scalar::fromString("1/3", Q);
    Scalar b = Scalar::fromString("1/6", Q);
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK(Scalar::fromString("-4/6", Q).str() == "-2/3");
    CHECK(Scalar::fromString("7", Q).str() == "7");

    // two evaluation orders agree bit-for-bit after canonicalization
    Scalar x = Scalar::fromString("3/7", Q), y = Scalar::fromString("5/21", Q),
           z = Scalar::fromString("-2/3", Q);
    CHECK(((x + y) + z).str() == (x + (y + z)).str());
}

TEST_CASE("prime field residues are canonical") {
    FieldTag F5 = FieldTag::primeField(5);
    Scalar a(7, F5);
    CHECK(a.str() == "2");
    CHECK((Scalar(3, F5) * Scalar(4, F5)).str() == "2");
    CHECK((Scalar(1, F5) / Scalar(2, F5)).str() == "3");
    CHECK((Scalar(-1, F5)).str() == "4");
    CHECK_THROWS_AS(Scalar(5, F5).inverse(), Singular);
    CHECK_THROWS_AS(FieldTag::primeField(6), ParseError);
}

TEST_CASE("rank") {
    CHECK(Matrix::identity(2, Q).rank() == 2);
    CHECK(Matrix::zero(3, 3, Q).rank() == 0);
    Matrix m = Matrix::fromStrings({{"1", "2"}, {"2", "4"}}, Q);
    CHECK(m.rank() == 1);
}

TEST_CASE("kernelBasis") {
    CHECK(Matrix::identity(3, Q).kernelBasis().cols() == 0);
    Matrix z = Matrix::zero(2, 3, Q);
    Matrix kz = z.kernelBasis();
    CHECK(kz.cols() == 3);
    CHECK(kz.rank() == 3);

    Matrix row = Matrix::fromStrings({{"1", "1"}}, Q);
    Matrix k = row.kernelBasis();
    REQUIRE(k.cols() == 1);
    CHECK((row * k).isZero());
    // spans (1,-1) up to scaling
    CHECK(k(0, 0) == -k(1, 0));
    CHECK(!k(0, 0).isZero());
}

TEST_CASE("inverse") {
    CHECK(Matrix::identity(4, Q).inverse() == Matrix::identity(4, Q));
    Matrix two = Matrix::fromStrings({{"2"}}, Q);
    CHECK(two.inverse() == Matrix::fromStrings({{"1/2"}}, Q));
    Matrix u = Matrix::fromStrings({{"1", "1"}, {"0", "1"}}, Q);
    CHECK(u.inverse() == Matrix::fromStrings({{"1", "-1"}, {"0", "1"}}, Q));
    Matrix sing = Matrix::fromStrings({{"1", "2"}, {"2", "4"}}, Q);
    CHECK_THROWS_AS(sing.inverse(), Singular);
}

TEST_CASE("solve") {
    Matrix a = Matrix::fromStrings({{"1", "0"}, {"0", "2"}, {"0", "0"}}, Q);
    Matrix b = Matrix::fromStrings({{"3"}, {"4"}, {"0"}}, Q);
    auto x = a.solve(b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    Matrix bad = Matrix::fromStrings({{"0"}, {"0"}, {"1"}}, Q);
    CHECK(!a.solve(bad).has_value());
}

TEST_CASE("quotientData") {
    // trivial span: projection is a permutation of the identity
    QuotientData q0 = quotientData(Matrix::zero(3, 0, Q), 3);
    CHECK(q0.quotientDim == 3);
    CHECK(q0.projection == Matrix::identity(3, Q));

    // full span
    QuotientData qf = quotientData(Matrix::identity(2, Q), 2);
    CHECK(qf.quotientDim == 0);

    // ambient Q^2 mod span{(1,1)}
    Matrix span = Matrix::fromStrings({{"1"}, {"1"}}, Q);
    QuotientData q = quotientData(span, 2);
    CHECK(q.quotientDim == 1);
    CHECK((q.projection * span).isZero());
    CHECK(q.projection.rank() == 1);
    CHECK((q.projection * q.section).isIdentity());
}

TEST_CASE("inducedOnSubspace") {
    Matrix incl = Matrix::fromStrings({{"1"}, {"0"}}, Q);
    CHECK(inducedOnSubspace(Matrix::identity(2, Q), incl).isIdentity());
    CHECK(inducedOnSubspace(Matrix::zero(2, 2, Q), incl).isZero());
    Matrix diag = Matrix::fromStrings({{"1", "0"}, {"0", "2"}}, Q);
    CHECK(inducedOnSubspace(diag, incl) == Matrix::identity(1, Q));
    // rotation does not preserve the x-axis
    Matrix rot = Matrix::fromStrings({{"0", "-1"}, {"1", "0"}}, Q);
    CHECK_THROWS_AS(inducedOnSubspace(rot, incl), NotPreserved);
}

TEST_CASE("kron and leg permutations") {
    Matrix a = Matrix::fromStrings({{"1", "2"}, {"3", "4"}}, Q);
    Matrix b = Matrix::fromStrings({{"0", "1"}, {"1", "0"}}, Q);
    Matrix ab = Matrix::kron(a, b);
    CHECK(ab.rows() == 4);
    // (A (x) B)(e0 (x) e1) = Ae0 (x) Be1, leftmost factor most significant
    Matrix e01(4, 1, Q);
    e01.set(1, 0, Scalar::one(Q));
    Matrix lhs = ab * e01;
    CHECK(lhs(0, 0).str() == "1");  // (1*1) at position (0,0) -> index 0
    CHECK(lhs(2, 0).str() == "3");

    Matrix flip = legPermutationMatrix({2, 3}, {1, 0}, Q);
    CHECK(flip.rows() == 6);
    // flip (x) flip = id composition checks
    Matrix flop = legPermutationMatrix({3, 2}, {1, 0}, Q);
    CHECK((flop * flip).isIdentity());
}

TEST_CASE("rank-nullity and inverse properties on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
        Matrix m = randomMatrix(r, c, Q, rng);
        CHECK(m.rank() + m.kernelBasis().cols() == m.cols());
        CHECK((m * m.kernelBasis()).isZero());
        if (r == c && m.rank() == r) {
            Matrix inv = m.inverse();
            CHECK((inv * m).isIdentity());
            CHECK((m * inv).isIdentity());
        }
    }
    FieldTag F7 = FieldTag::primeField(7);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = randomMatrix(3, 4, F7, rng);
        CHECK(m.rank() + m.kernelBasis().cols() == 4);
        CHECK((m * m.kernelBasis()).isZero());
    }
}

TEST_CASE("quotient properties on random spans") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 20; ++trial) {
        int ambient = 2 + int(rng() % 4);
        Matrix span = randomMatrix(ambient, int(rng() % 4), Q, rng);
        QuotientData q = quotientData(span, ambient);
        CHECK(q.quotientDim == ambient - span.rank());
        CHECK((q.projection * span).isZero());
        CHECK((q.projection * q.section).isIdentity());
        CHECK(q.projection.rank() == q.quotientDim);
    }
}
