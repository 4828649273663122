#include "hopfcyc/hopf.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace hopfcyc {

BasedSpace BasedSpace::make(int dim, FieldTag field, std::vector<std::string> labels) {
    if (labels.empty()) {
        labels.reserve(dim);
        for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    }
    if (int(labels.size()) != dim) throw ShapeMismatch("label count != dim");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (int(seen.size()) != dim) throw ShapeMismatch("basis labels not distinct");
    return BasedSpace{dim, std::move(labels), field};
}

namespace {

void checkAlgebraShapes(const AlgebraData& a) {
    int d = a.dim();
    if (a.mult.rows() != d || a.mult.cols() != d * d || a.unit.rows() != d ||
        a.unit.cols() != 1 || !(a.mult.field() == a.field()) || !(a.unit.field() == a.field()))
        throw ShapeMismatch("algebra structure-constant shapes");
}

void checkCoalgebraShapes(const CoalgebraData& c) {
    int d = c.dim();
    if (c.comult.rows() != d * d || c.comult.cols() != d || c.counit.rows() != 1 ||
        c.counit.cols() != d || !(c.comult.field() == c.field()) ||
        !(c.counit.field() == c.field()))
        throw ShapeMismatch("coalgebra structure-constant shapes");
}

}  // namespace

Report verifyAlgebraAxioms(const AlgebraData& a) {
    checkAlgebraShapes(a);
    int d = a.dim();
    Matrix id = Matrix::identity(d, a.field());
    Report r;
    r.add("assoc", a.mult * Matrix::kron(a.mult, id) == a.mult * Matrix::kron(id, a.mult));
    r.add("unit-left", a.mult * Matrix::kron(a.unit, id) == id);
    r.add("unit-right", a.mult * Matrix::kron(id, a.unit) == id);
    return r;
}

Report verifyCoalgebraAxioms(const CoalgebraData& c) {
    checkCoalgebraShapes(c);
    int d = c.dim();
    Matrix id = Matrix::identity(d, c.field());
    Report r;
    r.add("coassoc",
          Matrix::kron(c.comult, id) * c.comult == Matrix::kron(id, c.comult) * c.comult);
    r.add("counit-left", Matrix::kron(c.counit, id) * c.comult == id);
    r.add("counit-right", Matrix::kron(id, c.counit) * c.comult == id);
    return r;
}

Report verifyHopfAxioms(const HopfAlgebraData& h) {
    int d = h.dim();
    if (h.antipode.rows() != d || h.antipode.cols() != d)
        throw ShapeMismatch("antipode shape");
    Matrix id = Matrix::identity(d, h.field());
    Report r = verifyAlgebraAxioms(h.algebra());
    r.append(verifyCoalgebraAxioms(h.coalgebra()));

    // Delta is an algebra map: Delta m = (m (x) m) (1 flip 1) (Delta (x) Delta)
    Matrix midFlip = legPermutationMatrix({d, d, d, d}, {0, 2, 1, 3}, h.field());
    r.add("comult-alg-map", h.comult * h.mult == Matrix::kron(h.mult, h.mult) * midFlip *
                                                     Matrix::kron(h.comult, h.comult));
    r.add("comult-unital", h.comult * h.unit == Matrix::kron(h.unit, h.unit));
    r.add("counit-alg-map", h.counit * h.mult == Matrix::kron(h.counit, h.counit));
    bool counitUnit = (h.counit * h.unit)(0, 0).isOne();
    r.add("counit-unital", counitUnit);

    // m (S (x) id) Delta = unit counit = m (id (x) S) Delta
    Matrix unitCounit = h.unit * h.counit;
    r.add("antipode-left", h.mult * Matrix::kron(h.antipode, id) * h.comult == unitCounit);
    r.add("antipode-right", h.mult * Matrix::kron(id, h.antipode) * h.comult == unitCounit);
    return r;
}

Matrix antipodeInverse(const HopfAlgebraData& h) {
    if (h.antipodeInv) return *h.antipodeInv;
    try {
        return h.antipode.inverse();
    } catch (const Singular&) {
        throw Singular("antipode is not bijective");
    }
}

bool isCharacter(const HopfAlgebraData& h, const Matrix& functional) {
    if (functional.rows() != 1 || functional.cols() != h.dim()) return false;
    if (!(functional * h.unit)(0, 0).isOne()) return false;
    return functional * h.mult == Matrix::kron(functional, functional);
}

bool isGrouplike(const HopfAlgebraData& h, const Matrix& vector) {
    if (vector.rows() != h.dim() || vector.cols() != 1) return false;
    if (!(h.counit * vector)(0, 0).isOne()) return false;
    return h.comult * vector == Matrix::kron(vector, vector);
}

Matrix twistedAntipode(const HopfAlgebraData& h, const Character& delta) {
    return Matrix::kron(delta.functional, h.antipode) * h.comult;
}

Matrix leftMultiplication(const HopfAlgebraData& h, const Matrix& v) {
    return h.mult * Matrix::kron(v, Matrix::identity(h.dim(), h.field()));
}

ModularPair verifyModularPair(const HopfAlgebraData& h, const Character& delta,
                              const GrouplikeElement& sigma) {
    if (!isCharacter(h, delta.functional))
        throw NotModularPair("delta is not a character");
    if (!isGrouplike(h, sigma.vector))
        throw NotModularPair("sigma is not grouplike");
    if (!(delta.functional * sigma.vector)(0, 0).isOne())
        throw NotModularPair("delta(sigma) != 1");
    // sigma is grouplike, so S(sigma) = sigma^{-1}
    Matrix sigmaInv = h.antipode * sigma.vector;
    Matrix t = leftMultiplication(h, sigmaInv) * twistedAntipode(h, delta);
    bool invol = (t * t).isIdentity();
    return ModularPair{delta, sigma, invol};
}

HopfAlgebraData groupAlgebra(const std::vector<std::vector<int>>& table, FieldTag field,
                             std::vector<std::string> labels) {
    int n = int(table.size());
    if (n == 0) throw NotAGroup("empty table");
    for (const auto& row : table) {
        if (int(row.size()) != n) throw NotAGroup("table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
    }
    int e = -1;
    for (int i = 0; i < n; ++i) {
        bool ident = true;
        for (int j = 0; j < n; ++j)
            if (table[i][j] != j || table[j][i] != j) ident = false;
        if (ident) {
            e = i;
            break;
        }
    }
    if (e < 0) throw NotAGroup("no identity element");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                if (table[table[i][j]][l] != table[i][table[j][l]])
                    throw NotAGroup("table is not associative");
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (table[i][j] == e && table[j][i] == e) inv[i] = j;
        if (inv[i] < 0) throw NotAGroup("missing inverse");
    }

    if (labels.empty()) {
        for (int i = 0; i < n; ++i)
            labels.push_back(i == e ? "e" : "g" + std::to_string(i));
    }
    BasedSpace space = BasedSpace::make(n, field, std::move(labels));
    Scalar one = Scalar::one(field);
    Matrix mult(n, n * n, field), unit(n, 1, field), comult(n * n, n, field),
        counit(1, n, field), antipode(n, n, field);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) mult.set(table[i][j], i * n + j, one);
        comult.set(i * n + i, i, one);
        counit.set(0, i, one);
        antipode.set(inv[i], i, one);
    }
    unit.set(e, 0, one);

    HopfAlgebraData h{space, mult, unit, comult, counit, antipode, antipode.inverse()};
    if (!verifyHopfAxioms(h).allPass()) throw Error("group algebra failed Hopf axioms");
    return h;
}

HopfAlgebraData dualHopf(const HopfAlgebraData& h) {
    std::vector<std::string> labels;
    for (const auto& l : h.space.labels) labels.push_back(l + "*");
    BasedSpace space = BasedSpace::make(h.dim(), h.field(), std::move(labels));
    HopfAlgebraData g{space,
                      h.comult.transpose(),
                      h.counit.transpose(),
                      h.mult.transpose(),
                      h.unit.transpose(),
                      h.antipode.transpose(),
                      h.antipodeInv ? std::optional<Matrix>(h.antipodeInv->transpose())
                                    : std::nullopt};
    if (!verifyHopfAxioms(g).allPass()) throw Error("dual failed Hopf axioms");
    if (!g.antipodeInv) g.antipodeInv = antipodeInverse(g);
    return g;
}

HopfAlgebraData sweedlerH4(FieldTag field) {
    BasedSpace space = BasedSpace::make(4, field, {"1", "g", "x", "gx"});
    Scalar one = Scalar::one(field), minus = Scalar(-1, field);
    Matrix mult(4, 16, field), unit(4, 1, field), comult(16, 4, field), counit(1, 4, field),
        antipode(4, 4, field);

    auto setProd = [&](int i, int j, int k, Scalar c) { mult.set(k, i * 4 + j, c); };
    // 1 is the unit
    for (int j = 0; j < 4; ++j) setProd(0, j, j, one);
    for (int i = 1; i < 4; ++i) setProd(i, 0, i, one);
    setProd(1, 1, 0, one);    // g g = 1
    setProd(1, 2, 3, one);    // g x = gx
    setProd(1, 3, 2, one);    // g gx = x
    setProd(2, 1, 3, minus);  // x g = -gx
    setProd(3, 1, 2, minus);  // gx g = -x
    // x x = x gx = gx x = gx gx = 0
    unit.set(0, 0, one);

    comult.set(0 * 4 + 0, 0, one);  // Delta(1) = 1 (x) 1
    comult.set(1 * 4 + 1, 1, one);  // Delta(g) = g (x) g
    comult.set(2 * 4 + 0, 2, one);  // Delta(x) = x (x) 1 + g (x) x
    comult.set(1 * 4 + 2, 2, one);
    comult.set(3 * 4 + 1, 3, one);  // Delta(gx) = gx (x) g + 1 (x) gx
    comult.set(0 * 4 + 3, 3, one);

    counit.set(0, 0, one);
    counit.set(0, 1, one);

    antipode.set(0, 0, one);   // S(1) = 1
    antipode.set(1, 1, one);   // S(g) = g
    antipode.set(3, 2, minus); // S(x) = -gx
    antipode.set(2, 3, one);   // S(gx) = x

    HopfAlgebraData h{space, mult, unit, comult, counit, antipode, antipode.inverse()};
    if (!verifyHopfAxioms(h).allPass()) throw Error("Sweedler H4 failed Hopf axioms");
    return h;
}

Matrix sweedlerSplit(const HopfAlgebraData& h, int parts) {
    if (parts < 1) throw ShapeMismatch("sweedlerSplit needs parts >= 1");
    int d = h.dim();
    Matrix acc = Matrix::identity(d, h.field());
    for (int k = 2; k <= parts; ++k) {
        long long rest = 1;
        for (int i = 0; i < k - 2; ++i) rest *= d;
        acc = Matrix::kron(h.comult, Matrix::identity(int(rest), h.field())) * acc;
    }
    return acc;
}

Matrix iteratedMult(const HopfAlgebraData& h, int parts) {
    if (parts == 0) return h.unit;
    int d = h.dim();
    Matrix acc = Matrix::identity(d, h.field());
    for (int k = 2; k <= parts; ++k)
        acc = h.mult * Matrix::kron(acc, Matrix::identity(d, h.field()));
    return acc;
}

namespace {

// Enumerates {-1,0,1}^d lexicographically with -1 < 0 < 1.
bool nextGridPoint(std::vector<int>& v) {
    for (int k = int(v.size()) - 1; k >= 0; --k) {
        if (v[k] < 1) {
            ++v[k];
            std::fill(v.begin() + k + 1, v.end(), -1);
            return true;
        }
    }
    return false;
}

constexpr int kMaxSearchDim = 10;

}  // namespace

std::vector<Character> searchCharacters(const HopfAlgebraData& h) {
    std::vector<Character> out;
    int d = h.dim();
    if (d > kMaxSearchDim) return out;
    std::vector<int> v(d, -1);
    int idx = 0;
    do {
        Matrix f(1, d, h.field());
        for (int j = 0; j < d; ++j) f.set(0, j, Scalar(v[j], h.field()));
        if (isCharacter(h, f))
            out.push_back(Character{"chi" + std::to_string(idx++), f});
    } while (nextGridPoint(v));
    return out;
}

std::vector<GrouplikeElement> searchGrouplikes(const HopfAlgebraData& h) {
    std::vector<GrouplikeElement> out;
    int d = h.dim();
    if (d > kMaxSearchDim) return out;
    std::vector<int> v(d, -1);
    int idx = 0;
    do {
        Matrix g(d, 1, h.field());
        for (int i = 0; i < d; ++i) g.set(i, 0, Scalar(v[i], h.field()));
        if (isGrouplike(h, g))
            out.push_back(GrouplikeElement{"gl" + std::to_string(idx++), g});
    } while (nextGridPoint(v));
    return out;
}

std::vector<ModularPair> searchInvolutionPairs(const HopfAlgebraData& h) {
    std::vector<ModularPair> out;
    for (const auto& delta : namedCharacters(h))
        for (const auto& sigma : namedGrouplikes(h)) {
            if (!(delta.functional * sigma.vector)(0, 0).isOne()) continue;
            ModularPair p = verifyModularPair(h, delta, sigma);
            if (p.inInvolution) out.push_back(p);
        }
    return out;
}

std::vector<Character> namedCharacters(const HopfAlgebraData& h) {
    std::vector<Character> out{Character{"eps", h.counit}};
    std::vector<Character> found = searchCharacters(h);
    std::vector<Matrix> extras;
    for (const auto& c : found)
        if (c.functional != h.counit) extras.push_back(c.functional);
    for (size_t k = 0; k < extras.size(); ++k) {
        std::string name = extras.size() == 1 ? "delta" : "delta" + std::to_string(k);
        out.push_back(Character{name, extras[k]});
    }
    return out;
}

std::vector<GrouplikeElement> namedGrouplikes(const HopfAlgebraData& h) {
    std::vector<GrouplikeElement> out{GrouplikeElement{"one", h.unit}};
    std::vector<GrouplikeElement> found = searchGrouplikes(h);
    std::vector<Matrix> extras;
    for (const auto& g : found)
        if (g.vector != h.unit) extras.push_back(g.vector);
    int anon = 0;
    for (const auto& v : extras) {
        // basis vectors borrow their basis label
        int hot = -1, nz = 0;
        for (int i = 0; i < h.dim(); ++i)
            if (!v(i, 0).isZero()) {
                ++nz;
                hot = v(i, 0).isOne() ? i : -1;
            }
        std::string name = (nz == 1 && hot >= 0) ? h.space.labels[hot]
                                                 : "sigma" + std::to_string(anon++);
        out.push_back(GrouplikeElement{name, v});
    }
    return out;
}

namespace {

std::vector<std::vector<int>> cyclicTable(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

std::vector<std::vector<int>> s3Table(std::vector<std::string>& labels) {
    // permutations of {0,1,2} in lexicographic one-line order
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto indexOf = [&](const std::array<int, 3>& q) {
        for (size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == q) return int(k);
        return -1;
    };
    int n = int(perms.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::array<int, 3> comp;
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = indexOf(comp);
        }
    for (const auto& q : perms)
        labels.push_back("p" + std::to_string(q[0]) + std::to_string(q[1]) +
                         std::to_string(q[2]));
    return t;
}

}  // namespace

HopfAlgebraData builtinHopf(const std::string& name, FieldTag field) {
    const std::string dualSuffix = "-dual";
    if (name.size() > dualSuffix.size() &&
        name.compare(name.size() - dualSuffix.size(), dualSuffix.size(), dualSuffix) == 0)
        return dualHopf(builtinHopf(name.substr(0, name.size() - dualSuffix.size()), field));
    if (name == "k") return groupAlgebra({{0}}, field, {"1"});
    if (name == "c2") return groupAlgebra(cyclicTable(2), field, {"e", "g"});
    if (name == "c3") return groupAlgebra(cyclicTable(3), field, {"e", "g", "g2"});
    if (name == "c4") return groupAlgebra(cyclicTable(4), field, {"e", "g", "g2", "g3"});
    if (name == "s3") {
        std::vector<std::string> labels;
        auto t = s3Table(labels);
        return groupAlgebra(t, field, labels);
    }
    if (name == "h4") return sweedlerH4(field);
    throw ParseError("unknown built-in Hopf algebra \"" + name + "\"");
}

std::vector<std::string> builtinHopfNames() {
    std::vector<std::string> base{"k", "c2", "c3", "c4", "s3", "h4"};
    std::vector<std::string> out = base;
    for (const auto& b : base) out.push_back(b + "-dual");
    return out;
}

}  // namespace hopfcyc
