#include "hopfcyc/scalar.hpp"

namespace hopfcyc {

FieldTag FieldTag::primeField(unsigned long p) {
    mpz_class z(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw ParseError("Fp modulus " + std::to_string(p) + " is not prime");
    return FieldTag{p};
}

std::string FieldTag::str() const {
    return isRationals() ? "Q" : "F" + std::to_string(p);
}

Scalar::Scalar(long n, FieldTag tag) : v_(n), tag_(tag) { reduce(); }

Scalar::Scalar(const mpq_class& v, FieldTag tag) : v_(v), tag_(tag) {
    v_.canonicalize();
    reduce();
}

void Scalar::reduce() {
    if (tag_.isRationals()) return;
    // residues live in 0..p-1 with denominator 1
    mpz_class p(tag_.p);
    if (v_.get_den() != 1) {
        mpz_class inv;
        mpz_class den = v_.get_den() % p;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw Singular("denominator not invertible mod " + std::to_string(tag_.p));
        mpz_class num = v_.get_num() * inv;
        v_ = mpq_class(num);
    }
    mpz_class r = v_.get_num() % p;
    if (r < 0) r += p;
    v_ = mpq_class(r);
}

Scalar Scalar::fromString(std::string_view s, FieldTag tag) {
    std::string t(s);
    if (t.empty()) throw ParseError("empty scalar string");
    size_t slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v{mpz_class(t)};
            return Scalar(v, tag);
        }
        mpz_class num(t.substr(0, slash));
        mpz_class den(t.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in \"" + t + "\"");
        return Scalar(mpq_class(num, den), tag);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad scalar string \"" + t + "\"");
    }
}

void Scalar::checkSameField(const Scalar& o) const {
    if (tag_ != o.tag_)
        throw ShapeMismatch("scalar field mismatch: " + tag_.str() + " vs " + o.tag_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    checkSameField(o);
    return Scalar(mpq_class(v_ + o.v_), tag_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    checkSameField(o);
    return Scalar(mpq_class(v_ - o.v_), tag_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    checkSameField(o);
    return Scalar(mpq_class(v_ * o.v_), tag_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    checkSameField(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_), tag_); }

bool Scalar::operator==(const Scalar& o) const {
    checkSameField(o);
    return v_ == o.v_;
}

Scalar Scalar::inverse() const {
    if (isZero()) throw Singular("division by zero in " + tag_.str());
    if (tag_.isRationals()) return Scalar(mpq_class(1 / v_), tag_);
    mpz_class p(tag_.p), inv;
    mpz_class num = v_.get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    return Scalar(mpq_class(inv), tag_);
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

size_t Scalar::bitSize() const {
    return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
}

}  // namespace hopfcyc
