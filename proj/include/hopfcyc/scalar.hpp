#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

/// Ground field: the rationals (p == 0) or the prime field F_p (p prime).
struct FieldTag {
    unsigned long p = 0;

    bool isRationals() const { return p == 0; }
    bool isPrimeField() const { return p != 0; }
    unsigned long characteristic() const { return p; }

    static FieldTag rationals() { return FieldTag{0}; }
    static FieldTag primeField(unsigned long p);

    bool operator==(const FieldTag&) const = default;
    std::string str() const;
};

/// An exact field element: a rational in canonical lowest terms, or a
/// canonical residue 0..p-1.  Arithmetic never rounds.
class Scalar {
public:
    Scalar() : v_(0), tag_{0} {}
    Scalar(long n, FieldTag tag);
    Scalar(const mpq_class& v, FieldTag tag);

    static Scalar zero(FieldTag tag) { return Scalar(0, tag); }
    static Scalar one(FieldTag tag) { return Scalar(1, tag); }

    /// Parses "n", "-n", or "n/d" (rationals); decimal residue for F_p.
    static Scalar fromString(std::string_view s, FieldTag tag);

    FieldTag field() const { return tag_; }
    bool isZero() const { return sgn(v_) == 0; }
    bool isOne() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;

    /// Canonical string: "n" or "n/d" over Q, residue over F_p.
    std::string str() const;

    /// Size heuristic used for pivot selection (total bits of num+den).
    size_t bitSize() const;

    const mpq_class& raw() const { return v_; }

private:
    void reduce();
    void checkSameField(const Scalar& o) const;

    mpq_class v_;
    FieldTag tag_;
};

}  // namespace hopfcyc
