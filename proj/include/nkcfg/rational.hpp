#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "nkcfg/errors.hpp"

namespace nkcfg {

// Arbitrary-precision integer. All line coefficients and bound-table values
// live here; nothing in the library ever rounds.
using Int = mpz_class;

// Stable 64-bit hash of an integer value (limb walk, allocation free).
std::uint64_t hash_int(const Int& v);

// Exact rational scalar. Always canonical: lowest terms, positive
// denominator, zero is 0/1. mpq_class maintains that form through
// arithmetic; construction from raw parts canonicalizes explicitly.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_((long)v) {}
    Rational(const Int& v) : v_(v) {}
    Rational(const Int& num, const Int& den);
    Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "n" or "n/d", optional leading '-'. Throws ParseError on
    // malformed text or zero denominator.
    static Rational parse(const std::string& s);

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    // Serialized form used in the interchange format: "num" when the
    // denominator is 1, otherwise "num/den".
    std::string str() const;

    // Largest integer <= value.
    Int floor() const;

    double to_double() const { return v_.get_d(); }

    std::uint64_t hash() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    mpq_class v_ = 0;
};

// Integer as interchange string (exact decimal, never scientific notation).
inline std::string int_str(const Int& v) { return v.get_str(); }

} // namespace nkcfg
