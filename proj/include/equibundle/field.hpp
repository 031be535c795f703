#pragma once

// Exact scalars: arbitrary-precision rationals or residues modulo a prime
// p < 2^31. A scalar carries its field; mixing fields in one expression throws.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include "equibundle/errors.hpp"

namespace equibundle {

class Scalar;

/// The base field: Q (characteristic 0) or F_p.
class Field {
public:
    constexpr Field() = default;

    static Field rationals() { return Field(); }
    /// Throws InvalidArgument unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    /// num/den reduced into the field; den must be invertible.
    Scalar from_ratio(const mpz_class& num, const mpz_class& den) const;

    /// "Q" or "F<p>", e.g. "F5".
    std::string name() const;

    friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }

private:
    friend class Scalar;
    explicit constexpr Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Element of Q or F_p. Rationals are kept in lowest terms with a positive
/// denominator (mpq canonical form); residues are kept in [0, p).
class Scalar {
public:
    /// Rational zero.
    Scalar() : v_(mpq_class(0)) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
    Scalar(std::uint32_t residue, std::uint32_t p) : v_(Residue{residue % p, p}) {}

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::uint32_t residue() const { return std::get<Residue>(v_).value; }

    Scalar operator-() const;
    Scalar inv() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical text: "5/6", "-3", "0" for rationals; the bare residue for F_p.
    std::string to_string() const;

private:
    struct Residue {
        std::uint32_t value;
        std::uint32_t p;
    };
    std::variant<mpq_class, Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace equibundle
