#pragma once

// Laurent polynomials k[t, t^-1], stored sparsely by exponent.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "equibundle/field.hpp"

namespace equibundle {

class LaurentPoly {
public:
    using Terms = std::map<std::int64_t, Scalar>;

    /// Zero polynomial over Q.
    LaurentPoly() = default;
    explicit LaurentPoly(Field f) : field_(f) {}
    /// c * t^e.
    LaurentPoly(const Scalar& c, std::int64_t e);
    /// Constant polynomial.
    static LaurentPoly constant(const Scalar& c) { return LaurentPoly(c, 0); }
    static LaurentPoly monomial(Field f, std::int64_t e) { return LaurentPoly(f.one(), e); }

    Field field() const { return field_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    /// Exactly one nonzero term, i.e. a unit of k[t, t^-1].
    bool is_monomial() const { return terms_.size() == 1; }
    /// Only exponent 0 (or zero).
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    /// Throws InvalidArgument on the zero polynomial.
    std::int64_t min_exponent() const;
    std::int64_t max_exponent() const;

    Scalar coeff(std::int64_t e) const;
    /// Adds c * t^e, dropping the term if it cancels.
    void add_term(std::int64_t e, const Scalar& c);

    /// Multiplication by t^k.
    LaurentPoly shifted(std::int64_t k) const;
    LaurentPoly scaled(const Scalar& c) const;
    /// Substitution t -> t^-1.
    LaurentPoly reflected() const;
    /// Value at a nonzero point of k.
    Scalar evaluate(const Scalar& x) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    /// Canonical text, decreasing exponents: "t^2 - 1/2*t^-1 + 3". The
    /// variable name defaults to t.
    std::string to_string(char var = 't') const;

private:
    Field field_;
    Terms terms_;
};

/// Exact quotient a / b in k[t, t^-1]; throws InvalidArgument if b does not
/// divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace equibundle
