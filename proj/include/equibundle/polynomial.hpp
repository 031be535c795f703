#pragma once

// Sparse multivariate polynomials over Q or F_p in variables x1..xr.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equibundle/field.hpp"

namespace equibundle {

using Monomial = std::vector<std::uint32_t>;

/// Sum of e_j * w_j.
std::int64_t weighted_degree(const Monomial& m, std::span<const std::int64_t> weights);

/// All monomials of weighted degree d. Requires every weight > 0.
std::vector<Monomial> monomials_of_degree(std::span<const std::int64_t> weights, std::int64_t d);

class Polynomial {
public:
    using Terms = std::map<Monomial, Scalar>;

    Polynomial() = default;
    Polynomial(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}
    static Polynomial constant(std::size_t nvars, const Scalar& c);
    static Polynomial term(const Monomial& m, const Scalar& c);
    /// x_{index} (0-based index).
    static Polynomial variable(Field f, std::size_t nvars, std::size_t index);

    Field field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    Scalar coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Scalar& c);

    /// The degree if every term has the same weighted degree; nullopt for
    /// the zero polynomial or a non-homogeneous one.
    std::optional<std::int64_t> homogeneous_degree(std::span<const std::int64_t> weights) const;
    bool is_homogeneous(std::span<const std::int64_t> weights) const;

    /// Sets every variable to zero except those with keep[j] = true.
    Polynomial restrict_to(const std::vector<bool>& keep) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial scaled(const Scalar& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Canonical text, graded-lex descending: "x1^2*x3 - 2*x2 + 1".
    std::string to_string(const std::string& var = "x") const;

private:
    Field field_;
    std::size_t nvars_ = 0;
    Terms terms_;
};

}  // namespace equibundle
