#pragma once

// Henselian pairs (A, I) for finite-dimensional commutative algebras,
// where henselian means I lies in the Jacobson radical, and idempotent
// lifting along nilpotent ideals.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "equibundle/graded.hpp"
#include "equibundle/linalg.hpp"

namespace equibundle {

/// Coordinates in the algebra's basis e_0..e_{d-1}.
using AlgVector = std::vector<Scalar>;

class FiniteDimAlgebra {
public:
    /// products[i][j] = e_i e_j. Throws InvalidArgument unless the product is
    /// commutative, associative and unital with the given unit, and the span
    /// of `ideal` is closed under multiplication.
    FiniteDimAlgebra(Field f, std::vector<std::vector<AlgVector>> products, AlgVector unit,
                     std::vector<AlgVector> ideal = {});

    /// k[x]/(f) for monic f = c_0 + c_1 x + ... + x^d, coefficients given
    /// from c_0 up to the leading 1; basis 1, x, ..., x^{d-1}.
    static FiniteDimAlgebra monogenic(Field f, const std::vector<Scalar>& monic);
    /// k^n with coordinatewise product.
    static FiniteDimAlgebra split(Field f, std::size_t n);
    static FiniteDimAlgebra product(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b);
    /// Basis e_i (x) e'_j in row-major order.
    static FiniteDimAlgebra tensor(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b);

    /// Same algebra with a different distinguished ideal (checked).
    FiniteDimAlgebra with_ideal(std::vector<AlgVector> ideal) const;

    Field field() const { return field_; }
    std::size_t dimension() const { return unit_.size(); }
    const AlgVector& unit() const { return unit_; }
    const std::vector<std::vector<AlgVector>>& products() const { return products_; }
    /// Basis of the distinguished ideal (reduced, independent).
    const std::vector<AlgVector>& ideal() const { return ideal_; }

    AlgVector zero() const { return AlgVector(dimension(), field_.zero()); }
    AlgVector basis(std::size_t i) const;
    AlgVector multiply(const AlgVector& a, const AlgVector& b) const;
    AlgVector add(const AlgVector& a, const AlgVector& b) const;
    AlgVector scale(const Scalar& c, const AlgVector& a) const;
    AlgVector power(const AlgVector& a, std::size_t k) const;
    /// Matrix of x -> a x.
    ScalarMatrix multiplication_matrix(const AlgVector& a) const;
    bool in_ideal(const AlgVector& a) const;

    friend bool operator==(const FiniteDimAlgebra&, const FiniteDimAlgebra&) = default;

private:
    Field field_;
    std::vector<std::vector<AlgVector>> products_;
    AlgVector unit_;
    std::vector<AlgVector> ideal_;
};

/// Basis of the span of the vectors (rows of the reduced echelon form).
std::vector<AlgVector> span_basis(Field f, std::size_t dim, const std::vector<AlgVector>& vectors);

/// Nilradical (= Jacobson radical, A being artinian). Over Q: the radical
/// of the trace form (a, b) -> Tr(ab). Over F_p: the kernel of the
/// F_p-linear map a -> a^{p^k} with p^k >= dim A.
std::vector<AlgVector> jacobson_radical(const FiniteDimAlgebra& a);

/// I contained in the radical.
bool is_henselian_pair(const FiniteDimAlgebra& a);

struct IdempotentLift {
    AlgVector e;
    std::size_t iterations = 0;
};

/// e <- 3e^2 - 2e^3 from a representative of an idempotent of A/I. Throws
/// PreconditionViolated if I is not nilpotent and InvalidArgument if
/// ebar^2 - ebar is not in I.
IdempotentLift lift_idempotent(const FiniteDimAlgebra& a, const AlgVector& ebar);

/// All degrees > 0 or all < 0: then (B_0, I_0) = (k, 0) up to the sign.
bool trivially_henselian(const GradedAlgebra& b);

std::string to_string(const AlgVector& v);

}  // namespace equibundle
