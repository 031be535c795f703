#pragma once

// The local ring A = k[e]/(e^m). m = 1 gives the field k itself.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "equibundle/linalg.hpp"

namespace equibundle {

struct TruncatedRing {
    Field field;
    std::size_t nilpotency = 1;  // m

    friend bool operator==(const TruncatedRing&, const TruncatedRing&) = default;
};

/// Element c_0 + c_1 e + ... + c_{m-1} e^{m-1}.
class Truncated {
public:
    Truncated() : Truncated(TruncatedRing{}) {}
    explicit Truncated(TruncatedRing r);
    Truncated(TruncatedRing r, std::vector<Scalar> coeffs);
    static Truncated constant(TruncatedRing r, const Scalar& c);
    /// The nilpotent generator e (zero when m = 1).
    static Truncated epsilon(TruncatedRing r);

    const TruncatedRing& ring() const { return ring_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& residue() const { return c_[0]; }
    bool is_zero() const;
    bool is_unit() const { return !c_[0].is_zero(); }

    /// Throws DivisionByZero when the residue vanishes.
    Truncated inv() const;

    Truncated operator-() const;
    friend Truncated operator+(const Truncated& a, const Truncated& b);
    friend Truncated operator-(const Truncated& a, const Truncated& b);
    friend Truncated operator*(const Truncated& a, const Truncated& b);
    Truncated& operator+=(const Truncated& b) { return *this = *this + b; }
    Truncated& operator-=(const Truncated& b) { return *this = *this - b; }

    friend bool operator==(const Truncated& a, const Truncated& b) = default;

    /// "1 + 2*e - e^2"; lowest power first.
    std::string to_string(char var = 'e') const;

private:
    TruncatedRing ring_;
    std::vector<Scalar> c_;
};

using TruncMatrix = Matrix<Truncated>;

TruncMatrix trunc_zero(TruncatedRing r, std::size_t rows, std::size_t cols);
TruncMatrix trunc_identity(TruncatedRing r, std::size_t n);
/// Constant lift of a matrix over k.
TruncMatrix lift(TruncatedRing r, const ScalarMatrix& m);
/// Reduction mod e.
ScalarMatrix residue(const TruncMatrix& m);

/// Inverse of a square matrix whose residue is invertible: Newton steps
/// X <- X (2 - M X) from the residue inverse, exact after ceil(log2 m)
/// rounds. nullopt if the residue is singular.
std::optional<TruncMatrix> inverse(const TruncMatrix& m);

/// L with L * m = 1 when the residue of m has full column rank.
std::optional<TruncMatrix> left_inverse(const TruncMatrix& m);

}  // namespace equibundle
