#pragma once

#include <cstdint>
#include <vector>

#include "equibundle/laurent.hpp"
#include "equibundle/linalg.hpp"

namespace equibundle {

using LaurentGrid = Matrix<LaurentPoly>;

LaurentGrid laurent_identity(Field f, std::size_t n);

/// Determinant over k[t, t^-1] by fraction-free (Bareiss) elimination.
LaurentPoly determinant(const LaurentGrid& m);

/// det = coeff * t^exponent.
struct UnitDeterminant {
    std::int64_t exponent;
    Scalar coeff;
};

/// Invertible n x n matrix over k[t, t^-1]: its determinant is a single
/// nonzero term. Checked on construction.
class LaurentMatrix {
public:
    /// Throws InvalidArgument for n = 0, non-square input, mixed fields or a
    /// determinant with zero or several terms.
    explicit LaurentMatrix(LaurentGrid grid);

    static LaurentMatrix identity(Field f, std::size_t n);
    /// diag(t^e_1, ..., t^e_n).
    static LaurentMatrix diagonal(Field f, const std::vector<std::int64_t>& exponents);

    std::size_t rank() const { return grid_.rows(); }
    Field field() const { return grid_.zero().field(); }
    const LaurentGrid& grid() const { return grid_; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return grid_(i, j); }

    UnitDeterminant det_unit() const { return det_; }

    /// Smallest and largest exponent over all entries.
    std::int64_t min_exponent() const;
    std::int64_t max_exponent() const;

    /// Exact inverse adj(M) / det(M).
    LaurentMatrix inverse() const;

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) { return a.grid_ == b.grid_; }

private:
    LaurentGrid grid_;
    UnitDeterminant det_;
};

/// (w, c) with det(M) = c * t^w.
inline UnitDeterminant det_unit_exponent(const LaurentMatrix& m) { return m.det_unit(); }

}  // namespace equibundle
