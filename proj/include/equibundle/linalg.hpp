#pragma once

// Exact linear algebra over Q and F_p.

#include <cstddef>
#include <optional>
#include <vector>

#include "equibundle/field.hpp"
#include "equibundle/kernels.hpp"
#include "equibundle/matrix.hpp"

namespace equibundle {

using ScalarMatrix = Matrix<Scalar>;

ScalarMatrix zero_matrix(Field f, std::size_t rows, std::size_t cols);
ScalarMatrix identity_matrix(Field f, std::size_t n);

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    return kernels::parallel::matmul(a, b);
}

/// Reduced row echelon form together with the pivot columns.
struct RowEchelon {
    ScalarMatrix reduced;
    std::vector<std::size_t> pivots;
};

RowEchelon rref(ScalarMatrix m);

/// Rank over the matrix's field. Large rational matrices go through the
/// multi-modular kernel; everything else is direct elimination.
std::size_t rank(const ScalarMatrix& m);

/// Columns form a basis of the right kernel {x : m x = 0}.
ScalarMatrix kernel_basis(const ScalarMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<ScalarMatrix> inverse(const ScalarMatrix& m);

/// One solution X of m X = b, or nullopt when the system is inconsistent.
std::optional<ScalarMatrix> solve(const ScalarMatrix& m, const ScalarMatrix& b);

/// Integer matrix with the same row space as a rational matrix (each row
/// scaled by the lcm of its denominators).
kernels::IntMatrix clear_denominators(const ScalarMatrix& m);

}  // namespace equibundle
