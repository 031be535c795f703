#pragma once

// Data-parallel inner loops. Every kernel exists twice: a serial reference
// in `serial` and an OpenMP version in `parallel`. The two must agree
// exactly; tests compare them and bench/ times them against each other.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "equibundle/field.hpp"
#include "equibundle/matrix.hpp"

namespace equibundle::kernels {

/// Row-major matrix of residues modulo a single prime.
struct ModMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint32_t p = 0;
    std::vector<std::uint32_t> data;

    std::uint32_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Integer matrix (rows already scaled to clear denominators).
using IntMatrix = Matrix<mpz_class>;

/// Products below this many multiply-adds stay serial in `parallel`.
inline constexpr std::size_t kParallelThreshold = 4096;

namespace serial {

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matmul: inner dimension mismatch");
    Matrix<T> c(a.rows(), b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T acc = a.zero();
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    return c;
}

/// Rank of m modulo m.p by Gaussian elimination.
std::size_t rank_mod_p(ModMatrix m);

/// Exact rank over Q of an integer matrix: elimination over mpq.
std::size_t rank_rational(const IntMatrix& m);

}  // namespace serial

namespace parallel {

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matmul: inner dimension mismatch");
    Matrix<T> c(a.rows(), b.cols(), a.zero());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.rows() * b.cols());
    const std::size_t inner = a.cols();
    const std::size_t bc = b.cols();
#pragma omp parallel for schedule(dynamic, 1) if (static_cast<std::size_t>(n) * inner >= kParallelThreshold)
    for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
        const std::size_t i = static_cast<std::size_t>(idx) / bc;
        const std::size_t j = static_cast<std::size_t>(idx) % bc;
        T acc = a.zero();
        for (std::size_t k = 0; k < inner; ++k) acc += a(i, k) * b(k, j);
        c(i, j) = acc;
    }
    return c;
}

/// Rank modulo m.p; the row updates below each pivot run in parallel.
std::size_t rank_mod_p(ModMatrix m);

/// Exact rank over Q of an integer matrix by multi-modular elimination.
/// Enough word-size primes are used that their product exceeds the
/// Hadamard bound of every square minor; the rank over Q is then the
/// maximum of the modular ranks. Primes are processed in parallel batches.
std::size_t rank_rational(const IntMatrix& m);

}  // namespace parallel

/// Reduces an integer matrix modulo p.
ModMatrix reduce_mod(const IntMatrix& m, std::uint32_t p);

/// Bits of the Hadamard bound on any square minor of m (product over
/// nonzero columns of their Euclidean norms), rounded up.
std::size_t hadamard_bits(const IntMatrix& m);

/// Word-size primes below 2^31, descending, as many as requested.
std::vector<std::uint32_t> word_primes(std::size_t count);

}  // namespace equibundle::kernels
