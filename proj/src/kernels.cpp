#include "equibundle/kernels.hpp"

#include <algorithm>
#include <mutex>

namespace equibundle::kernels {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Eliminates column `col` below row `pivot_row` for rows [begin, end).
inline void eliminate_row(ModMatrix& m, std::size_t pivot_row, std::size_t r, std::size_t col) {
    const std::uint64_t p = m.p;
    const std::uint32_t factor = m.at(r, col);
    if (factor == 0) return;
    const std::uint64_t neg = p - factor;
    std::uint32_t* dst = &m.data[r * m.cols];
    const std::uint32_t* src = &m.data[pivot_row * m.cols];
    for (std::size_t j = col; j < m.cols; ++j)
        if (src[j] != 0) dst[j] = static_cast<std::uint32_t>((dst[j] + neg * src[j]) % p);
}

// Normalizes the pivot row so its pivot entry is 1.
inline void normalize_row(ModMatrix& m, std::size_t r, std::size_t col) {
    const std::uint64_t p = m.p;
    const std::uint64_t inv = inv_mod(m.at(r, col), m.p);
    for (std::size_t j = col; j < m.cols; ++j) m.at(r, j) = static_cast<std::uint32_t>(m.at(r, j) * inv % p);
}

template <bool Parallel>
std::size_t rank_mod_p_impl(ModMatrix& m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        normalize_row(m, rank, col);
        const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(rank + 1);
        const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(m.rows);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if ((hi - lo) * static_cast<std::ptrdiff_t>(m.cols - col) >= static_cast<std::ptrdiff_t>(kParallelThreshold))
            for (std::ptrdiff_t r = lo; r < hi; ++r) eliminate_row(m, rank, static_cast<std::size_t>(r), col);
        } else {
            for (std::ptrdiff_t r = lo; r < hi; ++r) eliminate_row(m, rank, static_cast<std::size_t>(r), col);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

ModMatrix reduce_mod(const IntMatrix& m, std::uint32_t p) {
    ModMatrix r{m.rows(), m.cols(), p, std::vector<std::uint32_t>(m.rows() * m.cols())};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpz_class& v = m(i, j);
            if (v == 0) continue;
            unsigned long res = mpz_fdiv_ui(v.get_mpz_t(), p);
            r.at(i, j) = static_cast<std::uint32_t>(res);
        }
    return r;
}

std::size_t hadamard_bits(const IntMatrix& m) {
    std::size_t bits = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        mpz_class norm2 = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) norm2 += m(i, j) * m(i, j);
        if (norm2 == 0) continue;
        // log2(sqrt(norm2)) <= ceil(bitlen(norm2) / 2)
        bits += (mpz_sizeinbase(norm2.get_mpz_t(), 2) + 1) / 2;
    }
    return bits;
}

std::vector<std::uint32_t> word_primes(std::size_t count) {
    static std::mutex mu;
    static std::vector<std::uint32_t> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::uint32_t candidate = cache.empty() ? (1u << 31) - 1 : cache.back() - 2;
    while (cache.size() < count) {
        if (is_prime(candidate)) cache.push_back(candidate);
        candidate -= 2;
    }
    return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

namespace serial {

std::size_t rank_mod_p(ModMatrix m) { return rank_mod_p_impl<false>(m); }

std::size_t rank_rational(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpq_class> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && sgn(a[piv * cols + col]) == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = col; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (sgn(a[r * cols + col]) == 0) continue;
            mpq_class f = a[r * cols + col] / a[rank * cols + col];
            for (std::size_t j = col; j < cols; ++j) a[r * cols + j] -= f * a[rank * cols + j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace serial

namespace parallel {

std::size_t rank_mod_p(ModMatrix m) { return rank_mod_p_impl<true>(m); }

std::size_t rank_rational(const IntMatrix& m) {
    const std::size_t full = std::min(m.rows(), m.cols());
    if (full == 0) return 0;
    const std::size_t needed_bits = hadamard_bits(m) + 1;
    // Each prime exceeds 2^30.
    const std::size_t count = needed_bits / 30 + 1;
    const auto primes = word_primes(count);
    std::size_t best = 0;
    bool done = false;
    const std::ptrdiff_t np = static_cast<std::ptrdiff_t>(primes.size());
#pragma omp parallel for schedule(dynamic, 1) shared(best, done)
    for (std::ptrdiff_t k = 0; k < np; ++k) {
        bool skip;
#pragma omp atomic read
        skip = done;
        if (skip) continue;
        // Rank modulo p never exceeds the rank over Q, so a full modular
        // rank ends the search.
        ModMatrix reduced = reduce_mod(m, primes[static_cast<std::size_t>(k)]);
        const std::size_t r = rank_mod_p_impl<false>(reduced);
#pragma omp critical(eqb_rank_best)
        {
            best = std::max(best, r);
            if (best == full) {
#pragma omp atomic write
                done = true;
            }
        }
    }
    return best;
}

}  // namespace parallel

}  // namespace equibundle::kernels
