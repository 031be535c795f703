#pragma once

// Shared helpers for the test suites: seeded randomness and random objects.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <cstdlib>
#include <random>
#include <string>

#include "equibundle/filtered.hpp"
#include "equibundle/graded.hpp"
#include "equibundle/laurent.hpp"
#include "equibundle/laurent_matrix.hpp"

namespace eqb_test {

using namespace equibundle;

/// Seed for randomized runs: EQUIBUNDLE_SEED if set, else a fixed default.
inline std::uint64_t seed() {
    if (const char* s = std::getenv("EQUIBUNDLE_SEED")) return std::stoull(s);
    return 20240611;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(seed());
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Scalar random_scalar(Field f, long bound = 3) { return f.from_int(uniform(-bound, bound)); }

inline Scalar random_nonzero(Field f, long bound = 3) {
    for (;;) {
        Scalar s = random_scalar(f, bound);
        if (!s.is_zero()) return s;
    }
}

/// Random Laurent polynomial with exponents in [lo, hi].
inline LaurentPoly random_laurent(Field f, std::int64_t lo, std::int64_t hi, long bound = 3) {
    LaurentPoly p(f);
    for (std::int64_t e = lo; e <= hi; ++e)
        if (uniform(0, 2) == 0) p.add_term(e, random_scalar(f, bound));
    return p;
}

/// Random invertible constant n x n matrix (entries in [-1, 1]).
inline ScalarMatrix random_invertible(Field f, std::size_t n) {
    for (;;) {
        ScalarMatrix m(n, n, f.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(f, 1);
        if (inverse(m)) return m;
    }
}

/// Random matrix invertible over k[t] (sign = +1) or k[t^-1] (sign = -1):
/// a constant invertible matrix times a unitriangular matrix whose entries
/// have degree <= max_degree in t^sign. Entry degrees stay <= max_degree.
inline LaurentMatrix random_unimodular(Field f, std::size_t n, int sign, int max_degree) {
    LaurentGrid u = laurent_identity(f, n);
    const bool upper = uniform(0, 1) == 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || (upper ? i > j : i < j)) continue;
            LaurentPoly p(f);
            for (int d = 0; d <= max_degree; ++d)
                if (uniform(0, 2) == 0) p.add_term(sign * d, random_scalar(f, 2));
            u(i, j) = p;
        }
    const ScalarMatrix c = random_invertible(f, n);
    LaurentGrid cg(n, n, LaurentPoly(f));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cg(i, j) = LaurentPoly::constant(c(i, j));
    return LaurentMatrix(cg * u);
}

/// Random homogeneous element of degree d in a connected algebra.
inline Polynomial random_homogeneous(const GradedAlgebra& b, std::int64_t d, long bound = 2) {
    Polynomial p = b.zero();
    for (const auto& m : monomials_of_degree(b.degrees(), d))
        if (uniform(0, 1) == 0) p.add_term(m, random_scalar(b.field(), bound));
    return p;
}

/// Random presentation with the given generator degrees and `columns`
/// relation columns of degree in [min m_i, max m_i + 2].
inline GradedModulePresentation random_graded_module(const GradedAlgebra& b, std::vector<std::int64_t> gens,
                                                     std::size_t columns) {
    PolyMatrix rel(gens.size(), columns, b.zero());
    if (!gens.empty()) {
        const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
        for (std::size_t j = 0; j < columns; ++j) {
            const std::int64_t delta = uniform(*lo, *hi + 2);
            for (std::size_t i = 0; i < gens.size(); ++i) rel(i, j) = random_homogeneous(b, delta - gens[i]);
        }
    }
    return GradedModulePresentation(b, std::move(gens), std::move(rel));
}

/// Random degree-0 automorphism of the free module on generators of the
/// given degrees, with its inverse: (block constant) * (unitriangular).
inline std::pair<PolyMatrix, PolyMatrix> random_graded_automorphism(const GradedAlgebra& b,
                                                                    const std::vector<std::int64_t>& degrees) {
    const std::size_t n = degrees.size();
    const Polynomial one = b.constant(b.field().one());
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return degrees[x] < degrees[y]; });
    // Strictly triangular part: entry (r, c) with r before c in the order.
    PolyMatrix nil(n, n, b.zero());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = a + 1; c < n; ++c)
            nil(order[a], order[c]) = random_homogeneous(b, degrees[order[c]] - degrees[order[a]]);
    PolyMatrix id(n, n, b.zero());
    for (std::size_t i = 0; i < n; ++i) id(i, i) = one;
    const PolyMatrix tri = id + nil;
    PolyMatrix tri_inv = id, power = id;
    for (std::size_t k = 1; k < n; ++k) {
        power = power * nil;
        tri_inv = (k % 2) ? tri_inv - power : tri_inv + power;
    }
    // Constant part acts inside each degree block.
    ScalarMatrix c = identity_matrix(b.field(), n);
    std::map<std::int64_t, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < n; ++i) blocks[degrees[i]].push_back(i);
    for (const auto& [d, idx] : blocks) {
        const ScalarMatrix m = random_invertible(b.field(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t s = 0; s < idx.size(); ++s) c(idx[r], idx[s]) = m(r, s);
    }
    const ScalarMatrix ci = *inverse(c);
    PolyMatrix cp(n, n, b.zero()), cip(n, n, b.zero());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            cp(r, s) = b.constant(c(r, s));
            cip(r, s) = b.constant(ci(r, s));
        }
    return {cp * tri, tri_inv * cip};
}

/// Random element of k[e]/(e^m) with coefficients in [-bound, bound].
inline Truncated random_truncated(TruncatedRing r, long bound = 2) {
    std::vector<Scalar> c(r.nilpotency);
    for (auto& x : c) x = random_scalar(r.field, bound);
    return Truncated(r, std::move(c));
}

/// Random n x n matrix over k[e]/(e^m) with invertible residue.
inline TruncMatrix random_trunc_automorphism(TruncatedRing r, std::size_t n) {
    for (;;) {
        TruncMatrix m = trunc_zero(r, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = random_truncated(r);
        if (inverse(residue(m))) return m;
    }
}

/// Random valid filtered module with the given window ranks (non-decreasing).
inline FilteredModule random_filtered(TruncatedRing r, std::int64_t lo, const std::vector<std::size_t>& ranks) {
    std::vector<TruncMatrix> autos;
    for (auto n : ranks) autos.push_back(random_trunc_automorphism(r, n));
    std::vector<TruncMatrix> maps;
    for (std::size_t k = 0; k + 1 < ranks.size(); ++k) {
        TruncMatrix t = trunc_zero(r, ranks[k + 1], ranks[k]);
        for (std::size_t j = 0; j < ranks[k]; ++j) t(j, j) = Truncated::constant(r, r.field.one());
        maps.push_back(autos[k + 1] * t * *inverse(autos[k]));
    }
    return FilteredModule(r, lo, ranks, std::move(maps));
}

}  // namespace eqb_test
