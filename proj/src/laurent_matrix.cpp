#include "equibundle/laurent_matrix.hpp"

#include <limits>

namespace equibundle {

LaurentGrid laurent_identity(Field f, std::size_t n) {
    return LaurentGrid::identity(n, LaurentPoly(f), LaurentPoly::constant(f.one()));
}

LaurentPoly determinant(const LaurentGrid& input) {
    if (input.rows() != input.cols()) throw InvalidArgument("determinant of a non-square matrix");
    const Field f = input.zero().field();
    const std::size_t n = input.rows();
    if (n == 0) return LaurentPoly::constant(f.one());
    LaurentGrid m = input;
    LaurentPoly prev = LaurentPoly::constant(f.one());
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return LaurentPoly(f);
        if (piv != k) {
            m.swap_rows(piv, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = LaurentPoly(f);
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

LaurentMatrix::LaurentMatrix(LaurentGrid grid) : grid_(std::move(grid)), det_{0, Scalar()} {
    if (grid_.rows() == 0 || grid_.rows() != grid_.cols())
        throw InvalidArgument("a Laurent matrix must be square of rank >= 1");
    const Field f = grid_.zero().field();
    for (std::size_t i = 0; i < grid_.rows(); ++i)
        for (std::size_t j = 0; j < grid_.cols(); ++j)
            if (!(grid_(i, j).field() == f)) throw FieldMismatch();
    const LaurentPoly d = determinant(grid_);
    if (!d.is_monomial())
        throw InvalidArgument("determinant " + d.to_string() + " is not a unit of k[t, t^-1]");
    det_ = {d.min_exponent(), d.coeff(d.min_exponent())};
}

LaurentMatrix LaurentMatrix::identity(Field f, std::size_t n) { return LaurentMatrix(laurent_identity(f, n)); }

LaurentMatrix LaurentMatrix::diagonal(Field f, const std::vector<std::int64_t>& exponents) {
    LaurentGrid g(exponents.size(), exponents.size(), LaurentPoly(f));
    for (std::size_t i = 0; i < exponents.size(); ++i) g(i, i) = LaurentPoly::monomial(f, exponents[i]);
    return LaurentMatrix(std::move(g));
}

std::int64_t LaurentMatrix::min_exponent() const {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (!grid_(i, j).is_zero()) lo = std::min(lo, grid_(i, j).min_exponent());
    return lo;
}

std::int64_t LaurentMatrix::max_exponent() const {
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (!grid_(i, j).is_zero()) hi = std::max(hi, grid_(i, j).max_exponent());
    return hi;
}

LaurentMatrix LaurentMatrix::inverse() const {
    const std::size_t n = rank();
    const Field f = field();
    const LaurentPoly det_inv(det_.coeff.inv(), -det_.exponent);
    LaurentGrid inv(n, n, LaurentPoly(f));
    if (n == 1) {
        inv(0, 0) = det_inv;
        return LaurentMatrix(std::move(inv));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // Cofactor C_ij; the adjugate is its transpose.
            LaurentGrid minor(n - 1, n - 1, LaurentPoly(f));
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc++) = grid_(r, c);
                }
                ++mr;
            }
            LaurentPoly cof = determinant(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv(j, i) = cof * det_inv;
        }
    return LaurentMatrix(std::move(inv));
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rank() != b.rank()) throw InvalidArgument("Laurent matrix rank mismatch");
    return LaurentMatrix(a.grid_ * b.grid_);
}

}  // namespace equibundle
