#include "equibundle/linalg.hpp"

namespace equibundle {

namespace {

Field field_of(const ScalarMatrix& m) { return m.zero().field(); }

// Matrices up to this many entries are ranked by direct elimination.
constexpr std::size_t kDirectRankEntries = 400;

}  // namespace

ScalarMatrix zero_matrix(Field f, std::size_t rows, std::size_t cols) { return ScalarMatrix(rows, cols, f.zero()); }

ScalarMatrix identity_matrix(Field f, std::size_t n) { return ScalarMatrix::identity(n, f.zero(), f.one()); }

RowEchelon rref(ScalarMatrix m) {
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, r);
        const Scalar inv = m(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

kernels::IntMatrix clear_denominators(const ScalarMatrix& m) {
    kernels::IntMatrix out(m.rows(), m.cols(), mpz_class(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpz_class& d = m(i, j).rational().get_den();
            if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpq_class& q = m(i, j).rational();
            out(i, j) = q.get_num() * (l / q.get_den());
        }
    }
    return out;
}

std::size_t rank(const ScalarMatrix& m) {
    const Field f = field_of(m);
    if (m.rows() * m.cols() <= kDirectRankEntries) return rref(m).pivots.size();
    if (f.is_rational()) return kernels::parallel::rank_rational(clear_denominators(m));
    kernels::ModMatrix mm{m.rows(), m.cols(), f.characteristic(), std::vector<std::uint32_t>(m.rows() * m.cols())};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mm.at(i, j) = m(i, j).residue();
    return kernels::parallel::rank_mod_p(std::move(mm));
}

ScalarMatrix kernel_basis(const ScalarMatrix& m) {
    const Field f = field_of(m);
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    ScalarMatrix k(m.cols(), free_cols.size(), f.zero());
    for (std::size_t a = 0; a < free_cols.size(); ++a) {
        const std::size_t fc = free_cols[a];
        k(fc, a) = f.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], a) = -e.reduced(r, fc);
    }
    return k;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const Field f = field_of(m);
    const RowEchelon e = rref(hconcat(m, identity_matrix(f, n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    return e.reduced.col_block(n, n);
}

std::optional<ScalarMatrix> solve(const ScalarMatrix& m, const ScalarMatrix& b) {
    if (m.rows() != b.rows()) throw InvalidArgument("solve: row count mismatch");
    const Field f = field_of(m);
    const std::size_t n = m.cols();
    const RowEchelon e = rref(hconcat(m, b));
    ScalarMatrix x(n, b.cols(), f.zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const std::size_t c = e.pivots[r];
        if (c >= n) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.reduced(r, n + j);
    }
    return x;
}

}  // namespace equibundle
