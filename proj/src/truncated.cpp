#include "equibundle/truncated.hpp"

#include <sstream>

namespace equibundle {

namespace {

void same_ring(const Truncated& a, const Truncated& b) {
    if (!(a.ring().field == b.ring().field)) throw FieldMismatch();
    if (a.ring().nilpotency != b.ring().nilpotency) throw InvalidArgument("truncated: different nilpotency orders");
}

}  // namespace

Truncated::Truncated(TruncatedRing r) : ring_(r), c_(r.nilpotency, r.field.zero()) {
    if (r.nilpotency == 0) throw InvalidArgument("truncated: nilpotency order must be at least 1");
}

Truncated::Truncated(TruncatedRing r, std::vector<Scalar> coeffs) : Truncated(r) {
    if (coeffs.size() > r.nilpotency) {
        for (std::size_t k = r.nilpotency; k < coeffs.size(); ++k)
            if (!coeffs[k].is_zero()) throw InvalidArgument("truncated: coefficient beyond the nilpotency order");
        coeffs.resize(r.nilpotency);
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!(coeffs[k].field() == r.field)) throw FieldMismatch();
        c_[k] = coeffs[k];
    }
}

Truncated Truncated::constant(TruncatedRing r, const Scalar& c) { return Truncated(r, {c}); }

Truncated Truncated::epsilon(TruncatedRing r) {
    Truncated t(r);
    if (r.nilpotency > 1) t.c_[1] = r.field.one();
    return t;
}

bool Truncated::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

Truncated Truncated::inv() const {
    if (!is_unit()) throw DivisionByZero();
    const std::size_t m = c_.size();
    const Scalar a0inv = c_[0].inv();
    Truncated b(ring_);
    b.c_[0] = a0inv;
    for (std::size_t k = 1; k < m; ++k) {
        Scalar s = ring_.field.zero();
        for (std::size_t j = 1; j <= k; ++j) s += c_[j] * b.c_[k - j];
        b.c_[k] = -(a0inv * s);
    }
    return b;
}

Truncated Truncated::operator-() const {
    Truncated r(ring_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
    return r;
}

Truncated operator+(const Truncated& a, const Truncated& b) {
    same_ring(a, b);
    Truncated r(a.ring_);
    for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

Truncated operator-(const Truncated& a, const Truncated& b) { return a + (-b); }

Truncated operator*(const Truncated& a, const Truncated& b) {
    same_ring(a, b);
    const std::size_t m = a.c_.size();
    Truncated r(a.ring_);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < m; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

std::string Truncated::to_string(char var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        Scalar c = c_[k];
        const bool negative = ring_.field.is_rational() && sgn(c.rational()) < 0;
        if (negative) c = -c;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        if (k == 0) {
            os << c.to_string();
            continue;
        }
        if (!c.is_one()) os << c.to_string() << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return first ? "0" : os.str();
}

TruncMatrix trunc_zero(TruncatedRing r, std::size_t rows, std::size_t cols) {
    return TruncMatrix(rows, cols, Truncated(r));
}

TruncMatrix trunc_identity(TruncatedRing r, std::size_t n) {
    return TruncMatrix::identity(n, Truncated(r), Truncated::constant(r, r.field.one()));
}

TruncMatrix lift(TruncatedRing r, const ScalarMatrix& m) {
    TruncMatrix out = trunc_zero(r, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Truncated::constant(r, m(i, j));
    return out;
}

ScalarMatrix residue(const TruncMatrix& m) {
    ScalarMatrix out(m.rows(), m.cols(), m.zero().ring().field.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).residue();
    return out;
}

std::optional<TruncMatrix> inverse(const TruncMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("inverse: matrix is not square");
    const TruncatedRing r = m.zero().ring();
    const auto r0 = inverse(residue(m));
    if (!r0) return std::nullopt;
    const TruncMatrix two = lift(r, identity_matrix(r.field, m.rows()) + identity_matrix(r.field, m.rows()));
    TruncMatrix x = lift(r, *r0);
    for (std::size_t precision = 1; precision < r.nilpotency; precision *= 2) x = x * (two - m * x);
    return x;
}

std::optional<TruncMatrix> left_inverse(const TruncMatrix& m) {
    const TruncatedRing r = m.zero().ring();
    const std::size_t n = m.cols();
    // Rows of the residue that form an invertible n x n block.
    const ScalarMatrix res = residue(m);
    const RowEchelon ech = rref(res.transpose());
    if (ech.pivots.size() != n) return std::nullopt;
    ScalarMatrix block(n, n, r.field.zero());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < n; ++j) block(a, j) = res(ech.pivots[a], j);
    const ScalarMatrix block_inv = *inverse(block);
    ScalarMatrix l0(n, m.rows(), r.field.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a) l0(i, ech.pivots[a]) = block_inv(i, a);
    const TruncMatrix l = lift(r, l0);
    return *inverse(l * m) * l;
}

}  // namespace equibundle
