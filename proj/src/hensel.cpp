#include "equibundle/hensel.hpp"

#include <algorithm>
#include <sstream>

namespace equibundle {

namespace {

ScalarMatrix as_columns(Field f, std::size_t dim, const std::vector<AlgVector>& vs) {
    ScalarMatrix m(dim, vs.size(), f.zero());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = vs[j][i];
    return m;
}

void check_vector(Field f, std::size_t dim, const AlgVector& v) {
    if (v.size() != dim) throw InvalidArgument("algebra: vector of the wrong length");
    for (const auto& x : v)
        if (!(x.field() == f)) throw FieldMismatch();
}

}  // namespace

std::vector<AlgVector> span_basis(Field f, std::size_t dim, const std::vector<AlgVector>& vectors) {
    ScalarMatrix m(vectors.size(), dim, f.zero());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
    const RowEchelon e = rref(std::move(m));
    std::vector<AlgVector> out;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        auto row = e.reduced.row(i);
        out.emplace_back(row.begin(), row.end());
    }
    return out;
}

FiniteDimAlgebra::FiniteDimAlgebra(Field f, std::vector<std::vector<AlgVector>> products, AlgVector unit,
                                   std::vector<AlgVector> ideal)
    : field_(f), products_(std::move(products)), unit_(std::move(unit)) {
    const std::size_t d = unit_.size();
    check_vector(f, d, unit_);
    if (products_.size() != d) throw InvalidArgument("algebra: need d rows of structure constants");
    for (const auto& row : products_) {
        if (row.size() != d) throw InvalidArgument("algebra: need d x d structure constants");
        for (const auto& v : row) check_vector(f, d, v);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(products_[i][j] == products_[j][i])) throw InvalidArgument("algebra: product is not commutative");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (!(multiply(products_[i][j], basis(k)) == multiply(basis(i), products_[j][k])))
                    throw InvalidArgument("algebra: product is not associative");
    for (std::size_t j = 0; j < d; ++j)
        if (!(multiply(unit_, basis(j)) == basis(j))) throw InvalidArgument("algebra: unit is not a unit");
    for (const auto& v : ideal) check_vector(f, d, v);
    ideal_ = span_basis(f, d, ideal);
    for (std::size_t i = 0; i < d; ++i)
        for (const auto& v : ideal_)
            if (!in_ideal(multiply(basis(i), v))) throw InvalidArgument("algebra: ideal is not closed under products");
}

FiniteDimAlgebra FiniteDimAlgebra::monogenic(Field f, const std::vector<Scalar>& monic) {
    if (monic.size() < 2 || !monic.back().is_one()) throw InvalidArgument("monogenic: need a monic polynomial of degree >= 1");
    const std::size_t d = monic.size() - 1;
    // x^k for k < 2d - 1, reduced by x^d = -sum c_i x^i.
    std::vector<AlgVector> pw;
    AlgVector cur(d, f.zero());
    cur[0] = f.one();
    for (std::size_t k = 0; k + 1 < 2 * d; ++k) {
        pw.push_back(cur);
        AlgVector next(d, f.zero());
        for (std::size_t i = 0; i + 1 < d; ++i) next[i + 1] = cur[i];
        for (std::size_t i = 0; i < d; ++i) next[i] -= cur[d - 1] * monic[i];
        cur = std::move(next);
    }
    std::vector<std::vector<AlgVector>> prod(d, std::vector<AlgVector>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i][j] = pw[i + j];
    return FiniteDimAlgebra(f, std::move(prod), pw[0]);
}

FiniteDimAlgebra FiniteDimAlgebra::split(Field f, std::size_t n) {
    std::vector<std::vector<AlgVector>> prod(n, std::vector<AlgVector>(n, AlgVector(n, f.zero())));
    for (std::size_t i = 0; i < n; ++i) prod[i][i][i] = f.one();
    return FiniteDimAlgebra(f, std::move(prod), AlgVector(n, f.one()));
}

FiniteDimAlgebra FiniteDimAlgebra::product(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    const std::size_t da = a.dimension(), db = b.dimension(), d = da + db;
    const Field f = a.field_;
    std::vector<std::vector<AlgVector>> prod(d, std::vector<AlgVector>(d, AlgVector(d, f.zero())));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) std::copy(a.products_[i][j].begin(), a.products_[i][j].end(), prod[i][j].begin());
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            std::copy(b.products_[i][j].begin(), b.products_[i][j].end(), prod[da + i][da + j].begin() + da);
    AlgVector unit(a.unit_);
    unit.insert(unit.end(), b.unit_.begin(), b.unit_.end());
    std::vector<AlgVector> ideal;
    for (const auto& v : a.ideal_) {
        AlgVector w(v);
        w.resize(d, f.zero());
        ideal.push_back(std::move(w));
    }
    for (const auto& v : b.ideal_) {
        AlgVector w(da, f.zero());
        w.insert(w.end(), v.begin(), v.end());
        ideal.push_back(std::move(w));
    }
    return FiniteDimAlgebra(f, std::move(prod), std::move(unit), std::move(ideal));
}

FiniteDimAlgebra FiniteDimAlgebra::tensor(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    const std::size_t da = a.dimension(), db = b.dimension(), d = da * db;
    const Field f = a.field_;
    auto kron = [&](const AlgVector& x, const AlgVector& y) {
        AlgVector out(d, f.zero());
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j) out[i * db + j] = x[i] * y[j];
        return out;
    };
    std::vector<std::vector<AlgVector>> prod(d, std::vector<AlgVector>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            prod[i][j] = kron(a.products_[i / db][j / db], b.products_[i % db][j % db]);
    // I (x) B + A (x) I'.
    std::vector<AlgVector> ideal;
    for (const auto& v : a.ideal_)
        for (std::size_t j = 0; j < db; ++j) ideal.push_back(kron(v, b.basis(j)));
    for (const auto& v : b.ideal_)
        for (std::size_t i = 0; i < da; ++i) ideal.push_back(kron(a.basis(i), v));
    return FiniteDimAlgebra(f, std::move(prod), kron(a.unit_, b.unit_), std::move(ideal));
}

FiniteDimAlgebra FiniteDimAlgebra::with_ideal(std::vector<AlgVector> ideal) const {
    return FiniteDimAlgebra(field_, products_, unit_, std::move(ideal));
}

AlgVector FiniteDimAlgebra::basis(std::size_t i) const {
    AlgVector v = zero();
    v.at(i) = field_.one();
    return v;
}

AlgVector FiniteDimAlgebra::multiply(const AlgVector& a, const AlgVector& b) const {
    const std::size_t d = dimension();
    AlgVector out = zero();
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j].is_zero()) continue;
            const Scalar c = a[i] * b[j];
            const AlgVector& p = products_[i][j];
            for (std::size_t k = 0; k < d; ++k)
                if (!p[k].is_zero()) out[k] += c * p[k];
        }
    }
    return out;
}

AlgVector FiniteDimAlgebra::add(const AlgVector& a, const AlgVector& b) const {
    AlgVector out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

AlgVector FiniteDimAlgebra::scale(const Scalar& c, const AlgVector& a) const {
    AlgVector out(a);
    for (auto& x : out) x = c * x;
    return out;
}

AlgVector FiniteDimAlgebra::power(const AlgVector& a, std::size_t k) const {
    AlgVector result = unit_, base = a;
    while (k) {
        if (k & 1) result = multiply(result, base);
        k >>= 1;
        if (k) base = multiply(base, base);
    }
    return result;
}

ScalarMatrix FiniteDimAlgebra::multiplication_matrix(const AlgVector& a) const {
    const std::size_t d = dimension();
    ScalarMatrix m(d, d, field_.zero());
    for (std::size_t j = 0; j < d; ++j) {
        const AlgVector col = multiply(a, basis(j));
        for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
    }
    return m;
}

bool FiniteDimAlgebra::in_ideal(const AlgVector& a) const {
    if (std::all_of(a.begin(), a.end(), [](const Scalar& x) { return x.is_zero(); })) return true;
    std::vector<AlgVector> vs = ideal_;
    vs.push_back(a);
    return rank(as_columns(field_, dimension(), vs)) == ideal_.size();
}

std::vector<AlgVector> jacobson_radical(const FiniteDimAlgebra& a) {
    const std::size_t d = a.dimension();
    const Field f = a.field();
    ScalarMatrix m(d, d, f.zero());
    if (f.is_rational()) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const ScalarMatrix l = a.multiplication_matrix(a.products()[i][j]);
                Scalar tr = f.zero();
                for (std::size_t k = 0; k < d; ++k) tr += l(k, k);
                m(i, j) = tr;
            }
    } else {
        std::size_t q = f.characteristic();
        while (q < d) q *= f.characteristic();
        for (std::size_t j = 0; j < d; ++j) {
            const AlgVector v = a.power(a.basis(j), q);
            for (std::size_t i = 0; i < d; ++i) m(i, j) = v[i];
        }
    }
    const ScalarMatrix ker = kernel_basis(m);
    std::vector<AlgVector> vs;
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        AlgVector v(d, f.zero());
        for (std::size_t i = 0; i < d; ++i) v[i] = ker(i, j);
        vs.push_back(std::move(v));
    }
    return span_basis(f, d, vs);
}

bool is_henselian_pair(const FiniteDimAlgebra& a) {
    const auto rad = jacobson_radical(a);
    std::vector<AlgVector> both = rad;
    both.insert(both.end(), a.ideal().begin(), a.ideal().end());
    return span_basis(a.field(), a.dimension(), both).size() == rad.size();
}

IdempotentLift lift_idempotent(const FiniteDimAlgebra& a, const AlgVector& ebar) {
    check_vector(a.field(), a.dimension(), ebar);
    if (!is_henselian_pair(a)) throw PreconditionViolated("lift_idempotent: ideal is not nilpotent");
    const Field f = a.field();
    const Scalar two = f.from_int(2), three = f.from_int(3);
    auto defect = [&](const AlgVector& e) { return a.add(a.multiply(e, e), a.scale(-f.one(), e)); };
    if (!a.in_ideal(defect(ebar))) throw InvalidArgument("lift_idempotent: element is not idempotent modulo the ideal");
    // The defect e^2 - e lies in I^(2^k) after k steps and I^d = 0.
    IdempotentLift out{ebar, 0};
    const AlgVector zero = a.zero();
    while (!(defect(out.e) == zero)) {
        if (out.iterations > a.dimension() + 1) throw std::logic_error("lift_idempotent: iteration did not converge");
        const AlgVector e2 = a.multiply(out.e, out.e);
        const AlgVector e3 = a.multiply(e2, out.e);
        out.e = a.add(a.scale(three, e2), a.scale(-two, e3));
        ++out.iterations;
    }
    return out;
}

bool trivially_henselian(const GradedAlgebra& b) {
    const auto& w = b.degrees();
    return std::all_of(w.begin(), w.end(), [](std::int64_t d) { return d > 0; }) ||
           std::all_of(w.begin(), w.end(), [](std::int64_t d) { return d < 0; });
}

std::string to_string(const AlgVector& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
    os << ']';
    return os.str();
}

}  // namespace equibundle
