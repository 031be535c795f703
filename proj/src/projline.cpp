#include "equibundle/projline.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace equibundle {

SplittingType::SplittingType(std::vector<std::int64_t> degrees) : d_(std::move(degrees)) {
    std::sort(d_.begin(), d_.end(), std::greater<>());
}

std::int64_t SplittingType::total_degree() const { return std::accumulate(d_.begin(), d_.end(), std::int64_t{0}); }

std::string SplittingType::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < d_.size(); ++i) os << (i ? ", " : "") << d_[i];
    os << ')';
    return os.str();
}

namespace {

std::int64_t column_degree(const LaurentGrid& p, std::size_t j) {
    std::int64_t c = 0;
    bool any = false;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if (p(i, j).is_zero()) continue;
        c = any ? std::max(c, p(i, j).max_exponent()) : p(i, j).max_exponent();
        any = true;
    }
    if (!any) throw InvalidArgument("birkhoff: zero column in an invertible matrix");
    return c;
}

}  // namespace

BirkhoffFactorization birkhoff_factorize(const BundleOnP1& bundle) {
    const LaurentMatrix& g = bundle.transition();
    const std::size_t n = g.rank();
    const Field f = g.field();
    const std::int64_t shift = -g.min_exponent();

    // p = t^shift * g has entries in k[t]; p * U stays polynomial and b
    // tracks U^-1.
    LaurentGrid p = g.grid();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = p(i, j).shifted(shift);
    LaurentGrid b = laurent_identity(f, n);

    std::vector<std::int64_t> deg(n);
    for (;;) {
        for (std::size_t j = 0; j < n; ++j) deg[j] = column_degree(p, j);
        ScalarMatrix lead(n, n, f.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) lead(i, j) = p(i, j).coeff(deg[j]);
        const ScalarMatrix ker = kernel_basis(lead);
        if (ker.cols() == 0) break;

        // Column with the largest degree in the support of the relation.
        std::size_t pivot = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!ker(j, 0).is_zero() && (pivot == n || deg[j] > deg[pivot])) pivot = j;
        const Scalar alpha_inv = ker(pivot, 0).inv();

        for (std::size_t j = 0; j < n; ++j) {
            if (j == pivot || ker(j, 0).is_zero()) continue;
            const LaurentPoly factor(ker(j, 0) * alpha_inv, deg[pivot] - deg[j]);
            for (std::size_t i = 0; i < n; ++i) p(i, pivot) += factor * p(i, j);
            for (std::size_t c = 0; c < n; ++c) b(j, c) -= factor * b(pivot, c);
        }
    }

    LaurentGrid a = p;
    std::vector<std::int64_t> k(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) a(i, j) = p(i, j).shifted(-deg[j]);
        k[j] = deg[j] - shift;
    }
    return {LaurentMatrix(std::move(a)), std::move(k), LaurentMatrix(std::move(b))};
}

SplittingType splitting_type(const BundleOnP1& bundle) {
    const auto fac = birkhoff_factorize(bundle);
    std::vector<std::int64_t> d(fac.exponents.size());
    std::transform(fac.exponents.begin(), fac.exponents.end(), d.begin(), [](std::int64_t k) { return -k; });
    return SplittingType(std::move(d));
}

BundleOnP1 cocharacter_to_bundle(const SplittingType& type, Field field) {
    std::vector<std::int64_t> e(type.rank());
    std::transform(type.degrees().begin(), type.degrees().end(), e.begin(), [](std::int64_t d) { return -d; });
    return BundleOnP1(LaurentMatrix::diagonal(field, e));
}

std::int64_t h0_degree_bound(const BundleOnP1& bundle, std::int64_t twist) {
    return twist + bundle.transition().inverse().max_exponent();
}

std::size_t h0_truncated(const BundleOnP1& bundle, std::int64_t twist, std::int64_t degree_bound) {
    if (degree_bound < 0) return 0;
    const LaurentMatrix& g = bundle.transition();
    const Field f = g.field();
    const std::size_t n = g.rank();
    const std::size_t width = static_cast<std::size_t>(degree_bound) + 1;
    const std::int64_t top = g.max_exponent() + degree_bound - twist;
    if (top <= 0) return n * width;
    // Unknown (j, e): coefficient of t^e in f_j. Condition (i, x): the
    // coefficient of t^x, x > 0, in (t^-twist g f)_i vanishes.
    const std::size_t conditions_per_row = static_cast<std::size_t>(top);
    ScalarMatrix m(n * conditions_per_row, n * width, f.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [a, c] : g(i, j).terms())
                for (std::size_t e = 0; e < width; ++e) {
                    const std::int64_t x = a + static_cast<std::int64_t>(e) - twist;
                    if (x <= 0) continue;
                    m(i * conditions_per_row + static_cast<std::size_t>(x - 1), j * width + e) += c;
                }
    return n * width - rank(m);
}

std::size_t h0_dimension(const BundleOnP1& bundle, std::int64_t twist) {
    const std::int64_t bound = h0_degree_bound(bundle, twist);
    const std::size_t h = h0_truncated(bundle, twist, bound);
    if (h0_truncated(bundle, twist, bound + 1) != h)
        throw std::logic_error("h0_dimension: section count not stable at the degree bound");
    return h;
}

std::size_t h0_of_split(const SplittingType& type, std::int64_t twist) {
    std::size_t h = 0;
    for (auto d : type.degrees())
        if (d + twist + 1 > 0) h += static_cast<std::size_t>(d + twist + 1);
    return h;
}

FiberReport fiber_at_point(const BundleOnP1& bundle, const PointOfP1& point) {
    const std::size_t n = bundle.rank();
    if (!point.affine) return {n, true, "Uinf", std::nullopt};
    const Scalar& x = *point.affine;
    if (!(x.field() == bundle.field())) throw FieldMismatch();
    if (x.is_zero()) return {n, true, "U0", std::nullopt};
    ScalarMatrix value(n, n, bundle.field().zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) value(i, j) = bundle.transition()(i, j).evaluate(x);
    if (!inverse(value)) throw std::logic_error("transition matrix not invertible at a point of Gm");
    return {n, true, "U0", std::move(value)};
}

}  // namespace equibundle
