#include "doctest.h"
#include "support.hpp"

#include "equibundle/projline.hpp"

using namespace equibundle;
using namespace eqb_test;

namespace {

const Field Q = Field::rationals();

LaurentPoly t(std::int64_t e, long c = 1) { return LaurentPoly(Q.from_int(c), e); }

BundleOnP1 upper_example() {
    LaurentGrid g(2, 2, LaurentPoly(Q));
    g(0, 0) = t(1);
    g(0, 1) = t(0);
    g(1, 1) = t(-1);
    return BundleOnP1(LaurentMatrix(g));
}

BundleOnP1 line(std::int64_t e) { return BundleOnP1(LaurentMatrix::diagonal(Q, {e})); }

bool entries_in(const LaurentMatrix& m, int sign) {
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j)
            for (const auto& [e, c] : m(i, j).terms())
                if (e * sign < 0) return false;
    return true;
}

void check_factorization(const BundleOnP1& b) {
    const auto fac = birkhoff_factorize(b);
    CHECK(fac.product() == b.transition());
    CHECK(entries_in(fac.negative, -1));
    CHECK(entries_in(fac.positive, 1));
    CHECK(fac.negative.det_unit().exponent == 0);
    CHECK(fac.positive.det_unit().exponent == 0);
}

}  // namespace

TEST_CASE("birkhoff examples") {
    const auto id = birkhoff_factorize(BundleOnP1(LaurentMatrix::identity(Q, 2)));
    CHECK(id.negative == LaurentMatrix::identity(Q, 2));
    CHECK(id.positive == LaurentMatrix::identity(Q, 2));
    CHECK(id.exponents == std::vector<std::int64_t>{0, 0});

    const auto diag = birkhoff_factorize(BundleOnP1(LaurentMatrix::diagonal(Q, {2, -1})));
    CHECK(diag.negative == LaurentMatrix::identity(Q, 2));
    CHECK(diag.positive == LaurentMatrix::identity(Q, 2));
    CHECK(diag.exponents == std::vector<std::int64_t>{2, -1});

    const auto up = birkhoff_factorize(upper_example());
    CHECK(up.diagonal() == LaurentMatrix::identity(Q, 2));
    check_factorization(upper_example());
}

TEST_CASE("splitting type examples") {
    CHECK(splitting_type(BundleOnP1(LaurentMatrix::identity(Q, 3))) == SplittingType({0, 0, 0}));
    CHECK(splitting_type(line(-1)) == SplittingType({1}));
    CHECK(splitting_type(upper_example()) == SplittingType({0, 0}));
    CHECK(SplittingType({-2, 3, 0}).degrees() == std::vector<std::int64_t>{3, 0, -2});
}

TEST_CASE("cocharacter_to_bundle") {
    CHECK(cocharacter_to_bundle(SplittingType({0, 0})).transition() == LaurentMatrix::identity(Q, 2));
    CHECK(cocharacter_to_bundle(SplittingType({1, -1})).transition() == LaurentMatrix::diagonal(Q, {-1, 1}));
    // Round trip for n <= 3, |d| <= 5; the acceptance suite covers n = 4.
    for (std::int64_t a = -5; a <= 5; ++a) {
        CHECK(splitting_type(cocharacter_to_bundle(SplittingType({a}))) == SplittingType({a}));
        for (std::int64_t b = -5; b <= a; ++b)
            for (std::int64_t c = -5; c <= b; ++c) {
                const SplittingType d({a, b, c});
                CHECK(splitting_type(cocharacter_to_bundle(d)) == d);
            }
    }
}

TEST_CASE("h0 examples and the O(1) convention") {
    CHECK(h0_dimension(BundleOnP1(LaurentMatrix::identity(Q, 2)), 0) == 2);
    CHECK(h0_dimension(line(-1), 0) == 2);
    CHECK(h0_dimension(line(1), 0) == 0);
    CHECK(h0_dimension(line(-5), 0) == 6);
    CHECK(h0_dimension(line(-5), -7) == 0);
    // Oracle over twists -3..3 pins the type of [[t, 1], [0, t^-1]].
    for (std::int64_t m = -3; m <= 3; ++m) CHECK(h0_dimension(upper_example(), m) == h0_of_split(SplittingType({0, 0}), m));
}

TEST_CASE("truncating below the bound loses sections") {
    // O(5): all six sections need deg f up to 5.
    CHECK(h0_degree_bound(line(-5), 0) == 5);
    CHECK(h0_truncated(line(-5), 0, 2) == 3);
}

TEST_CASE("equivalence invariance, degree identity, oracle agreement") {
    for (const Field f : {Q, Field::prime(5)}) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = static_cast<std::size_t>(uniform(1, 3));
            std::vector<std::int64_t> d(n);
            for (auto& x : d) x = uniform(-3, 3);
            const SplittingType type(d);
            const auto g = cocharacter_to_bundle(type, f).transition();
            const auto a = random_unimodular(f, n, -1, 2);
            const auto b = random_unimodular(f, n, 1, 2);
            const BundleOnP1 bundle(a * g * b);
            CHECK(splitting_type(bundle) == type);
            CHECK(splitting_type(bundle).total_degree() == -bundle.transition().det_unit().exponent);
            check_factorization(bundle);
            for (std::int64_t m = -3; m <= 3; ++m) CHECK(h0_dimension(bundle, m) == h0_of_split(type, m));
        }
    }
}

TEST_CASE("fibers are trivial on every chart") {
    const auto b = upper_example();
    for (const auto& p : {PointOfP1::at(Q.zero()), PointOfP1::at(Q.one()), PointOfP1::infinity()}) {
        const auto r = fiber_at_point(b, p);
        CHECK(r.rank == 2);
        CHECK(r.trivial);
    }
    CHECK(fiber_at_point(b, PointOfP1::at(Q.zero())).chart == "U0");
    CHECK(fiber_at_point(b, PointOfP1::infinity()).chart == "Uinf");
    CHECK(fiber_at_point(b, PointOfP1::at(Q.one())).transition_value.has_value());
    CHECK_THROWS_AS(fiber_at_point(b, PointOfP1::at(Field::prime(3).one())), FieldMismatch);
}
