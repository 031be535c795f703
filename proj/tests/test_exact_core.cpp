#include "doctest.h"
#include "support.hpp"

#include "equibundle/kernels.hpp"
#include "equibundle/laurent_matrix.hpp"

using namespace equibundle;
using namespace eqb_test;

namespace {

const Field Q = Field::rationals();

LaurentPoly t(std::int64_t e, long c = 1) { return LaurentPoly(Q.from_int(c), e); }

LaurentGrid grid2(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d) {
    LaurentGrid g(2, 2, LaurentPoly(Q));
    g(0, 0) = std::move(a);
    g(0, 1) = std::move(b);
    g(1, 0) = std::move(c);
    g(1, 1) = std::move(d);
    return g;
}

}  // namespace

TEST_CASE("field operations") {
    CHECK(Q.from_ratio(1, 2) + Q.from_ratio(1, 3) == Q.from_ratio(5, 6));
    const Field F5 = Field::prime(5);
    CHECK(F5.from_int(2).inv() == F5.from_int(3));
    CHECK(F5.from_int(-1) == F5.from_int(4));
    CHECK_THROWS_AS(Q.zero().inv(), DivisionByZero);
    CHECK_THROWS_AS(F5.zero().inv(), DivisionByZero);
    CHECK_THROWS_AS(Q.one() + F5.one(), FieldMismatch);
    CHECK_THROWS_AS(F5.one() * Field::prime(7).one(), FieldMismatch);
    CHECK_THROWS_AS(Field::prime(6), InvalidArgument);
    CHECK(Q.from_ratio(4, -6).to_string() == "-2/3");
    CHECK(F5.from_ratio(1, 2) == F5.from_int(3));
}

TEST_CASE("laurent multiplication") {
    const LaurentPoly f = t(1) + t(-1);
    const LaurentPoly g = t(1) - t(-1);
    CHECK(f * g == t(2) - t(-2));
    CHECK(f * t(0) == f);
    CHECK((LaurentPoly(Q) * g).is_zero());
    CHECK_THROWS_AS(f * LaurentPoly(Field::prime(3).one(), 0), FieldMismatch);
    CHECK_THROWS_AS(LaurentPoly(Q).min_exponent(), InvalidArgument);
    CHECK_THROWS_AS(LaurentPoly(Q).max_exponent(), InvalidArgument);
    CHECK((t(2, 3) - t(-1)).to_string() == "3*t^2 - t^-1");
    CHECK(exact_divide(t(2) - t(-2), f) == g);
    CHECK_THROWS_AS(exact_divide(t(2) + t(1), f), InvalidArgument);
}

TEST_CASE("laurent ring axioms on random inputs") {
    for (const Field f : {Q, Field::prime(5)}) {
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = random_laurent(f, -3, 3), b = random_laurent(f, -2, 4), c = random_laurent(f, -4, 1);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("det_unit_exponent") {
    auto id = LaurentMatrix::identity(Q, 2).det_unit();
    CHECK(id.exponent == 0);
    CHECK(id.coeff == Q.one());
    auto d = LaurentMatrix::diagonal(Q, {2, -1}).det_unit();
    CHECK(d.exponent == 1);
    CHECK(d.coeff == Q.one());
    auto u = LaurentMatrix(grid2(t(1), t(0), LaurentPoly(Q), t(-1))).det_unit();
    CHECK(u.exponent == 0);
    CHECK(u.coeff == Q.one());
}

TEST_CASE("construction rejects non-unit determinants") {
    CHECK_THROWS_AS(LaurentMatrix(grid2(t(1), t(0), t(0), t(1))), InvalidArgument);  // t^2 - 1
    CHECK_THROWS_AS(LaurentMatrix(grid2(t(0), t(0), t(0), t(0))), InvalidArgument);  // singular
    CHECK_THROWS_AS(LaurentMatrix(LaurentGrid(0, 0, LaurentPoly(Q))), InvalidArgument);
    LaurentGrid one(1, 1, LaurentPoly(Q));
    one(0, 0) = t(0) + t(1);
    CHECK_THROWS_AS(LaurentMatrix{one}, InvalidArgument);
}

TEST_CASE("det exponent is additive and inverse is exact") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(1, 4));
        std::vector<std::int64_t> e1(n), e2(n);
        for (auto& e : e1) e = uniform(-3, 3);
        for (auto& e : e2) e = uniform(-3, 3);
        const auto m = random_unimodular(Q, n, -1, 2) * LaurentMatrix::diagonal(Q, e1) * random_unimodular(Q, n, 1, 2);
        const auto k = random_unimodular(Q, n, 1, 1) * LaurentMatrix::diagonal(Q, e2);
        CHECK((m * k).det_unit().exponent == m.det_unit().exponent + k.det_unit().exponent);
        CHECK(m * m.inverse() == LaurentMatrix::identity(Q, n));
    }
}

TEST_CASE("parallel kernels agree with the serial reference") {
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t r = static_cast<std::size_t>(uniform(1, 30)), c = static_cast<std::size_t>(uniform(1, 30));
        ScalarMatrix a(r, c, Q.zero()), b(c, r, Q.zero());
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                a(i, j) = random_scalar(Q, 4);
                b(j, i) = random_scalar(Q, 4);
            }
        CHECK(kernels::serial::matmul(a, b) == kernels::parallel::matmul(a, b));

        // Low-rank integer matrix: product of r x k and k x c factors.
        const std::size_t k = static_cast<std::size_t>(uniform(0, 12));
        kernels::IntMatrix left(r, k, mpz_class(0)), right(k, c, mpz_class(0));
        for (auto i = 0u; i < r; ++i)
            for (auto j = 0u; j < k; ++j) left(i, j) = uniform(-50, 50);
        for (auto i = 0u; i < k; ++i)
            for (auto j = 0u; j < c; ++j) right(i, j) = uniform(-50, 50);
        const auto prod = kernels::serial::matmul(left, right);
        CHECK(kernels::parallel::rank_rational(prod) == kernels::serial::rank_rational(prod));
        auto mod = kernels::reduce_mod(prod, 7);
        CHECK(kernels::parallel::rank_mod_p(mod) == kernels::serial::rank_mod_p(mod));
    }
}

TEST_CASE("multi-modular rank survives an unlucky prime") {
    // 2^31 - 1 is the first prime tried; make it divide the only 2x2 minor.
    const long p = (1L << 31) - 1;
    kernels::IntMatrix m(2, 2, mpz_class(0));
    m(0, 0) = 1;
    m(0, 1) = 0;
    m(1, 0) = 0;
    m(1, 1) = mpz_class(p) * 3;
    CHECK(kernels::serial::rank_rational(m) == 2);
    CHECK(kernels::parallel::rank_rational(m) == 2);
}

TEST_CASE("linear algebra helpers") {
    ScalarMatrix m(2, 3, Q.zero());
    m(0, 0) = Q.from_int(1);
    m(0, 1) = Q.from_int(2);
    m(1, 0) = Q.from_int(2);
    m(1, 1) = Q.from_int(4);
    m(1, 2) = Q.from_int(1);
    CHECK(rank(m) == 2);
    const auto k = kernel_basis(m);
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());
    ScalarMatrix sq(2, 2, Q.zero());
    sq(0, 0) = Q.from_int(2);
    sq(0, 1) = Q.from_int(1);
    sq(1, 1) = Q.from_int(3);
    CHECK(*inverse(sq) * sq == identity_matrix(Q, 2));
    CHECK_FALSE(inverse(zero_matrix(Q, 2, 2)).has_value());
}
