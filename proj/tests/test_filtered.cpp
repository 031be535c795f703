#include "doctest.h"
#include "support.hpp"

#include <functional>
#include <set>

#include "equibundle/filtered.hpp"

using namespace equibundle;
using namespace eqb_test;

namespace {

const Field Q = Field::rationals();
const TruncatedRing K{Q, 1};
const TruncatedRing D{Q, 2};

Truncated c(TruncatedRing r, std::vector<long> v) {
    std::vector<Scalar> s;
    for (auto x : v) s.push_back(r.field.from_int(x));
    return Truncated(r, s);
}

TruncMatrix col(TruncatedRing r, std::vector<Truncated> v) {
    TruncMatrix m = trunc_zero(r, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

}  // namespace

TEST_CASE("truncated arithmetic") {
    const TruncatedRing r{Q, 3};
    CHECK(c(r, {1, 1}).inv() == c(r, {1, -1, 1}));
    CHECK(c(r, {0, 1}) * c(r, {0, 0, 1}) == Truncated(r));
    CHECK_THROWS_AS(c(r, {0, 1}).inv(), DivisionByZero);
    CHECK(c(r, {2, -1, 3}).to_string() == "2 - e + 3*e^2");
    CHECK(Truncated(r).to_string() == "0");
    CHECK_THROWS_AS(c(r, {0, 0, 0, 1}), InvalidArgument);
    for (const Field f : {Q, Field::prime(5)})
        for (std::size_t m : {1, 2, 4}) {
            const TruncatedRing rr{f, m};
            for (int trial = 0; trial < 20; ++trial) {
                const auto a = random_truncated(rr), b = random_truncated(rr), d = random_truncated(rr);
                CHECK(a * (b + d) == a * b + a * d);
                CHECK((a * b) * d == a * (b * d));
                if (a.is_unit()) CHECK(a * a.inv() == Truncated::constant(rr, f.one()));
            }
            for (std::size_t n = 1; n <= 3; ++n) {
                const auto m = random_trunc_automorphism(rr, n);
                CHECK(m * *inverse(m) == trunc_identity(rr, n));
            }
        }
}

TEST_CASE("left inverse of a split injection") {
    for (std::size_t m : {1, 2, 3}) {
        const TruncatedRing r{Q, m};
        const auto f = random_filtered(r, 0, {1, 3});
        const auto l = left_inverse(f.maps()[0]);
        REQUIRE(l);
        CHECK(*l * f.maps()[0] == trunc_identity(r, 1));
    }
    // e is not split injective on A.
    CHECK_FALSE(left_inverse(col(D, {c(D, {0, 1})})));
}

TEST_CASE("validate examples") {
    CHECK(validate_filtered(FilteredModule(K, 0, {0}, {})).ok);
    CHECK(validate_filtered(FilteredModule(K, 0, {0, 0}, {trunc_zero(K, 0, 0)})).ok);
    CHECK(validate_filtered(FilteredModule(K, 0, {1, 1}, {trunc_identity(K, 1)})).ok);
    const auto bad = validate_filtered(FilteredModule(K, 0, {1, 1}, {trunc_zero(K, 1, 1)}));
    CHECK_FALSE(bad.ok);
    CHECK(bad.reason.find("map 0") != std::string::npos);
    CHECK_THROWS_AS(FilteredModule(K, 0, {1, 2}, {trunc_zero(K, 1, 1)}), InvalidArgument);
    // Multiplication by e kills e.
    CHECK_FALSE(validate_filtered(FilteredModule(D, 0, {1, 1}, {col(D, {c(D, {0, 1})})})).ok);
}

TEST_CASE("colimit examples") {
    const FilteredModule f(K, 0, {1, 2}, {col(K, {c(K, {1}), Truncated(K)})});
    const auto cm = colimit_module(f);
    CHECK(cm.rank == 2);
    CHECK(cm.steps[0] == f.maps()[0]);
    CHECK(colimit_module(FilteredModule(K, 0, {0}, {})).rank == 0);
    CHECK_THROWS_AS(colimit_module(FilteredModule(K, 0, {1, 1}, {trunc_zero(K, 1, 1)})), InvalidArgument);

    // Ranks of images by row reduction of the residues.
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_filtered(K, 0, {1, 2, 2, 3});
        const auto cg = colimit_module(g);
        std::vector<std::size_t> image_ranks;
        for (const auto& s : cg.steps) image_ranks.push_back(rank(residue(s)));
        CHECK(image_ranks == std::vector<std::size_t>{1, 2, 2, 3});
    }
}

TEST_CASE("associated graded examples") {
    CHECK(associated_graded(FilteredModule(K, 0, {1, 1}, {trunc_identity(K, 1)})).ranks ==
          std::map<std::int64_t, std::size_t>{{0, 1}});
    const auto steps = random_filtered(K, -1, {0, 1, 2});
    CHECK(associated_graded(steps).ranks == std::map<std::int64_t, std::size_t>{{0, 1}, {1, 1}});
    CHECK(associated_graded(steps).to_string() == "{0: 1, 1: 1}");
    for (std::size_t m : {1, 2}) {
        const auto f = random_filtered(TruncatedRing{Q, m}, 3, {1, 1, 2, 4});
        const auto g = associated_graded(f);
        CHECK(g.total_rank() == colimit_module(f).rank);
        // Cokernel ranks of each T, recomputed on the residue field.
        std::size_t prev = 0;
        for (std::int64_t i = f.lo(); i <= f.hi(); ++i) {
            const std::size_t image = i == f.lo() ? 0 : rank(residue(f.map_at(i - 1)));
            const std::size_t coker = f.rank_at(i) - image;
            CHECK((g.ranks.count(i) ? g.ranks.at(i) : 0) == coker);
            prev += coker;
        }
        CHECK(prev == g.total_rank());
    }
}

TEST_CASE("split_filtration examples") {
    const FilteredModule field_case(K, 0, {1, 2}, {col(K, {c(K, {1}), c(K, {3})})});
    const auto s = split_filtration(field_case);
    CHECK(s.grading.ranks == std::map<std::int64_t, std::size_t>{{0, 1}, {1, 1}});
    CHECK(verify_splitting(field_case, s));

    const auto graded = filtered_from_type(K, SplittingType({2, 0, 0, -1}));
    const auto sg = split_filtration(graded);
    CHECK(sg.iso == trunc_identity(K, 4));
    CHECK(verify_splitting(graded, sg));

    // e-twisted inclusion A -> A^2, v = (1, e).
    const FilteredModule twisted(D, 0, {1, 2}, {col(D, {c(D, {1}), c(D, {0, 1})})});
    const auto st = split_filtration(twisted);
    CHECK(st.grading.ranks == std::map<std::int64_t, std::size_t>{{0, 1}, {1, 1}});
    CHECK(verify_splitting(twisted, st));

    // A basis that breaks the filtration is rejected.
    auto wrong = st;
    wrong.iso.swap_cols(0, 1);
    CHECK_FALSE(verify_splitting(twisted, wrong));
}

TEST_CASE("randomized splittings agree and verify") {
    for (const Field f : {Q, Field::prime(5)})
        for (std::size_t m : {1, 2, 3}) {
            const TruncatedRing r{f, m};
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<std::size_t> ranks{static_cast<std::size_t>(uniform(0, 1))};
                for (int k = 0; k < 3; ++k) ranks.push_back(ranks.back() + static_cast<std::size_t>(uniform(0, 1)));
                const auto fm = random_filtered(r, uniform(-2, 2), ranks);
                const auto a = split_filtration(fm, 1 + static_cast<std::uint64_t>(trial));
                const auto b = split_filtration(fm, 1000 + static_cast<std::uint64_t>(trial));
                CHECK(verify_splitting(fm, a));
                CHECK(verify_splitting(fm, b));
                CHECK(a.grading == b.grading);
                CHECK(a.grading == associated_graded(fm));
            }
        }
}

TEST_CASE("iso_class_filtered examples") {
    CHECK(iso_class_filtered(FilteredModule(K, 0, {2}, {})) == SplittingType({0, 0}));
    CHECK(iso_class_filtered(random_filtered(K, -1, {0, 1, 2})) == SplittingType({1, 0}));
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_filtered(D, 0, {1, 2, 3});
        std::vector<TruncMatrix> autos;
        for (auto n : f.ranks()) {
            // Unipotent: identity plus strictly upper triangular.
            TruncMatrix u = trunc_identity(D, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) u(i, j) = random_truncated(D);
            autos.push_back(u);
        }
        CHECK(iso_class_filtered(change_basis(f, autos)) == iso_class_filtered(f));
    }
}

TEST_CASE("iso_class_filtered is a bijection on canonical representatives") {
    std::set<std::vector<std::int64_t>> seen;
    std::size_t count = 0;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t)> rec = [&](std::int64_t top) {
        const SplittingType t(cur);
        CHECK(iso_class_filtered(filtered_from_type(D, t)) == t);
        seen.insert(t.degrees());
        ++count;
        if (cur.size() == 3) return;
        for (std::int64_t d = top; d >= -2; --d) {
            cur.push_back(d);
            rec(d);
            cur.pop_back();
        }
    };
    rec(2);
    CHECK(count == seen.size());
    CHECK(count == 1 + 5 + 15 + 35);
}
