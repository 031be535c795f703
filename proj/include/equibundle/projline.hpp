#pragma once

// Vector bundles on the projective line given by a transition matrix.
//
// Chart convention used throughout: U0 = Spec k[t], Uinf = Spec k[s] with
// s = t^-1. A global section is a pair (f, h) with f in k[t]^n, h in k[s]^n
// and h = g f on the overlap. With this convention O(d) has transition t^-d.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equibundle/laurent_matrix.hpp"

namespace equibundle {

/// Rank-n bundle on P^1 with transition datum g in GL_n(k[t, t^-1]).
class BundleOnP1 {
public:
    explicit BundleOnP1(LaurentMatrix transition) : g_(std::move(transition)) {}

    const LaurentMatrix& transition() const { return g_; }
    std::size_t rank() const { return g_.rank(); }
    Field field() const { return g_.field(); }

private:
    LaurentMatrix g_;
};

/// Weakly decreasing integer tuple (d_1 >= ... >= d_n). Doubles as the
/// isomorphism class O(d_1) + ... + O(d_n) and as a cocharacter of GL_n up
/// to conjugacy. Construction sorts.
class SplittingType {
public:
    SplittingType() = default;
    explicit SplittingType(std::vector<std::int64_t> degrees);

    const std::vector<std::int64_t>& degrees() const { return d_; }
    std::size_t rank() const { return d_.size(); }
    std::int64_t total_degree() const;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
    friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

    /// "(1, 0, -2)".
    std::string to_string() const;

private:
    std::vector<std::int64_t> d_;
};

/// g = A * diag(t^k_1, ..., t^k_n) * B with A invertible over k[t^-1] and
/// B invertible over k[t] (both with constant nonzero determinant).
struct BirkhoffFactorization {
    LaurentMatrix negative;  // A
    std::vector<std::int64_t> exponents;  // k_i
    LaurentMatrix positive;  // B

    LaurentMatrix diagonal() const { return LaurentMatrix::diagonal(negative.field(), exponents); }
    LaurentMatrix product() const { return negative * diagonal() * positive; }
};

/// Column reduction over k[t]: repeatedly cancels the leading column
/// coefficients of t^N g until they form an invertible matrix. Each step
/// strictly lowers one column degree, so the loop terminates.
BirkhoffFactorization birkhoff_factorize(const BundleOnP1& bundle);

/// d_i = -k_i, sorted.
SplittingType splitting_type(const BundleOnP1& bundle);

/// diag(t^-d_1, ..., t^-d_n); inverse of splitting_type on isomorphism classes.
BundleOnP1 cocharacter_to_bundle(const SplittingType& type, Field field = Field::rationals());

/// dim_k H^0(P^1, E(m)) by exact linear algebra on Laurent coefficients.
/// Any section has deg f <= m + (largest exponent of g^-1), which fixes the
/// degree bound D; the count is recomputed at D + 1 and must not change.
std::size_t h0_dimension(const BundleOnP1& bundle, std::int64_t twist);

/// Degree bound used by h0_dimension for a given twist.
std::int64_t h0_degree_bound(const BundleOnP1& bundle, std::int64_t twist);

/// Sections with deg f <= degree_bound (no stability check).
std::size_t h0_truncated(const BundleOnP1& bundle, std::int64_t twist, std::int64_t degree_bound);

/// Sum of max(0, d_i + m + 1): h^0 of O(d_1)(m) + ... + O(d_n)(m).
std::size_t h0_of_split(const SplittingType& type, std::int64_t twist);

/// A k-rational point of P^1: an affine coordinate t = x, or infinity.
struct PointOfP1 {
    std::optional<Scalar> affine;  // nullopt = infinity

    static PointOfP1 at(const Scalar& x) { return {x}; }
    static PointOfP1 infinity() { return {std::nullopt}; }
};

/// Fiber of the bundle at a point, trivialized on a chart containing it.
struct FiberReport {
    std::size_t rank;
    bool trivial;
    std::string chart;  // "U0" or "Uinf"
    /// g(x) when the point lies on both charts: the change of
    /// trivialization between the two charts, invertible there.
    std::optional<ScalarMatrix> transition_value;
};

FiberReport fiber_at_point(const BundleOnP1& bundle, const PointOfP1& point);

}  // namespace equibundle
