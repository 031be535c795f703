#pragma once

// Finite spectral spaces as finite posets under specialization, and the
// connected-component machinery around pi_0: clopen and pro-clopen
// subsets, and maps inducing bijections on them.
//
// x ~> y means y lies in the closure of x. Closed sets are closed under
// specialization, open sets under generization; closed points are maximal.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace equibundle {

/// Bit i set = point i in the subset.
using PointSet = std::uint64_t;

class FinitePoset {
public:
    /// Reflexive-transitive closure of the given pairs (x, y) meaning x ~> y.
    /// Throws InvalidArgument on out-of-range points or a cycle between
    /// distinct points.
    FinitePoset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations);
    /// From a full relation matrix; must already be reflexive, transitive and
    /// antisymmetric.
    static FinitePoset from_matrix(const std::vector<std::vector<bool>>& leq);
    static FinitePoset discrete(std::size_t n);
    /// 0 ~> 1 ~> ... ~> n-1.
    static FinitePoset chain(std::size_t n);

    std::size_t size() const { return n_; }
    PointSet all() const { return n_ == 64 ? ~PointSet{0} : (PointSet{1} << n_) - 1; }
    bool leq(std::size_t x, std::size_t y) const { return (up_[x] >> y) & 1; }
    /// Closure of {x}: all specializations of x.
    PointSet up(std::size_t x) const { return up_[x]; }
    /// All generizations of x.
    PointSet down(std::size_t x) const { return down_[x]; }

    bool is_closed(PointSet z) const;
    bool is_open(PointSet z) const;
    bool is_discrete() const;
    /// Pairs x < y with nothing strictly between, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;

    friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

private:
    FinitePoset() = default;
    void finish();
    std::size_t n_ = 0;
    std::vector<PointSet> up_, down_;
};

class MonotoneMap {
public:
    /// Throws InvalidArgument unless x ~> y implies f(x) ~> f(y).
    MonotoneMap(FinitePoset source, FinitePoset target, std::vector<std::size_t> images);

    const FinitePoset& source() const { return src_; }
    const FinitePoset& target() const { return tgt_; }
    const std::vector<std::size_t>& images() const { return f_; }
    std::size_t operator()(std::size_t x) const { return f_[x]; }
    PointSet preimage(PointSet v) const;
    PointSet image(PointSet z) const;

private:
    FinitePoset src_, tgt_;
    std::vector<std::size_t> f_;
};

/// g after f.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// Connected components of the comparability graph. Components are
/// numbered in order of their smallest point.
struct Components {
    std::vector<std::size_t> label;  // point -> component
    std::vector<PointSet> members;  // component -> points
    std::size_t count() const { return members.size(); }
};

Components pi0(const FinitePoset& x);

/// pi_0(f) as a map of component labels.
std::vector<std::size_t> pi0_map(const MonotoneMap& f);

/// Subsets that are both open and closed, found by testing every subset.
/// Sorted ascending. Requires at most 24 points.
std::vector<PointSet> clopen_sets(const FinitePoset& x);

/// Z is pro-clopen: closed and a union of components. The other two fields
/// recompute the notion independently (intersection of the clopens
/// containing Z, and clopen outright); on a finite space all three agree.
struct ProClopenReport {
    bool closed_union_of_components = false;
    bool intersection_of_clopens = false;
    bool clopen = false;
};

ProClopenReport pro_clopen_report(const FinitePoset& x, PointSet z);
bool pro_clopen_check(const FinitePoset& x, PointSet z);

/// Checks by enumeration on both sides that p^-1 for p : X -> pi_0(X) gives
/// bijections (closed subsets of pi_0 <-> pro-clopen subsets of X, points
/// <-> minimal nonempty pro-clopen subsets, clopen <-> clopen) with inverse
/// Z -> p(Z).
struct LemmaB2Report {
    bool holds = false;
    std::size_t components = 0;
    std::size_t clopens_matched = 0;
    std::size_t pro_clopens_matched = 0;
    std::size_t minimal_matched = 0;
};

LemmaB2Report lemma_b2_report(const FinitePoset& x);
bool lemma_b2_verify(const FinitePoset& x);

/// The three conditions, each computed on its own: (i) V -> f^-1(V) is a
/// bijection ClOpen(Y) -> ClOpen(X); (ii) pi_0(f) is bijective; (iii)
/// pi_0(f) is a homeomorphism for the quotient topologies.
struct PropB3Result {
    bool clopen_bijection = false;
    bool pi0_bijective = false;
    bool pi0_homeomorphism = false;
    bool all_equal() const { return clopen_bijection == pi0_bijective && pi0_bijective == pi0_homeomorphism; }
};

PropB3Result prop_b3_check(const MonotoneMap& f);

/// f bijective with f and f^-1 continuous, tested on all open sets.
bool is_homeomorphism(const MonotoneMap& f);

/// For discrete source and target: f^-1 bijects clopen subsets. Throws
/// InvalidArgument on non-discrete input.
bool homeo_criterion(const MonotoneMap& f);

/// All partial orders on {0..n-1}.
std::vector<FinitePoset> labeled_posets(std::size_t n);
/// One representative per isomorphism class, by minimal relation bitmask
/// over all relabelings.
std::vector<FinitePoset> posets_up_to_isomorphism(std::size_t n);

/// All monotone maps source -> target.
std::vector<MonotoneMap> monotone_maps(const FinitePoset& source, const FinitePoset& target);

struct PropB3Survey {
    std::size_t maps = 0;
    std::size_t agreeing = 0;
    std::size_t all_true = 0;
    friend bool operator==(const PropB3Survey&, const PropB3Survey&) = default;
};

namespace serial {
/// prop_b3_check on every monotone map between every ordered pair of posets.
PropB3Survey survey_prop_b3(const std::vector<FinitePoset>& posets);
}  // namespace serial

namespace parallel {
/// Same survey with the (source, target) pairs distributed over threads.
PropB3Survey survey_prop_b3(const std::vector<FinitePoset>& posets);
}  // namespace parallel

std::string to_string(const FinitePoset& x, PointSet z);

}  // namespace equibundle
