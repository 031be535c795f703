#pragma once

// Vector bundles on [G_m\A^1] over A = k[e]/(e^m): chains of split
// injections E_lo -> E_lo+1 -> ... -> E_hi of free A-modules, with E_i = 0
// below the window and E_i = E_hi above it.
//
// Grading convention: gr_i = E_i / T(E_{i-1}), of rank r_i - r_{i-1}
// (r_{lo-1} = 0).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equibundle/projline.hpp"
#include "equibundle/truncated.hpp"

namespace equibundle {

class FilteredModule {
public:
    /// maps[k] : E_{lo+k} -> E_{lo+k+1}, a ranks[k+1] x ranks[k] matrix.
    /// Shapes are checked here; split injectivity by validate_filtered.
    FilteredModule(TruncatedRing ring, std::int64_t lo, std::vector<std::size_t> ranks, std::vector<TruncMatrix> maps);

    const TruncatedRing& ring() const { return ring_; }
    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(ranks_.size()) - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    std::size_t rank_at(std::int64_t i) const;
    const std::vector<TruncMatrix>& maps() const { return maps_; }
    /// T : E_i -> E_{i+1} for lo <= i < hi.
    const TruncMatrix& map_at(std::int64_t i) const;
    std::size_t total_rank() const { return ranks_.back(); }

    friend bool operator==(const FilteredModule&, const FilteredModule&) = default;

private:
    TruncatedRing ring_;
    std::int64_t lo_;
    std::vector<std::size_t> ranks_;
    std::vector<TruncMatrix> maps_;
};

/// Degree -> rank (ranks >= 1 only).
struct GradedFiberData {
    std::map<std::int64_t, std::size_t> ranks;

    std::size_t total_rank() const;
    /// The degree multiset as a splitting type.
    SplittingType to_splitting_type() const;
    /// "{0: 1, 1: 1}".
    std::string to_string() const;
    friend bool operator==(const GradedFiberData&, const GradedFiberData&) = default;
};

struct Validation {
    bool ok = true;
    std::string reason;
    /// Retraction L_i with L_i T_i = 1 for each map, when ok.
    std::vector<TruncMatrix> retractions;
};

/// Checks every T_i is split injective and certifies it with a retraction.
/// Failures are reported, not thrown.
Validation validate_filtered(const FilteredModule& f);

/// E_inf = E_hi with the filtration steps Fil_i = image of E_i, given by the
/// composed maps C_i : E_i -> E_hi.
struct ColimitModule {
    std::size_t rank = 0;
    std::vector<TruncMatrix> steps;  // steps[i - lo] = C_i
    std::vector<std::size_t> step_ranks;
};

/// Throws InvalidArgument when validation fails.
ColimitModule colimit_module(const FilteredModule& f);

GradedFiberData associated_graded(const FilteredModule& f);

/// A basis of E_inf (the columns of iso) such that the first r_i columns
/// span Fil_i; column k sits in degree degrees[k].
struct Splitting {
    GradedFiberData grading;
    TruncMatrix iso;
    std::vector<std::int64_t> degrees;
};

/// Residue-field splitting lifted through the nilpotent ideal: at each step
/// take images of E_i whose residues extend the residue basis so far. A seed
/// randomizes the choice of images; without one the choice is the first
/// usable standard basis vectors.
Splitting split_filtration(const FilteredModule& f, std::optional<std::uint64_t> seed = std::nullopt);

/// Exact check that iso is invertible and that its first r_i columns and C_i
/// span the same submodule for every i.
bool verify_splitting(const FilteredModule& f, const Splitting& s);

SplittingType iso_class_filtered(const FilteredModule& f);

/// E_i = A^{#{d : d <= i}} with the standard inclusions, window
/// [min d, max d] (window [0, 0] with E_0 = 0 for rank 0).
FilteredModule filtered_from_type(TruncatedRing ring, const SplittingType& type);

/// Conjugates every E_i by an automorphism: T_i -> P_{i+1} T_i P_i^-1.
FilteredModule change_basis(const FilteredModule& f, const std::vector<TruncMatrix>& autos);

}  // namespace equibundle
