#include "equibundle/filtered.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace equibundle {

FilteredModule::FilteredModule(TruncatedRing ring, std::int64_t lo, std::vector<std::size_t> ranks,
                               std::vector<TruncMatrix> maps)
    : ring_(ring), lo_(lo), ranks_(std::move(ranks)), maps_(std::move(maps)) {
    if (ring_.nilpotency == 0) throw InvalidArgument("filtered module: nilpotency order must be at least 1");
    if (ranks_.empty()) throw InvalidArgument("filtered module: empty window");
    if (maps_.size() + 1 != ranks_.size()) throw InvalidArgument("filtered module: need one map per window step");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const TruncMatrix& t = maps_[k];
        if (t.rows() != ranks_[k + 1] || t.cols() != ranks_[k])
            throw InvalidArgument("filtered module: map " + std::to_string(lo_ + static_cast<std::int64_t>(k)) +
                                  " has the wrong shape");
        if (!(t.zero().ring() == ring_)) throw InvalidArgument("filtered module: map over a different ring");
        for (std::size_t i = 0; i < t.rows(); ++i)
            for (std::size_t j = 0; j < t.cols(); ++j)
                if (!(t(i, j).ring() == ring_)) throw InvalidArgument("filtered module: entry over a different ring");
    }
}

std::size_t FilteredModule::rank_at(std::int64_t i) const {
    if (i < lo_) return 0;
    if (i > hi()) return ranks_.back();
    return ranks_[static_cast<std::size_t>(i - lo_)];
}

const TruncMatrix& FilteredModule::map_at(std::int64_t i) const {
    if (i < lo_ || i >= hi()) throw InvalidArgument("filtered module: no map stored at " + std::to_string(i));
    return maps_[static_cast<std::size_t>(i - lo_)];
}

std::size_t GradedFiberData::total_rank() const {
    std::size_t n = 0;
    for (const auto& [d, r] : ranks) n += r;
    return n;
}

SplittingType GradedFiberData::to_splitting_type() const {
    std::vector<std::int64_t> d;
    for (const auto& [deg, r] : ranks) d.insert(d.end(), r, deg);
    return SplittingType(std::move(d));
}

std::string GradedFiberData::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [d, r] : ranks) {
        os << (first ? "" : ", ") << d << ": " << r;
        first = false;
    }
    os << '}';
    return os.str();
}

Validation validate_filtered(const FilteredModule& f) {
    Validation v;
    for (std::int64_t i = f.lo(); i < f.hi(); ++i) {
        const TruncMatrix& t = f.map_at(i);
        auto l = left_inverse(t);
        if (!l) {
            v.ok = false;
            v.reason = "map " + std::to_string(i) + " is not split injective";
            v.retractions.clear();
            return v;
        }
        if (!(*l * t == trunc_identity(f.ring(), t.cols()))) {
            v.ok = false;
            v.reason = "retraction of map " + std::to_string(i) + " failed to verify";
            v.retractions.clear();
            return v;
        }
        v.retractions.push_back(std::move(*l));
    }
    return v;
}

namespace {

void require_valid(const FilteredModule& f, const char* op) {
    const auto v = validate_filtered(f);
    if (!v.ok) throw InvalidArgument(std::string(op) + ": " + v.reason);
}

}  // namespace

ColimitModule colimit_module(const FilteredModule& f) {
    require_valid(f, "colimit_module");
    ColimitModule c;
    c.rank = f.total_rank();
    const std::size_t w = f.ranks().size();
    c.steps.assign(w, TruncMatrix());
    c.steps[w - 1] = trunc_identity(f.ring(), c.rank);
    for (std::size_t k = w - 1; k-- > 0;) c.steps[k] = c.steps[k + 1] * f.maps()[k];
    c.step_ranks = f.ranks();
    return c;
}

GradedFiberData associated_graded(const FilteredModule& f) {
    require_valid(f, "associated_graded");
    GradedFiberData g;
    std::size_t prev = 0;
    for (std::int64_t i = f.lo(); i <= f.hi(); ++i) {
        const std::size_t r = f.rank_at(i);
        if (r > prev) g.ranks[i] = r - prev;
        prev = r;
    }
    return g;
}

namespace {

TruncMatrix random_automorphism(TruncatedRing r, std::size_t n, std::mt19937_64& gen) {
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (;;) {
        TruncMatrix m = trunc_zero(r, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Scalar> c(r.nilpotency);
                for (auto& x : c) x = r.field.from_int(coeff(gen));
                m(i, j) = Truncated(r, std::move(c));
            }
        if (inverse(residue(m))) return m;
    }
}

}  // namespace

Splitting split_filtration(const FilteredModule& f, std::optional<std::uint64_t> seed) {
    const ColimitModule c = colimit_module(f);
    const TruncatedRing r = f.ring();
    const std::size_t n = c.rank;
    std::mt19937_64 gen(seed.value_or(0));

    Splitting s;
    std::vector<std::vector<Truncated>> cols;
    std::size_t chosen_rank = 0;
    for (std::int64_t i = f.lo(); i <= f.hi(); ++i) {
        const std::size_t k = static_cast<std::size_t>(i - f.lo());
        TruncMatrix cand = c.steps[k];
        if (seed) cand = cand * random_automorphism(r, cand.cols(), gen);
        const std::size_t want = c.step_ranks[k];
        for (std::size_t j = 0; j < cand.cols() && chosen_rank < want; ++j) {
            ScalarMatrix trial(n, cols.size() + 1, r.field.zero());
            for (std::size_t a = 0; a < cols.size(); ++a)
                for (std::size_t row = 0; row < n; ++row) trial(row, a) = cols[a][row].residue();
            for (std::size_t row = 0; row < n; ++row) trial(row, cols.size()) = cand(row, j).residue();
            if (rank(trial) <= chosen_rank) continue;
            std::vector<Truncated> v(n);
            for (std::size_t row = 0; row < n; ++row) v[row] = cand(row, j);
            cols.push_back(std::move(v));
            s.degrees.push_back(i);
            ++s.grading.ranks[i];
            ++chosen_rank;
        }
        if (chosen_rank != want) throw std::logic_error("split_filtration: residue basis did not extend");
    }
    s.iso = trunc_zero(r, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t row = 0; row < n; ++row) s.iso(row, a) = cols[a][row];
    return s;
}

bool verify_splitting(const FilteredModule& f, const Splitting& s) {
    const ColimitModule c = colimit_module(f);
    const std::size_t n = c.rank;
    if (s.iso.rows() != n || s.iso.cols() != n || s.degrees.size() != n) return false;
    if (!inverse(s.iso)) return false;
    GradedFiberData counted;
    for (auto d : s.degrees) ++counted.ranks[d];
    if (!(counted == s.grading)) return false;
    for (std::size_t k = 0; k < c.steps.size(); ++k) {
        const std::int64_t i = f.lo() + static_cast<std::int64_t>(k);
        const std::size_t ri = c.step_ranks[k];
        for (std::size_t a = 0; a < n; ++a)
            if ((a < ri) != (s.degrees[a] <= i)) return false;
        const TruncMatrix part = s.iso.col_block(0, ri);
        const TruncMatrix& step = c.steps[k];
        const auto lc = left_inverse(step);
        const auto lp = left_inverse(part);
        if (!lc || !lp) return false;
        if (!(step * (*lc * part) == part)) return false;
        if (!(part * (*lp * step) == step)) return false;
    }
    return true;
}

SplittingType iso_class_filtered(const FilteredModule& f) { return associated_graded(f).to_splitting_type(); }

FilteredModule filtered_from_type(TruncatedRing ring, const SplittingType& type) {
    const auto& d = type.degrees();
    if (d.empty()) return FilteredModule(ring, 0, {0}, {});
    const std::int64_t lo = d.back(), hi = d.front();
    std::vector<std::size_t> ranks;
    for (std::int64_t i = lo; i <= hi; ++i)
        ranks.push_back(static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [&](std::int64_t x) { return x <= i; })));
    std::vector<TruncMatrix> maps;
    for (std::size_t k = 0; k + 1 < ranks.size(); ++k) {
        TruncMatrix t = trunc_zero(ring, ranks[k + 1], ranks[k]);
        for (std::size_t j = 0; j < ranks[k]; ++j) t(j, j) = Truncated::constant(ring, ring.field.one());
        maps.push_back(std::move(t));
    }
    return FilteredModule(ring, lo, std::move(ranks), std::move(maps));
}

FilteredModule change_basis(const FilteredModule& f, const std::vector<TruncMatrix>& autos) {
    if (autos.size() != f.ranks().size()) throw InvalidArgument("change_basis: need one automorphism per index");
    std::vector<TruncMatrix> maps;
    for (std::size_t k = 0; k < f.maps().size(); ++k) {
        const auto inv = inverse(autos[k]);
        if (!inv) throw InvalidArgument("change_basis: matrix is not invertible");
        maps.push_back(autos[k + 1] * f.maps()[k] * *inv);
    }
    return FilteredModule(f.ring(), f.lo(), f.ranks(), std::move(maps));
}

}  // namespace equibundle
