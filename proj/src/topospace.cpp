#include "equibundle/topospace.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "equibundle/errors.hpp"

namespace equibundle {

namespace {

constexpr std::size_t kMaxEnumerated = 24;

bool bit(PointSet s, std::size_t i) { return (s >> i) & 1; }

void require_enumerable(const FinitePoset& x, const char* op) {
    if (x.size() > kMaxEnumerated) throw InvalidArgument(std::string(op) + ": too many points to enumerate subsets");
}

}  // namespace

FinitePoset::FinitePoset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations) : n_(n) {
    if (n > 64) throw InvalidArgument("poset: at most 64 points");
    up_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) up_[x] = PointSet{1} << x;
    for (const auto& [x, y] : relations) {
        if (x >= n || y >= n) throw InvalidArgument("poset: relation mentions a point out of range");
        up_[x] |= PointSet{1} << y;
    }
    // Warshall closure on bitsets.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < n; ++x)
            if (bit(up_[x], k)) up_[x] |= up_[k];
    finish();
}

FinitePoset FinitePoset::from_matrix(const std::vector<std::vector<bool>>& leq) {
    FinitePoset p;
    p.n_ = leq.size();
    if (p.n_ > 64) throw InvalidArgument("poset: at most 64 points");
    p.up_.assign(p.n_, 0);
    for (std::size_t x = 0; x < p.n_; ++x) {
        if (leq[x].size() != p.n_) throw InvalidArgument("poset: relation matrix is not square");
        if (!leq[x][x]) throw InvalidArgument("poset: relation is not reflexive");
        for (std::size_t y = 0; y < p.n_; ++y)
            if (leq[x][y]) p.up_[x] |= PointSet{1} << y;
    }
    for (std::size_t x = 0; x < p.n_; ++x)
        for (std::size_t y = 0; y < p.n_; ++y)
            if (bit(p.up_[x], y) && (p.up_[y] & ~p.up_[x])) throw InvalidArgument("poset: relation is not transitive");
    p.finish();
    return p;
}

void FinitePoset::finish() {
    down_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y)
            if (bit(up_[x], y)) {
                if (x != y && bit(up_[y], x)) throw InvalidArgument("poset: distinct points specialize to each other");
                down_[y] |= PointSet{1} << x;
            }
}

FinitePoset FinitePoset::discrete(std::size_t n) { return FinitePoset(n, {}); }

FinitePoset FinitePoset::chain(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> r;
    for (std::size_t i = 0; i + 1 < n; ++i) r.emplace_back(i, i + 1);
    return FinitePoset(n, r);
}

bool FinitePoset::is_closed(PointSet z) const {
    for (std::size_t x = 0; x < n_; ++x)
        if (bit(z, x) && (up_[x] & ~z)) return false;
    return true;
}

bool FinitePoset::is_open(PointSet z) const {
    for (std::size_t x = 0; x < n_; ++x)
        if (bit(z, x) && (down_[x] & ~z)) return false;
    return true;
}

bool FinitePoset::is_discrete() const {
    for (std::size_t x = 0; x < n_; ++x)
        if (up_[x] != (PointSet{1} << x)) return false;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_relations() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y) {
            if (x == y || !bit(up_[x], y)) continue;
            const PointSet between = (up_[x] & down_[y]) & ~((PointSet{1} << x) | (PointSet{1} << y));
            if (!between) out.emplace_back(x, y);
        }
    return out;
}

MonotoneMap::MonotoneMap(FinitePoset source, FinitePoset target, std::vector<std::size_t> images)
    : src_(std::move(source)), tgt_(std::move(target)), f_(std::move(images)) {
    if (f_.size() != src_.size()) throw InvalidArgument("map: need one image per source point");
    for (auto y : f_)
        if (y >= tgt_.size()) throw InvalidArgument("map: image out of range");
    for (std::size_t x = 0; x < src_.size(); ++x)
        for (std::size_t y = 0; y < src_.size(); ++y)
            if (src_.leq(x, y) && !tgt_.leq(f_[x], f_[y])) throw InvalidArgument("map: does not preserve specialization");
}

PointSet MonotoneMap::preimage(PointSet v) const {
    PointSet out = 0;
    for (std::size_t x = 0; x < f_.size(); ++x)
        if (bit(v, f_[x])) out |= PointSet{1} << x;
    return out;
}

PointSet MonotoneMap::image(PointSet z) const {
    PointSet out = 0;
    for (std::size_t x = 0; x < f_.size(); ++x)
        if (bit(z, x)) out |= PointSet{1} << f_[x];
    return out;
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (!(f.target() == g.source())) throw InvalidArgument("compose: maps are not composable");
    std::vector<std::size_t> h(f.source().size());
    for (std::size_t x = 0; x < h.size(); ++x) h[x] = g(f(x));
    return MonotoneMap(f.source(), g.target(), std::move(h));
}

Components pi0(const FinitePoset& x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (x.leq(a, b)) {
                const std::size_t ra = find(a), rb = find(b);
                if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
            }
    Components c;
    c.label.assign(n, 0);
    std::vector<std::size_t> id(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t r = find(a);
        if (id[r] == n) {
            id[r] = c.members.size();
            c.members.push_back(0);
        }
        c.label[a] = id[r];
        c.members[id[r]] |= PointSet{1} << a;
    }
    return c;
}

std::vector<std::size_t> pi0_map(const MonotoneMap& f) {
    const Components cs = pi0(f.source()), ct = pi0(f.target());
    std::vector<std::size_t> m(cs.count());
    for (std::size_t k = 0; k < cs.count(); ++k) m[k] = ct.label[f(static_cast<std::size_t>(std::countr_zero(cs.members[k])))];
    return m;
}

std::vector<PointSet> clopen_sets(const FinitePoset& x) {
    require_enumerable(x, "clopen_sets");
    std::vector<PointSet> out;
    for (PointSet z = 0; z <= x.all(); ++z)
        if (x.is_open(z) && x.is_closed(z)) out.push_back(z);
    return out;
}

ProClopenReport pro_clopen_report(const FinitePoset& x, PointSet z) {
    require_enumerable(x, "pro_clopen_report");
    ProClopenReport r;
    if (z & ~x.all()) throw InvalidArgument("pro_clopen_check: subset mentions a point out of range");
    bool unions = true;
    for (const auto m : pi0(x).members)
        if ((z & m) && (z & m) != m) unions = false;
    r.closed_union_of_components = x.is_closed(z) && unions;
    PointSet meet = x.all();
    for (const auto c : clopen_sets(x))
        if ((z & c) == z) meet &= c;
    r.intersection_of_clopens = meet == z;
    r.clopen = x.is_open(z) && x.is_closed(z);
    return r;
}

bool pro_clopen_check(const FinitePoset& x, PointSet z) { return pro_clopen_report(x, z).closed_union_of_components; }

LemmaB2Report lemma_b2_report(const FinitePoset& x) {
    require_enumerable(x, "lemma_b2_verify");
    const Components c = pi0(x);
    const std::size_t k = c.count();
    auto preimage = [&](PointSet s) {
        PointSet z = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (bit(s, i)) z |= c.members[i];
        return z;
    };
    auto image = [&](PointSet z) {
        PointSet s = 0;
        for (std::size_t a = 0; a < x.size(); ++a)
            if (bit(z, a)) s |= PointSet{1} << c.label[a];
        return s;
    };

    // Pro-clopen subsets of X: intersections of families of clopens. On a
    // finite space these are the intersections over subfamilies.
    const auto clopens = clopen_sets(x);
    std::set<PointSet> pro;
    for (PointSet z = 0; z <= x.all(); ++z) {
        PointSet meet = x.all();
        for (const auto cl : clopens)
            if ((z & cl) == z) meet &= cl;
        if (meet == z) pro.insert(z);
    }
    std::set<PointSet> minimal;
    for (const auto z : pro) {
        if (!z) continue;
        bool is_min = true;
        for (const auto w : pro)
            if (w && w != z && (w & z) == w) is_min = false;
        if (is_min) minimal.insert(z);
    }
    const std::set<PointSet> clopen_set(clopens.begin(), clopens.end());

    LemmaB2Report r;
    r.components = k;
    const PointSet all_pi0 = k == 64 ? ~PointSet{0} : (PointSet{1} << k) - 1;
    bool ok = true;
    std::set<PointSet> hit_pro, hit_clopen, hit_min;
    // pi_0 is finite and discrete: every subset is closed and clopen.
    for (PointSet s = 0; s <= all_pi0; ++s) {
        const PointSet z = preimage(s);
        ok = ok && image(z) == s && pro.count(z) && clopen_set.count(z);
        hit_pro.insert(z);
        hit_clopen.insert(z);
        if (std::popcount(s) == 1) {
            ok = ok && minimal.count(z);
            hit_min.insert(z);
        }
    }
    for (const auto z : pro) ok = ok && preimage(image(z)) == z;
    ok = ok && hit_pro == pro && hit_clopen == clopen_set && hit_min == minimal;
    ok = ok && hit_pro.size() == (std::size_t{1} << k);
    r.holds = ok;
    r.clopens_matched = hit_clopen.size();
    r.pro_clopens_matched = hit_pro.size();
    r.minimal_matched = hit_min.size();
    return r;
}

bool lemma_b2_verify(const FinitePoset& x) { return lemma_b2_report(x).holds; }

namespace {

// Open subsets of pi_0(X) for the quotient topology: U open iff p^-1(U) is
// open in X.
std::vector<bool> quotient_opens(const FinitePoset& x, const Components& c) {
    const std::size_t k = c.count();
    std::vector<bool> open(std::size_t{1} << k);
    for (PointSet s = 0; s < open.size(); ++s) {
        PointSet z = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (bit(s, i)) z |= c.members[i];
        open[s] = x.is_open(z);
    }
    return open;
}

PointSet apply(const std::vector<std::size_t>& m, PointSet s) {
    PointSet out = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (bit(s, i)) out |= PointSet{1} << m[i];
    return out;
}

PointSet pull(const std::vector<std::size_t>& m, PointSet s) {
    PointSet out = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (bit(s, m[i])) out |= PointSet{1} << i;
    return out;
}

bool bijective(const std::vector<std::size_t>& m, std::size_t target_size) {
    if (m.size() != target_size) return false;
    std::vector<bool> seen(target_size, false);
    for (auto y : m) {
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

}  // namespace

PropB3Result prop_b3_check(const MonotoneMap& f) {
    const FinitePoset& x = f.source();
    const FinitePoset& y = f.target();
    require_enumerable(x, "prop_b3_check");
    require_enumerable(y, "prop_b3_check");
    PropB3Result r;

    const auto cx = clopen_sets(x), cy = clopen_sets(y);
    std::set<PointSet> pulled;
    for (const auto v : cy) pulled.insert(f.preimage(v));
    r.clopen_bijection = pulled.size() == cy.size() && std::set<PointSet>(cx.begin(), cx.end()) == pulled;

    const Components px = pi0(x), py = pi0(y);
    const auto m = pi0_map(f);
    r.pi0_bijective = bijective(m, py.count());

    if (r.pi0_bijective) {
        const auto ox = quotient_opens(x, px), oy = quotient_opens(y, py);
        bool homeo = true;
        for (PointSet s = 0; s < oy.size(); ++s)
            if (oy[s] && !ox[pull(m, s)]) homeo = false;
        for (PointSet s = 0; s < ox.size(); ++s)
            if (ox[s] && !oy[apply(m, s)]) homeo = false;
        r.pi0_homeomorphism = homeo;
    }
    return r;
}

bool is_homeomorphism(const MonotoneMap& f) {
    const FinitePoset& x = f.source();
    const FinitePoset& y = f.target();
    require_enumerable(x, "is_homeomorphism");
    require_enumerable(y, "is_homeomorphism");
    if (!bijective(f.images(), y.size())) return false;
    for (PointSet v = 0; v <= y.all(); ++v)
        if (y.is_open(v) && !x.is_open(f.preimage(v))) return false;
    for (PointSet u = 0; u <= x.all(); ++u)
        if (x.is_open(u) && !y.is_open(f.image(u))) return false;
    return true;
}

bool homeo_criterion(const MonotoneMap& f) {
    if (!f.source().is_discrete() || !f.target().is_discrete())
        throw InvalidArgument("homeo_criterion: source and target must be discrete");
    const auto cx = clopen_sets(f.source()), cy = clopen_sets(f.target());
    std::set<PointSet> pulled;
    for (const auto v : cy) pulled.insert(f.preimage(v));
    return pulled.size() == cy.size() && std::set<PointSet>(cx.begin(), cx.end()) == pulled;
}

std::vector<FinitePoset> labeled_posets(std::size_t n) {
    if (n > 6) throw InvalidArgument("labeled_posets: at most 6 points");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<FinitePoset> out;
    std::vector<int> choice(pairs.size(), 0);  // 0 unrelated, 1 a < b, 2 b < a
    for (;;) {
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (std::size_t a = 0; a < n; ++a) leq[a][a] = true;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (choice[k] == 1) leq[pairs[k].first][pairs[k].second] = true;
            if (choice[k] == 2) leq[pairs[k].second][pairs[k].first] = true;
        }
        bool transitive = true;
        for (std::size_t a = 0; a < n && transitive; ++a)
            for (std::size_t b = 0; b < n && transitive; ++b)
                if (leq[a][b])
                    for (std::size_t c = 0; c < n; ++c)
                        if (leq[b][c] && !leq[a][c]) {
                            transitive = false;
                            break;
                        }
        if (transitive) out.push_back(FinitePoset::from_matrix(leq));
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == 3) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return out;
}

std::vector<FinitePoset> posets_up_to_isomorphism(std::size_t n) {
    std::vector<FinitePoset> out;
    std::set<PointSet> seen;
    std::vector<std::size_t> perm(n);
    for (const auto& p : labeled_posets(n)) {
        std::iota(perm.begin(), perm.end(), 0);
        PointSet best = ~PointSet{0};
        do {
            PointSet code = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (p.leq(a, b)) code |= PointSet{1} << (perm[a] * n + perm[b]);
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) out.push_back(p);
    }
    return out;
}

std::vector<MonotoneMap> monotone_maps(const FinitePoset& source, const FinitePoset& target) {
    std::vector<MonotoneMap> out;
    const std::size_t n = source.size(), m = target.size();
    if (m == 0) {
        if (n == 0) out.emplace_back(source, target, std::vector<std::size_t>{});
        return out;
    }
    std::vector<std::size_t> f(n, 0);
    for (;;) {
        bool monotone = true;
        for (std::size_t a = 0; a < n && monotone; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (source.leq(a, b) && !target.leq(f[a], f[b])) {
                    monotone = false;
                    break;
                }
        if (monotone) out.emplace_back(source, target, f);
        std::size_t k = 0;
        while (k < n && ++f[k] == m) f[k++] = 0;
        if (k == n) break;
    }
    return out;
}

namespace {

PropB3Survey survey_pair(const FinitePoset& s, const FinitePoset& t) {
    PropB3Survey out;
    for (const auto& f : monotone_maps(s, t)) {
        const auto r = prop_b3_check(f);
        ++out.maps;
        out.agreeing += r.all_equal();
        out.all_true += r.clopen_bijection && r.pi0_bijective && r.pi0_homeomorphism;
    }
    return out;
}

}  // namespace

namespace serial {

PropB3Survey survey_prop_b3(const std::vector<FinitePoset>& posets) {
    PropB3Survey total;
    for (const auto& s : posets)
        for (const auto& t : posets) {
            const auto r = survey_pair(s, t);
            total.maps += r.maps;
            total.agreeing += r.agreeing;
            total.all_true += r.all_true;
        }
    return total;
}

}  // namespace serial

namespace parallel {

PropB3Survey survey_prop_b3(const std::vector<FinitePoset>& posets) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(posets.size());
    std::size_t maps = 0, agreeing = 0, all_true = 0;
#pragma omp parallel for collapse(2) schedule(dynamic, 4) reduction(+ : maps, agreeing, all_true)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            const auto r = survey_pair(posets[static_cast<std::size_t>(i)], posets[static_cast<std::size_t>(j)]);
            maps += r.maps;
            agreeing += r.agreeing;
            all_true += r.all_true;
        }
    return {maps, agreeing, all_true};
}

}  // namespace parallel

std::string to_string(const FinitePoset& x, PointSet z) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::size_t a = 0; a < x.size(); ++a)
        if (bit(z, a)) {
            os << (first ? "" : ", ") << a;
            first = false;
        }
    os << '}';
    return os.str();
}

}  // namespace equibundle
