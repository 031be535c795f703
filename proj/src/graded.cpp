#include "equibundle/graded.hpp"

#include <algorithm>
#include <numeric>

namespace equibundle {

namespace {

bool all_positive(const std::vector<std::int64_t>& w) {
    return std::all_of(w.begin(), w.end(), [](std::int64_t d) { return d > 0; });
}

void require_connected(const GradedAlgebra& b, const char* op) {
    if (!connected_check(b)) throw PreconditionViolated(std::string(op) + ": algebra is not connected");
}

// I_0 = 0 in a connected algebra exactly when every generator has positive
// degree.
void require_positive_ideal(const GradedAlgebra& b, const GradedIdeal& i, const char* op) {
    require_connected(b, op);
    for (std::size_t g = 0; g < i.generators.size(); ++g) {
        if (i.generators[g].nvars() != b.nvars()) throw InvalidArgument(std::string(op) + ": ideal in another ring");
        if (i.degrees[g] <= 0) throw PreconditionViolated(std::string(op) + ": ideal has I_0 != 0");
    }
}

ScalarMatrix constant_part(const PolyMatrix& m, Field f) {
    ScalarMatrix c(m.rows(), m.cols(), f.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).constant_term();
    return c;
}

PolyMatrix as_poly(const ScalarMatrix& m, std::size_t nvars) {
    PolyMatrix r(m.rows(), m.cols(), Polynomial(m.zero().field(), nvars));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Polynomial::constant(nvars, m(i, j));
    return r;
}

}  // namespace

GradedAlgebra::GradedAlgebra(Field f, std::vector<std::int64_t> degrees, std::vector<Polynomial> relations)
    : field_(f), degrees_(std::move(degrees)), relations_(std::move(relations)) {
    for (auto d : degrees_)
        if (d == 0) throw InvalidArgument("graded algebra: variable of degree 0");
    for (const auto& r : relations_) {
        if (!(r.field() == field_)) throw FieldMismatch();
        if (r.nvars() != nvars()) throw InvalidArgument("graded algebra: relation in another ring");
        if (!r.is_homogeneous(degrees_)) throw InvalidArgument("graded algebra: relation is not homogeneous");
    }
}

GradedIdeal make_graded_ideal(const GradedAlgebra& b, std::vector<Polynomial> generators) {
    GradedIdeal i;
    for (auto& g : generators) {
        if (g.nvars() != b.nvars()) throw InvalidArgument("graded ideal: generator in another ring");
        if (g.is_zero()) continue;
        const auto d = g.homogeneous_degree(b.degrees());
        if (!d) throw InvalidArgument("graded ideal: generator is not homogeneous");
        i.generators.push_back(std::move(g));
        i.degrees.push_back(*d);
    }
    return i;
}

GradedIdeal irrelevant_ideal(const GradedAlgebra& b) {
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < b.nvars(); ++j) gens.push_back(b.variable(j));
    return make_graded_ideal(b, std::move(gens));
}

GradedModulePresentation::GradedModulePresentation(GradedAlgebra b, std::vector<std::int64_t> generator_degrees,
                                                   PolyMatrix relations)
    : b_(std::move(b)), gens_(std::move(generator_degrees)), rel_(std::move(relations)) {
    if (rel_.rows() != gens_.size()) throw InvalidArgument("graded module: relation rows must match generators");
    rel_deg_.assign(rel_.cols(), std::nullopt);
    for (std::size_t j = 0; j < rel_.cols(); ++j)
        for (std::size_t i = 0; i < rel_.rows(); ++i) {
            const Polynomial& r = rel_(i, j);
            if (!(r.field() == b_.field())) throw FieldMismatch();
            if (r.nvars() != b_.nvars()) throw InvalidArgument("graded module: entry in another ring");
            if (r.is_zero()) continue;
            const auto d = r.homogeneous_degree(b_.degrees());
            if (!d) throw InvalidArgument("graded module: relation entry is not homogeneous");
            const std::int64_t col = *d + gens_[i];
            if (rel_deg_[j] && *rel_deg_[j] != col)
                throw InvalidArgument("graded module: relation column mixes degrees");
            rel_deg_[j] = col;
        }
}

GradedModulePresentation GradedModulePresentation::free(GradedAlgebra b, std::vector<std::int64_t> generator_degrees) {
    const std::size_t p = generator_degrees.size();
    Polynomial z = b.zero();
    return GradedModulePresentation(std::move(b), std::move(generator_degrees), PolyMatrix(p, 0, z));
}

bool GradedModulePresentation::presented_free() const {
    return std::none_of(rel_deg_.begin(), rel_deg_.end(), [](const auto& d) { return d.has_value(); });
}

bool connected_check(const GradedAlgebra& b) { return all_positive(b.degrees()); }

std::vector<Monomial> degree_zero_hilbert_basis(const std::vector<std::int64_t>& weights) {
    std::int64_t max_pos = 0, max_neg = 0;
    for (auto w : weights) {
        if (w > 0) max_pos = std::max(max_pos, w);
        if (w < 0) max_neg = std::max(max_neg, -w);
    }
    if (max_pos == 0 || max_neg == 0) return {};
    const std::size_t r = weights.size();
    Monomial box(r);
    for (std::size_t j = 0; j < r; ++j) box[j] = static_cast<std::uint32_t>(weights[j] > 0 ? max_neg : max_pos);

    std::vector<Monomial> solutions;
    Monomial cur(r, 0);
    for (;;) {
        std::size_t j = 0;
        while (j < r && cur[j] == box[j]) cur[j++] = 0;
        if (j == r) break;
        ++cur[j];
        if (weighted_degree(cur, weights) == 0) solutions.push_back(cur);
    }
    auto total = [](const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); };
    std::stable_sort(solutions.begin(), solutions.end(),
                     [&](const Monomial& a, const Monomial& b) { return total(a) < total(b); });
    std::vector<Monomial> basis;
    for (const auto& s : solutions) {
        const bool reducible = std::any_of(basis.begin(), basis.end(), [&](const Monomial& m) {
            for (std::size_t j = 0; j < r; ++j)
                if (m[j] > s[j]) return false;
            return true;
        });
        if (!reducible) basis.push_back(s);
    }
    std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) {
        return total(a) != total(b) ? total(a) < total(b) : a > b;
    });
    return basis;
}

FixedPointIdeal fixed_point_ideal(const GradedAlgebra& b) {
    FixedPointIdeal out;
    out.ideal = irrelevant_ideal(b);
    const Field f = b.field();
    for (const auto& m : degree_zero_hilbert_basis(b.degrees())) {
        out.quotient.generators.push_back(m);
        out.quotient.relations.push_back(Polynomial::term(m, f.one()));
    }
    for (const auto& r : b.relations()) {
        if (r.is_zero() || *r.homogeneous_degree(b.degrees()) != 0) continue;
        out.quotient.relations.push_back(r);
        if (!r.constant_term().is_zero()) out.quotient.zero_ring = true;
    }
    return out;
}

std::vector<Polynomial> characteristic_polynomial(const PolyMatrix& a) {
    if (a.rows() != a.cols()) throw InvalidArgument("characteristic_polynomial: matrix is not square");
    const std::size_t n = a.rows();
    const Polynomial zero = a.zero();
    const Polynomial one = Polynomial::constant(zero.nvars(), zero.field().one());
    std::vector<Polynomial> q{one};
    for (std::size_t r = 1; r <= n; ++r) {
        const std::size_t s = r - 1;
        // t = (1, -a_rr, -R C, -R S C, ..., -R S^{s-1} C) for the leading
        // r x r block [[S, C], [R, a_rr]].
        std::vector<Polynomial> t{one, -a(s, s)};
        std::vector<Polynomial> v(s);
        for (std::size_t i = 0; i < s; ++i) v[i] = a(i, s);
        for (std::size_t k = 0; k < s; ++k) {
            Polynomial dot = zero;
            for (std::size_t i = 0; i < s; ++i) dot += a(s, i) * v[i];
            t.push_back(-dot);
            std::vector<Polynomial> w(s, zero);
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < s; ++j) w[i] += a(i, j) * v[j];
            v = std::move(w);
        }
        std::vector<Polynomial> next(r + 1, zero);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < q.size() && j <= i; ++j) next[i] += t[i - j] * q[j];
        q = std::move(next);
    }
    return q;
}

NakayamaResult nakayama_zero_test(const GradedModulePresentation& e, const GradedIdeal& i) {
    const GradedAlgebra& b = e.algebra();
    require_positive_ideal(b, i, "nakayama_zero_test");
    const Field f = b.field();
    const std::size_t p = e.generator_count();
    const ScalarMatrix r0 = constant_part(e.relations(), f);
    const RowEchelon ech = rref(r0);
    if (ech.pivots.size() < p) return {false, std::nullopt};

    CayleyHamiltonWitness w;
    w.columns = ech.pivots;
    const ScalarMatrix r0j = r0.select_cols(w.columns);
    w.constant_inverse = *inverse(r0j);
    const PolyMatrix rj = e.relations().select_cols(w.columns);
    const PolyMatrix n = rj - as_poly(r0j, b.nvars());
    const PolyMatrix a = n * as_poly(w.constant_inverse, b.nvars());
    w.a = PolyMatrix(p, p, b.zero());
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < p; ++c) w.a(r, c) = -a(c, r);
    w.char_poly = characteristic_polynomial(w.a);
    w.unit = b.zero();
    for (const auto& c : w.char_poly) w.unit += c;
    return {true, std::move(w)};
}

bool verify_witness(const GradedModulePresentation& e, const CayleyHamiltonWitness& w) {
    const GradedAlgebra& b = e.algebra();
    const std::size_t p = e.generator_count();
    if (w.columns.size() != p || w.a.rows() != p || w.a.cols() != p) return false;
    for (auto c : w.columns)
        if (c >= e.relations().cols()) return false;
    // Entries of A lie in I: homogeneous of degree m_r - m_c with no
    // constant term.
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < p; ++c) {
            const Polynomial& x = w.a(r, c);
            if (x.is_zero()) continue;
            const auto d = x.homogeneous_degree(b.degrees());
            if (!d || *d != e.generator_degrees()[r] - e.generator_degrees()[c]) return false;
            if (!x.constant_term().is_zero()) return false;
        }
    // R_J * R0_J^-1 = 1 - A^T, so e^T R_J = 0 gives e = A e.
    const ScalarMatrix r0j = constant_part(e.relations(), b.field()).select_cols(w.columns);
    const ScalarMatrix one = identity_matrix(b.field(), p);
    if (!(r0j * w.constant_inverse == one)) return false;
    const PolyMatrix lhs = e.relations().select_cols(w.columns) * as_poly(w.constant_inverse, b.nvars());
    if (!(lhs == as_poly(one, b.nvars()) - w.a.transpose())) return false;
    // (1 - A) e = 0 and adj(1 - A)(1 - A) = chi_A(1), so chi_A(1) e = 0;
    // chi_A(1) = 1 - a with a in I_0 = 0.
    if (!(characteristic_polynomial(w.a) == w.char_poly)) return false;
    Polynomial sum = b.zero();
    for (const auto& c : w.char_poly) sum += c;
    return sum == w.unit && w.unit == b.constant(b.field().one());
}

std::size_t graded_component_dimension(const GradedModulePresentation& e, std::int64_t d) {
    const GradedAlgebra& b = e.algebra();
    require_connected(b, "graded_component_dimension");
    const auto& w = b.degrees();
    const std::size_t p = e.generator_count();

    std::vector<std::map<Monomial, std::size_t>> index(p);
    std::size_t dim = 0;
    for (std::size_t i = 0; i < p; ++i)
        for (auto& m : monomials_of_degree(w, d - e.generator_degrees()[i])) index[i].emplace(std::move(m), dim++);
    if (dim == 0) return 0;

    // Spanning set of the degree-d part of the submodule: monomial
    // multiples of relation columns and of algebra relations times e_i.
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> vecs;
    auto push = [&](std::size_t row, const Polynomial& poly, const Monomial& mu, std::vector<std::pair<std::size_t, Scalar>>& v) {
        Monomial m(mu.size());
        for (const auto& [mon, c] : poly.terms()) {
            for (std::size_t j = 0; j < m.size(); ++j) m[j] = mon[j] + mu[j];
            v.emplace_back(index[row].at(m), c);
        }
    };
    const PolyMatrix& rel = e.relations();
    for (std::size_t j = 0; j < rel.cols(); ++j) {
        const auto& dj = e.relation_degrees()[j];
        if (!dj) continue;
        for (const auto& mu : monomials_of_degree(w, d - *dj)) {
            std::vector<std::pair<std::size_t, Scalar>> v;
            for (std::size_t i = 0; i < p; ++i) push(i, rel(i, j), mu, v);
            vecs.push_back(std::move(v));
        }
    }
    for (const auto& rho : b.relations()) {
        if (rho.is_zero()) continue;
        const std::int64_t dr = *rho.homogeneous_degree(w);
        for (std::size_t i = 0; i < p; ++i)
            for (const auto& mu : monomials_of_degree(w, d - e.generator_degrees()[i] - dr)) {
                std::vector<std::pair<std::size_t, Scalar>> v;
                push(i, rho, mu, v);
                vecs.push_back(std::move(v));
            }
    }
    ScalarMatrix m(dim, vecs.size(), b.field().zero());
    for (std::size_t c = 0; c < vecs.size(); ++c)
        for (const auto& [r, x] : vecs[c]) m(r, c) += x;
    return dim - rank(m);
}

bool vanishes_up_to(const GradedModulePresentation& e, std::int64_t bound) {
    if (e.generator_count() == 0) return true;
    const auto lo = *std::min_element(e.generator_degrees().begin(), e.generator_degrees().end());
    for (std::int64_t d = lo; d <= bound; ++d)
        if (graded_component_dimension(e, d) != 0) return false;
    return true;
}

std::map<std::int64_t, std::size_t> residue_dimensions(const GradedModulePresentation& e) {
    const Field f = e.algebra().field();
    std::map<std::int64_t, std::size_t> out;
    std::map<std::int64_t, std::vector<std::size_t>> rows_by_degree;
    for (std::size_t i = 0; i < e.generator_count(); ++i) rows_by_degree[e.generator_degrees()[i]].push_back(i);
    const ScalarMatrix r0 = constant_part(e.relations(), f);
    for (const auto& [d, rows] : rows_by_degree) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < r0.cols(); ++j)
            if (e.relation_degrees()[j] == d) cols.push_back(j);
        ScalarMatrix block(rows.size(), cols.size(), f.zero());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t c = 0; c < cols.size(); ++c) block(a, c) = r0(rows[a], cols[c]);
        const std::size_t dim = rows.size() - rank(block);
        if (dim) out[d] = dim;
    }
    return out;
}

ScalarMatrix reduce_mod_irrelevant(const PolyMatrix& u) { return constant_part(u, u.zero().field()); }

bool graded_iso_test(const PolyMatrix& u, const GradedModulePresentation& e, const GradedModulePresentation& f,
                     const GradedIdeal& i) {
    const GradedAlgebra& b = e.algebra();
    if (!(f.algebra() == b)) throw InvalidArgument("graded_iso_test: modules over different algebras");
    require_positive_ideal(b, i, "graded_iso_test");
    if (!f.presented_free()) throw InvalidArgument("graded_iso_test: target is not presented as a free module");
    const std::size_t p = e.generator_count(), q = f.generator_count();
    if (u.rows() != q || u.cols() != p) throw InvalidArgument("graded_iso_test: map has the wrong shape");
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t c = 0; c < p; ++c) {
            const Polynomial& x = u(r, c);
            if (x.is_zero()) continue;
            const auto d = x.homogeneous_degree(b.degrees());
            if (!d || *d != e.generator_degrees()[c] - f.generator_degrees()[r])
                throw InvalidArgument("graded_iso_test: map is not homogeneous of degree 0");
        }
    if (b.relations().empty() && e.relations().cols() > 0 && !(u * e.relations()).is_zero())
        throw InvalidArgument("graded_iso_test: map does not kill the relations of the source");
    const ScalarMatrix u0 = constant_part(u, b.field());
    const ScalarMatrix r0 = constant_part(e.relations(), b.field());
    return rank(u0) == q && p - rank(r0) == q;
}

PolyMatrix lift_graded_map(const ScalarMatrix& ubar, const GradedModulePresentation& e,
                           const GradedModulePresentation& f) {
    const GradedAlgebra& b = e.algebra();
    require_connected(b, "lift_graded_map");
    if (!(f.algebra() == b)) throw InvalidArgument("lift_graded_map: modules over different algebras");
    if (!e.presented_free() || !f.presented_free())
        throw InvalidArgument("lift_graded_map: source and target must be presented as free modules");
    if (ubar.rows() != f.generator_count() || ubar.cols() != e.generator_count())
        throw InvalidArgument("lift_graded_map: map has the wrong shape");
    if (ubar.rows() && ubar.cols() && !(ubar.zero().field() == b.field())) throw FieldMismatch();
    for (std::size_t r = 0; r < ubar.rows(); ++r)
        for (std::size_t c = 0; c < ubar.cols(); ++c)
            if (!ubar(r, c).is_zero() && e.generator_degrees()[c] != f.generator_degrees()[r])
                throw InvalidArgument("lift_graded_map: entry joins generators of different degrees");
    return as_poly(ubar, b.nvars());
}

std::vector<std::int64_t> iso_class_graded_free(std::vector<std::int64_t> degrees) {
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

GradedModulePresentation lift_residue_class(const GradedAlgebra& b, const std::map<std::int64_t, std::size_t>& dims) {
    std::vector<std::int64_t> degrees;
    for (const auto& [d, n] : dims) degrees.insert(degrees.end(), n, d);
    return GradedModulePresentation::free(b, std::move(degrees));
}

GradedModulePresentation minimal_presentation(const GradedModulePresentation& e) {
    const GradedAlgebra& b = e.algebra();
    require_connected(b, "minimal_presentation");
    std::vector<std::int64_t> gens = e.generator_degrees();
    PolyMatrix rel = e.relations();
    for (;;) {
        std::size_t pr = rel.rows(), pc = rel.cols();
        for (std::size_t j = 0; j < rel.cols() && pr == rel.rows(); ++j)
            for (std::size_t i = 0; i < rel.rows(); ++i)
                if (!rel(i, j).constant_term().is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == rel.rows()) break;
        // e_pr = -c^-1 sum_{k != pr} rel(k, pc) e_k; substitute into every
        // other relation.
        const Scalar cinv = rel(pr, pc).constant_term().inv();
        PolyMatrix next(rel.rows() - 1, rel.cols() - 1, b.zero());
        for (std::size_t k = 0, nk = 0; k < rel.rows(); ++k) {
            if (k == pr) continue;
            for (std::size_t l = 0, nl = 0; l < rel.cols(); ++l) {
                if (l == pc) continue;
                next(nk, nl++) = rel(k, l) - (rel(pr, l) * rel(k, pc)).scaled(cinv);
            }
            ++nk;
        }
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pr));
        rel = std::move(next);
    }
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < rel.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < rel.rows(); ++i) zero = zero && rel(i, j).is_zero();
        if (!zero) keep.push_back(j);
    }
    return GradedModulePresentation(b, std::move(gens), rel.select_cols(keep));
}

bool is_free(const GradedModulePresentation& e) {
    if (!e.algebra().relations().empty())
        throw PreconditionViolated("is_free: needs a polynomial algebra without relations");
    return minimal_presentation(e).presented_free();
}

}  // namespace equibundle
