#include "equibundle/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace equibundle {

std::int64_t weighted_degree(const Monomial& m, std::span<const std::int64_t> weights) {
    std::int64_t d = 0;
    for (std::size_t j = 0; j < m.size(); ++j) d += static_cast<std::int64_t>(m[j]) * weights[j];
    return d;
}

namespace {

void enumerate(std::span<const std::int64_t> w, std::size_t j, std::int64_t left, Monomial& cur, std::vector<Monomial>& out) {
    if (j == w.size()) {
        if (left == 0) out.push_back(cur);
        return;
    }
    for (std::uint32_t e = 0; static_cast<std::int64_t>(e) * w[j] <= left; ++e) {
        cur[j] = e;
        enumerate(w, j + 1, left - static_cast<std::int64_t>(e) * w[j], cur, out);
    }
    cur[j] = 0;
}

std::uint32_t total(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

// Graded-lex order, larger first.
bool grlex_greater(const Monomial& a, const Monomial& b) {
    const auto ta = total(a), tb = total(b);
    if (ta != tb) return ta > tb;
    return a > b;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::span<const std::int64_t> weights, std::int64_t d) {
    for (auto w : weights)
        if (w <= 0) throw InvalidArgument("monomials_of_degree needs positive weights");
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur(weights.size(), 0);
    enumerate(weights, 0, d, cur, out);
    return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
    return term(Monomial(nvars, 0), c);
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c) {
    Polynomial p(c.field(), m.size());
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(Field f, std::size_t nvars, std::size_t index) {
    Monomial m(nvars, 0);
    m.at(index) = 1;
    return term(m, f.one());
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Scalar Polynomial::constant_term() const { return coeff(Monomial(nvars_, 0)); }

Scalar Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (!(c.field() == field_)) throw FieldMismatch();
    if (m.size() != nvars_) throw InvalidArgument("monomial has the wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<std::int64_t> Polynomial::homogeneous_degree(std::span<const std::int64_t> weights) const {
    std::optional<std::int64_t> d;
    for (const auto& [m, c] : terms_) {
        const auto dm = weighted_degree(m, weights);
        if (d && *d != dm) return std::nullopt;
        d = dm;
    }
    return d;
}

bool Polynomial::is_homogeneous(std::span<const std::int64_t> weights) const {
    return is_zero() || homogeneous_degree(weights).has_value();
}

Polynomial Polynomial::restrict_to(const std::vector<bool>& keep) const {
    Polynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        bool survives = true;
        for (std::size_t j = 0; j < nvars_; ++j)
            if (!keep[j] && m[j] != 0) survives = false;
        if (survives) r.add_term(m, c);
    }
    return r;
}

Polynomial Polynomial::operator-() const { return scaled(-field_.one()); }

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(field_, nvars_);
    for (const auto& [m, a] : terms_) r.add_term(m, a * c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    if (a.nvars_ != b.nvars_) throw InvalidArgument("polynomials in different rings");
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    if (a.nvars_ != b.nvars_) throw InvalidArgument("polynomials in different rings");
    Polynomial r(a.field_, a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t j = 0; j < m.size(); ++j) m[j] = ma[j] + mb[j];
            r.add_term(m, ca * cb);
        }
    return r;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return grlex_greater(x->first, y->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        Scalar c = t->second;
        const bool negative = field_.is_rational() && sgn(c.rational()) < 0;
        if (negative) c = -c;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        if (total(t->first) == 0) {
            os << c.to_string();
            continue;
        }
        bool need_star = false;
        if (!c.is_one()) {
            os << c.to_string();
            need_star = true;
        }
        for (std::size_t j = 0; j < t->first.size(); ++j) {
            if (t->first[j] == 0) continue;
            os << (need_star ? "*" : "") << var << (j + 1);
            if (t->first[j] != 1) os << '^' << t->first[j];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace equibundle
