#include "equibundle/laurent.hpp"

#include <sstream>

namespace equibundle {

LaurentPoly::LaurentPoly(const Scalar& c, std::int64_t e) : field_(c.field()) {
    if (!c.is_zero()) terms_.emplace(e, c);
}

std::int64_t LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw InvalidArgument("min_exponent of the zero Laurent polynomial");
    return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw InvalidArgument("max_exponent of the zero Laurent polynomial");
    return terms_.rbegin()->first;
}

Scalar LaurentPoly::coeff(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
}

void LaurentPoly::add_term(std::int64_t e, const Scalar& c) {
    if (!(c.field() == field_)) throw FieldMismatch();
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    if (!(c.field() == field_)) throw FieldMismatch();
    LaurentPoly r(field_);
    if (c.is_zero()) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, a * c);
    return r;
}

LaurentPoly LaurentPoly::reflected() const {
    LaurentPoly r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

Scalar LaurentPoly::evaluate(const Scalar& x) const {
    if (x.is_zero()) throw DivisionByZero();
    Scalar acc = field_.zero();
    Scalar xinv = x.inv();
    for (const auto& [e, c] : terms_) {
        Scalar p = field_.one();
        const Scalar& base = e >= 0 ? x : xinv;
        for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
        acc += c * p;
    }
    return acc;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    LaurentPoly r(a.field_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

std::string LaurentPoly::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto e = it->first;
        Scalar c = it->second;
        bool negative = field_.is_rational() && sgn(c.rational()) < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << c.to_string();
            continue;
        }
        if (!c.is_one()) os << c.to_string() << '*';
        os << var;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (!(a.field() == b.field())) throw FieldMismatch();
    Field f = a.field();
    LaurentPoly q(f), r = a;
    const std::int64_t bmax = b.max_exponent();
    const std::int64_t bmin = b.min_exponent();
    const Scalar lead_inv = b.coeff(bmax).inv();
    // Long division on leading terms; an exact quotient exists iff the
    // remainder vanishes before its span drops below that of b.
    while (!r.is_zero()) {
        if (r.max_exponent() - r.min_exponent() < bmax - bmin)
            throw InvalidArgument("exact_divide: divisor does not divide dividend");
        const std::int64_t e = r.max_exponent() - bmax;
        LaurentPoly term(r.coeff(r.max_exponent()) * lead_inv, e);
        q += term;
        r -= term * b;
    }
    return q;
}

}  // namespace equibundle
