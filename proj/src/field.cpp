#include "equibundle/field.hpp"

#include <ostream>

namespace equibundle {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw InvalidArgument("field characteristic must be a prime below 2^31: " + std::to_string(p));
    return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
    if (p_ == 0) return Scalar(mpq_class(v));
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return Scalar(static_cast<std::uint32_t>(r), p_);
}

Scalar Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw DivisionByZero();
    if (p_ == 0) return Scalar(mpq_class(num, den));
    mpz_class n = num % p_, d = den % p_;
    if (n < 0) n += p_;
    if (d < 0) d += p_;
    Scalar sn(static_cast<std::uint32_t>(n.get_ui()), p_);
    Scalar sd(static_cast<std::uint32_t>(d.get_ui()), p_);
    return sn / sd;
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

Field Scalar::field() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return Field(r->p);
    return Field::rationals();
}

bool Scalar::is_zero() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
    return std::get<mpq_class>(v_) == 1;
}

Scalar Scalar::operator-() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return Scalar(r->value == 0 ? 0 : r->p - r->value, r->p);
    return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (const auto* r = std::get_if<Residue>(&v_)) return Scalar(pow_mod(r->value, r->p - 2, r->p), r->p);
    return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

#define EQB_SAME_FIELD(a, b)                                              \
    const auto* ra = std::get_if<Scalar::Residue>(&(a).v_);                       \
    const auto* rb = std::get_if<Scalar::Residue>(&(b).v_);                       \
    if ((ra == nullptr) != (rb == nullptr) || (ra && ra->p != rb->p)) \
        throw FieldMismatch();

Scalar operator+(const Scalar& a, const Scalar& b) {
    EQB_SAME_FIELD(a, b)
    if (ra) {
        std::uint32_t s = ra->value + rb->value;
        return Scalar(s >= ra->p ? s - ra->p : s, ra->p);
    }
    return Scalar(mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    EQB_SAME_FIELD(a, b)
    if (ra) return Scalar(ra->value >= rb->value ? ra->value - rb->value : ra->value + ra->p - rb->value, ra->p);
    return Scalar(mpq_class(std::get<mpq_class>(a.v_) - std::get<mpq_class>(b.v_)));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    EQB_SAME_FIELD(a, b)
    if (ra) return Scalar(mul_mod(ra->value, rb->value, ra->p), ra->p);
    return Scalar(mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    EQB_SAME_FIELD(a, b)
    return a * b.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
    EQB_SAME_FIELD(a, b)
    if (ra) return ra->value == rb->value;
    return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

#undef EQB_SAME_FIELD

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
    return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace equibundle
