#include "bireg/field.hpp"

#include <stdexcept>

#include "bireg/errors.hpp"

namespace bireg {

namespace {

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1U) r = r * b % p;
        b = b * b % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(r);
}

void check_same(const Scalar::ModP& a, const Scalar::ModP& b) {
    if (a.p != b.p) throw std::logic_error("bireg: arithmetic between different prime fields");
}

} // namespace

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0 || p >= (1U << 31) || !is_prime_number(p))
        throw InvalidField("field modulus " + std::to_string(p) + " is not an odd prime below 2^31");
    return Field(FieldKind::prime, p);
}

Field Field::rational() { return Field(FieldKind::rational, 0); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    if (kind_ == FieldKind::rational) return Scalar(mpq_class(static_cast<long>(v)));
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Scalar(Scalar::ModP{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::from_mpz(const mpz_class& v) const {
    if (kind_ == FieldKind::rational) return Scalar(mpq_class(v));
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return Scalar(Scalar::ModP{static_cast<std::uint32_t>(r.get_ui()), p_});
}

Scalar Field::from_mpq(const mpq_class& v) const {
    if (kind_ == FieldKind::rational) return Scalar(v);
    Scalar num = from_mpz(v.get_num());
    Scalar den = from_mpz(v.get_den());
    if (den.is_zero()) throw InvalidField("denominator vanishes modulo " + std::to_string(p_));
    return num / den;
}

std::string Field::to_string() const {
    return kind_ == FieldKind::rational ? std::string("q") : std::to_string(p_);
}

bool Scalar::is_zero() const {
    if (auto* m = std::get_if<ModP>(&rep_)) return m->v == 0;
    return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
    if (auto* m = std::get_if<ModP>(&rep_)) return m->v == 1;
    return std::get<mpq_class>(rep_) == 1;
}

Field Scalar::field() const {
    if (auto* m = std::get_if<ModP>(&rep_)) return Field(FieldKind::prime, m->p);
    return Field(FieldKind::rational, 0);
}

Scalar Scalar::operator-() const {
    if (auto* m = std::get_if<ModP>(&rep_)) return Scalar(ModP{m->v == 0 ? 0 : m->p - m->v, m->p});
    return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("bireg: inverse of zero");
    if (auto* m = std::get_if<ModP>(&rep_)) return Scalar(ModP{mod_pow(m->v, m->p - 2, m->p), m->p});
    return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (auto* m = std::get_if<ModP>(&rep_)) {
        const auto& n = std::get<ModP>(o.rep_);
        check_same(*m, n);
        std::uint32_t s = m->v + n.v;
        if (s >= m->p) s -= m->p;
        m->v = s;
    } else {
        std::get<mpq_class>(rep_) += std::get<mpq_class>(o.rep_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (auto* m = std::get_if<ModP>(&rep_)) {
        const auto& n = std::get<ModP>(o.rep_);
        check_same(*m, n);
        m->v = m->v >= n.v ? m->v - n.v : m->v + m->p - n.v;
    } else {
        std::get<mpq_class>(rep_) -= std::get<mpq_class>(o.rep_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (auto* m = std::get_if<ModP>(&rep_)) {
        const auto& n = std::get<ModP>(o.rep_);
        check_same(*m, n);
        m->v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(m->v) * n.v % m->p);
    } else {
        std::get<mpq_class>(rep_) *= std::get<mpq_class>(o.rep_);
    }
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (auto* m = std::get_if<Scalar::ModP>(&a.rep_)) {
        auto* n = std::get_if<Scalar::ModP>(&b.rep_);
        return n && m->p == n->p && m->v == n->v;
    }
    auto* q = std::get_if<mpq_class>(&b.rep_);
    return q && *q == std::get<mpq_class>(a.rep_);
}

std::string Scalar::to_string() const {
    if (auto* m = std::get_if<ModP>(&rep_)) {
        long long v = m->v;
        if (v > static_cast<long long>(m->p / 2)) v -= m->p;
        return std::to_string(v);
    }
    return std::get<mpq_class>(rep_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace bireg
