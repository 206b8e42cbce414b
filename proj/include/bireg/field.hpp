#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace bireg {

enum class FieldKind { prime, rational };

class Scalar;

// Coefficient field: F_p for an odd prime p < 2^31, or the rationals.
class Field {
public:
    // F_32003.
    Field() : Field(prime(32003)) {}

    static Field prime(std::uint32_t p);
    static Field rational();

    FieldKind kind() const noexcept { return kind_; }
    std::uint32_t modulus() const noexcept { return p_; }
    bool is_prime() const noexcept { return kind_ == FieldKind::prime; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_mpz(const mpz_class& v) const;
    Scalar from_mpq(const mpq_class& v) const;

    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

private:
    friend class Scalar;
    Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

// Exact field element. Elements of F_p carry their modulus; mixing fields is a logic error.
class Scalar {
public:
    struct ModP {
        std::uint32_t v;
        std::uint32_t p;
    };

    explicit Scalar(ModP x) : rep_(x) {}
    explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

    bool is_zero() const;
    bool is_one() const;
    bool is_prime_field() const noexcept { return std::holds_alternative<ModP>(rep_); }

    // Residue in [0, p) for prime-field elements.
    std::uint32_t residue() const { return std::get<ModP>(rep_).v; }
    const mpq_class& rational() const { return std::get<mpq_class>(rep_); }

    Field field() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    // Signed representative (prime field: symmetric residue) for printing.
    std::string to_string() const;

private:
    std::variant<ModP, mpq_class> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace bireg
