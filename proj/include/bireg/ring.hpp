#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bireg/field.hpp"

namespace bireg {

struct Bidegree {
    int a = 0;
    int b = 0;

    friend Bidegree operator+(Bidegree u, Bidegree v) { return {u.a + v.a, u.b + v.b}; }
    friend Bidegree operator-(Bidegree u, Bidegree v) { return {u.a - v.a, u.b - v.b}; }
    Bidegree operator-() const { return {-a, -b}; }
    friend bool operator==(Bidegree, Bidegree) = default;
    friend auto operator<=>(Bidegree, Bidegree) = default;

    int total() const noexcept { return a + b; }
    // Componentwise partial order.
    bool leq(Bidegree o) const noexcept { return a <= o.a && b <= o.b; }
    bool nonnegative() const noexcept { return a >= 0 && b >= 0; }
};

std::ostream& operator<<(std::ostream& os, Bidegree d);

inline constexpr std::size_t kMaxVars = 16;

// Monomial in x_0..x_m, y_0..y_n. Variables 0..nx-1 are the x-block.
class Monomial {
public:
    Monomial() = default;
    Monomial(int nx, int nvars);

    static Monomial from_exponents(int nx, const std::vector<int>& exps);

    int nx() const noexcept { return nx_; }
    int nvars() const noexcept { return nv_; }
    int operator[](int i) const noexcept { return e_[static_cast<std::size_t>(i)]; }

    int degree() const noexcept { return xdeg_ + ydeg_; }
    Bidegree bidegree() const noexcept { return {xdeg_, ydeg_}; }
    bool is_one() const noexcept { return degree() == 0; }

    bool divides(const Monomial& o) const noexcept;
    Monomial lcm(const Monomial& o) const;
    // Requires this divisible by d.
    Monomial quotient(const Monomial& d) const;
    bool coprime(const Monomial& o) const noexcept;

    friend Monomial operator*(const Monomial& u, const Monomial& v);
    friend bool operator==(const Monomial& u, const Monomial& v) noexcept {
        return u.nv_ == v.nv_ && u.e_ == v.e_;
    }

    // Exponent-only reverse lexicographic comparison; >0 when u is larger. Multiplicative.
    friend int compare_revlex(const Monomial& u, const Monomial& v) noexcept;
    // Degree-reverse-lexicographic with x_0 > ... > x_m > y_0 > ... > y_n.
    friend int compare_degrevlex(const Monomial& u, const Monomial& v) noexcept;

    std::size_t hash() const noexcept;

    void set(int i, int e);

private:
    std::array<std::uint8_t, kMaxVars> e_{};
    std::uint8_t nx_ = 0;
    std::uint8_t nv_ = 0;
    std::uint16_t xdeg_ = 0;
    std::uint16_t ydeg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

class Polynomial;

// K[x_0..x_m, y_0..y_n] with its bigrading. m or n may be -1 (missing block).
class Ring {
public:
    Ring(int m, int n, Field field = Field(), bool allow_trivial = false);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int nx() const noexcept { return m_ + 1; }
    int ny() const noexcept { return n_ + 1; }
    int nvars() const noexcept { return m_ + n_ + 2; }
    const Field& field() const noexcept { return field_; }

    Monomial one() const { return Monomial(nx(), nvars()); }
    Monomial var(int i) const;
    Monomial x(int i) const { return var(i); }
    Monomial y(int j) const { return var(nx() + j); }
    std::string var_name(int i) const;

    Polynomial constant(long long c) const;
    Polynomial variable(int i) const;
    Polynomial term(const Monomial& mono, long long c = 1) const;

    // Monomials of bidegree d, in descending degrevlex order.
    const std::vector<Monomial>& monomials(Bidegree d) const;
    // dim R_d = C(a+m, m) C(b+n, n).
    long long dim(Bidegree d) const;

    friend bool operator==(const Ring& r, const Ring& s) noexcept {
        return r.m_ == s.m_ && r.n_ == s.n_ && r.field_ == s.field_;
    }

private:
    struct Cache;
    int m_;
    int n_;
    Field field_;
    std::shared_ptr<Cache> cache_;
};

long long binomial(long long n, long long k);

class Polynomial {
public:
    using TermT = std::pair<Monomial, Scalar>;

    Polynomial() = default;
    // Canonicalizes: combines duplicates, drops zeros, sorts descending.
    static Polynomial from_terms(std::vector<TermT> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<TermT>& terms() const noexcept { return terms_; }
    const TermT& lead() const { return terms_.front(); }

    // Bidegree of a bihomogeneous nonzero polynomial.
    Bidegree bidegree() const;
    bool is_bihomogeneous() const noexcept;
    // Coefficient of the monomial 1 if present, nullptr otherwise.
    const Scalar* constant_term() const noexcept;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Scalar& c) const;
    Polynomial shifted(const Monomial& u) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string(const Ring& ring) const;

private:
    std::vector<TermT> terms_;
};

// Throws ZeroPolynomial for 0 and NotBihomogeneous for mixed bidegrees.
Bidegree bidegree_of(const Polynomial& p);

} // namespace bireg
