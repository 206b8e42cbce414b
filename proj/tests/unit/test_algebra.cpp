#include <doctest.h>

#include <random>

#include "bireg/errors.hpp"
#include "bireg/io.hpp"
#include "bireg/linalg.hpp"

using namespace bireg;

TEST_CASE("prime field arithmetic") {
    const Field F;
    CHECK(F.modulus() == 32003);
    const Scalar a = F.from_int(12345), b = F.from_int(-7);
    CHECK((a * a.inverse()).is_one());
    CHECK((a + b - a) == b);
    CHECK(F.from_int(32003).is_zero());
    CHECK(F.from_int(-1).to_string() == "-1");
    CHECK(F.from_mpq(mpq_class(1, 2)) * F.from_int(2) == F.one());
}

TEST_CASE("rational field arithmetic") {
    const Field Q = Field::rational();
    const Scalar h = Q.from_mpq(mpq_class(1, 3));
    CHECK((h + h + h).is_one());
    CHECK(h.inverse() == Q.from_int(3));
    CHECK(!Q.is_prime());
}

TEST_CASE("invalid fields are rejected") {
    CHECK_THROWS_AS(Field::prime(32002), InvalidField);
    CHECK_THROWS_AS(Field::prime(2), InvalidField);
    CHECK_NOTHROW(Field::prime(101));
}

TEST_CASE("ring dimensions match the binomial count of monomials") {
    for (int m = 0; m <= 2; ++m)
        for (int n = -1; n <= 2; ++n) {
            const Ring R(m, n);
            for (int a = 0; a <= 4; ++a)
                for (int b = 0; b <= 4; ++b) {
                    const long long want = binomial(a + m, m) * (n >= 0 ? binomial(b + n, n) : (b == 0 ? 1 : 0));
                    CHECK(R.dim({a, b}) == want);
                    CHECK(static_cast<long long>(R.monomials({a, b}).size()) == want);
                }
            CHECK(R.dim({-1, 0}) == 0);
        }
    CHECK_THROWS_AS(Ring(-1, -1), EmptyRing);
}

TEST_CASE("degrevlex order and monomial arithmetic") {
    const Ring R(1, 1);
    const Monomial x0 = R.x(0), x1 = R.x(1), y0 = R.y(0), y1 = R.y(1);
    CHECK(compare_degrevlex(x0, x1) > 0);
    CHECK(compare_degrevlex(x1, y0) > 0);
    CHECK(compare_degrevlex(x0 * y1, x1 * y0) < 0);
    CHECK(compare_degrevlex(x0 * x0, x0 * y0) > 0);
    const Monomial u = x0 * x0 * y1;
    CHECK(u.bidegree() == Bidegree{2, 1});
    CHECK(x0.divides(u));
    CHECK(!y0.divides(u));
    CHECK(u.quotient(x0) == x0 * y1);
    CHECK(u.lcm(x1) == u * x1);
    CHECK(x0.coprime(y0));
    // The monomial list of a bidegree is sorted descending.
    const auto& mons = R.monomials({2, 1});
    for (std::size_t i = 1; i < mons.size(); ++i) CHECK(compare_degrevlex(mons[i - 1], mons[i]) > 0);
}

TEST_CASE("polynomial canonical form and bidegree") {
    const Ring R(1, 1);
    const Polynomial f = parse_polynomial(R, "x0*y0 + 2*x1*y1 - x0*y0");
    CHECK(f.size() == 1);
    CHECK(f.bidegree() == Bidegree{1, 1});
    CHECK(parse_polynomial(R, "x0 - x0").is_zero());
    CHECK_THROWS_AS(bidegree_of(Polynomial()), ZeroPolynomial);
    CHECK_THROWS_AS(bidegree_of(parse_polynomial(R, "x0 + y0")), NotBihomogeneous);
    const Polynomial g = parse_polynomial(R, "x0 + x1"), h = parse_polynomial(R, "x0 - x1");
    CHECK(g * h == parse_polynomial(R, "x0^2 - x1^2"));
}

TEST_CASE("matrix rank and nullspace over both fields") {
    for (const Field F : {Field(), Field::rational()}) {
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> v(-5, 5);
        for (int trial = 0; trial < 20; ++trial) {
            const int r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
            Matrix A(F, r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) A.set(i, j, F.from_int(v(rng)));
            const auto N = A.nullspace();
            CHECK(A.rank() + static_cast<long>(N.size()) == c);
            for (const auto& x : N)
                for (int i = 0; i < r; ++i) {
                    Scalar s = F.zero();
                    for (int j = 0; j < c; ++j) s += A.at(i, j) * x[static_cast<std::size_t>(j)];
                    CHECK(s.is_zero());
                }
        }
    }
}
