#include <doctest.h>

#include "reglab/ring.hpp"

using namespace reglab;

namespace {
Ring uvw(FieldSpec f = FieldSpec::gf(2)) { return Ring::make(f, {"u", "v", "w"}); }
}  // namespace

TEST_CASE("ring construction validates input") {
    CHECK_THROWS_AS(Ring::make(FieldSpec::gf(2), {"x", "x"}), parameter_error);
    CHECK_THROWS_AS(Ring::make(FieldSpec::gf(2), {"x"}, {1}), parameter_error);
    Ring q = Ring::make(FieldSpec::gf(2), {"y", "z"}, {2, 2});
    CHECK_FALSE(q.is_polynomial());
    CHECK(uvw().is_polynomial());
}

TEST_CASE("monomial basis counts and order") {
    // three free variables, degree 2: binomial(4,2) = 6
    auto b = monomial_basis(uvw(), 2);
    CHECK(b.size() == 6);
    // descending lex: u^2 first, w^2 last
    CHECK(b.front() == Monomial{2, 0, 0});
    CHECK(b.back() == Monomial{0, 0, 2});
    for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(b[i] > b[i + 1]);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(monomial_index(b, b[i]) == i);

    CHECK(monomial_basis(uvw(), -1).empty());
    CHECK(monomial_basis(uvw(), 0).size() == 1);

    // K[U,V,W] over the rationals, degree 2 -> same count
    CHECK(monomial_count(uvw(FieldSpec::rationals()), 2) == 6);
}

TEST_CASE("monomial basis honors pure power relations") {
    // A = Q/(X^2,Y^2,Z^2) on 6 variables: degree 1 keeps all 6 variables
    Ring a6 = Ring::make(FieldSpec::gf(2), {"x", "y", "z", "u", "v", "w"},
                         {2, 2, 2, std::nullopt, std::nullopt, std::nullopt});
    CHECK(monomial_count(a6, 1) == 6);

    // A = Q/(Y^2,Z^2) on {y,z,v,w}: degree 2 drops y^2 and z^2
    Ring a4 = Ring::make(FieldSpec::rationals(), {"y", "z", "v", "w"},
                         {2, 2, std::nullopt, std::nullopt});
    auto b = monomial_basis(a4, 2);
    CHECK(b.size() == 8);
    for (const auto& m : b) {
        CHECK(m[0] < 2);
        CHECK(m[1] < 2);
    }
}

TEST_CASE("polynomial arithmetic over GF(p) reduces coefficients") {
    Ring r = uvw(FieldSpec::gf(2));
    Polynomial u = Polynomial::variable(r, 0);
    Polynomial sum = u + u;
    CHECK(sum.is_zero());

    Ring r5 = uvw(FieldSpec::gf(5));
    Polynomial x = Polynomial::variable(r5, 0);
    Polynomial five = x.scaled(Rational(5));
    CHECK(five.is_zero());
    CHECK((x.scaled(Rational(7)) == x.scaled(Rational(2))));
}

TEST_CASE("quotient ring multiplication truncates dead monomials") {
    Ring a = Ring::make(FieldSpec::rationals(), {"y", "z", "v", "w"},
                        {2, 2, std::nullopt, std::nullopt});
    Polynomial y = Polynomial::variable(a, 0);
    CHECK((y * y).is_zero());
    Polynomial v = Polynomial::variable(a, 2);
    CHECK_FALSE((v * v).is_zero());
    Polynomial mixed = (y + v) * (y + v);  // y^2 dies, v^2 + 2yv survives
    CHECK(mixed.terms().size() == 2);
}

TEST_CASE("homogeneity and degree bookkeeping") {
    Ring r = uvw(FieldSpec::rationals());
    Polynomial u = Polynomial::variable(r, 0), v = Polynomial::variable(r, 1);
    CHECK((u * v).degree() == 2);
    CHECK((u + v).is_homogeneous());
    Polynomial mixed = u + (u * v);
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK(Polynomial(r).degree() == -1);
    CHECK(Polynomial(r).is_homogeneous());
}

TEST_CASE("monomial counts match binomial closed forms") {
    auto binom3 = [](long n) { return n < 3 ? 0L : n * (n - 1) * (n - 2) / 6; };
    Ring poly = Ring::make(FieldSpec::rationals(), {"y", "z", "v", "w"});
    Ring quot = Ring::make(FieldSpec::rationals(), {"y", "z", "v", "w"},
                           {2, 2, std::nullopt, std::nullopt});
    for (int d = 0; d <= 12; ++d) {
        CHECK(long(monomial_count(poly, d)) == binom3(d + 3));
        // inclusion-exclusion over the two pure squares
        long expect = binom3(d + 3) - 2 * binom3(d + 1) + binom3(d - 1);
        CHECK(long(monomial_count(quot, d)) == expect);
    }
}

TEST_CASE("polynomial printing") {
    Ring r = uvw(FieldSpec::rationals());
    Polynomial u = Polynomial::variable(r, 0), v = Polynomial::variable(r, 1);
    CHECK(Polynomial(r).str() == "0");
    CHECK((u * u).str() == "u^2");
    CHECK((u.scaled(Rational(-3)) + v).str() == "-3*u + v");
    CHECK((u.scaled(Rational(1, 2))).str() == "1/2*u");
}
