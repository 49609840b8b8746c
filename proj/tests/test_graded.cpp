#include <doctest.h>

#include <random>

#include "reglab/evaluate.hpp"
#include "reglab/families.hpp"
#include "reglab/graded.hpp"

using namespace reglab;

namespace {

Ring uvw(FieldSpec f = FieldSpec::gf(2)) { return Ring::make(f, {"u", "v", "w"}); }

Polynomial random_homogeneous(const Ring& ring, int degree, std::mt19937& rng) {
    Polynomial p(ring);
    if (degree < 0) return p;
    std::uint32_t q = ring.field().characteristic ? ring.field().characteristic : 5;
    for (const auto& m : monomial_basis(ring, degree)) {
        std::int64_t c = std::int64_t(rng() % q);
        if (c) p.add_term(m, Rational(long(c)));
    }
    return p;
}

GradedMatrix random_graded(const Ring& ring, std::vector<int> row_tw, std::vector<int> col_tw,
                           std::mt19937& rng) {
    GradedMatrix m = GradedMatrix::zero(GradedFreeModule(ring, row_tw),
                                        GradedFreeModule(ring, col_tw));
    for (std::size_t i = 0; i < row_tw.size(); ++i)
        for (std::size_t j = 0; j < col_tw.size(); ++j)
            m.set_entry(i, j, random_homogeneous(ring, col_tw[j] - row_tw[i], rng));
    return m;
}

}  // namespace

TEST_CASE("homogeneity is enforced at construction") {
    Ring r = uvw();
    GradedFreeModule cod(r, {0});
    GradedFreeModule dom(r, {2});
    GradedMatrix m = GradedMatrix::zero(cod, dom);
    Polynomial u = Polynomial::variable(r, 0);
    CHECK_THROWS_AS(m.set_entry(0, 0, u), homogeneity_error);          // degree 1 != 2
    CHECK_NOTHROW(m.set_entry(0, 0, u * u));
    Polynomial inhom = u + u * u;
    CHECK_THROWS_AS(m.set_entry(0, 0, inhom), homogeneity_error);
}

TEST_CASE("identity map evaluates to the identity in every degree") {
    Ring r = uvw(FieldSpec::rationals());
    GradedMatrix id = GradedMatrix::identity(GradedFreeModule(r, {0}));
    PrimeFieldMatrix e = evaluate_in_degree(id, 3);
    CHECK(e.rows() == 10);  // dim K[u,v,w]_3 = binomial(5,2)
    CHECK(e == PrimeFieldMatrix::identity(FieldSpec::rationals(), 10));
}

TEST_CASE("first example-2 map in degree 1 is a full-rank 3x3 piece") {
    GradedMatrix f1 = example2::phi(1);  // [u v w] : R(-1)^3 -> R
    PrimeFieldMatrix e = evaluate_in_degree(f1, 1);
    CHECK(e.rows() == 3);
    CHECK(e.cols() == 3);
    CHECK(e.rank() == 3);
    // each column hits exactly one basis monomial
    for (std::size_t j = 0; j < 3; ++j) {
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (e.residue_at(i, j)) ++nonzero;
        CHECK(nonzero == 1);
    }
}

TEST_CASE("cokernel of the first example-2 map has Hilbert function 1,0,0") {
    PresentedModule coker = PresentedModule::cokernel(example2::phi(1));
    CHECK(hilbert_function(coker, 0) == 1);
    CHECK(hilbert_function(coker, 1) == 0);
    CHECK(hilbert_function(coker, 2) == 0);
}

TEST_CASE("free module Hilbert values") {
    Ring r = uvw(FieldSpec::rationals());
    PresentedModule free2 = PresentedModule::free_module(r, {2});
    CHECK(hilbert_function(free2, 2) == 1);
    CHECK(hilbert_function(free2, 1) == 0);
    CHECK(hilbert_function(free2, 4) == 6);
}

TEST_CASE("kernel modules of injective maps have zero Hilbert function") {
    for (int n : {1, 2, 3}) {
        PresentedModule ker = PresentedModule::kernel(example2::psi(n));
        for (int d = -n - 1; d <= -n + 6; ++d) CHECK(hilbert_function(ker, d) == 0);
    }
}

TEST_CASE("evaluation commutes with composition") {
    std::mt19937 rng(424242);
    for (FieldSpec field : {FieldSpec::gf(2), FieldSpec::gf(5), FieldSpec::rationals()}) {
        Ring r = uvw(field);
        GradedMatrix f = random_graded(r, {0, 1}, {1, 2, 2}, rng);
        GradedMatrix g = random_graded(r, {1, 2, 2}, {2, 3, 3, 4}, rng);
        GradedMatrix fg = compose(f, g);
        for (int d = 0; d <= 6; ++d) {
            CHECK(evaluate_in_degree(fg, d) ==
                  evaluate_in_degree(f, d).multiply(evaluate_in_degree(g, d)));
        }
    }
}

TEST_CASE("component-split rank and kernel match the dense path") {
    std::mt19937 rng(5150);
    Ring r = uvw(FieldSpec::gf(2));
    for (int trial = 0; trial < 10; ++trial) {
        GradedMatrix f = random_graded(r, {0, 0, 1}, {1, 1, 2, 2}, rng);
        for (int d = 0; d <= 5; ++d) {
            PrimeFieldMatrix dense = evaluate_in_degree(f, d);
            CHECK(rank_in_degree(f, d) == dense.rank());
            auto kernel = kernel_in_degree(f, d);
            CHECK(kernel.size() == dense.kernel_basis().cols());
        }
    }
}

TEST_CASE("component-split paths agree with dense evaluation over quotient rings") {
    std::mt19937 rng(2026);
    Ring a = Ring::make(FieldSpec::gf(2), {"y", "z", "v", "w"},
                        {2, 2, std::nullopt, std::nullopt});
    Ring a5 = Ring::make(FieldSpec::gf(5), {"y", "z", "v", "w"},
                         {2, 2, std::nullopt, std::nullopt});
    for (int trial = 0; trial < 6; ++trial) {
        GradedMatrix f = random_graded(trial % 2 ? a : a5, {0, 1}, {1, 2, 2, 3}, rng);
        for (int d = 0; d <= 6; ++d) {
            PrimeFieldMatrix dense = evaluate_in_degree(f, d);
            CHECK(rank_in_degree(f, d) == dense.rank());
            CHECK(kernel_in_degree(f, d).size() == dense.kernel_basis().cols());
        }
    }
}

TEST_CASE("dual map is an involution and transposes entries") {
    GradedMatrix f = example2::phi(3);
    GradedMatrix d = dual_map(f);
    CHECK(d.rows() == f.cols());
    CHECK(d.cols() == f.rows());
    CHECK(dual_map(d).entries_equal(f));
    CHECK(dual_map(d).domain().twists() == f.domain().twists());

    GradedMatrix z = GradedMatrix::zero(GradedFreeModule(f.ring(), {0, 1}),
                                        GradedFreeModule(f.ring(), {2}));
    CHECK(dual_map(z).is_zero());
}

TEST_CASE("compose validates shapes and respects identities") {
    Ring r = uvw();
    GradedMatrix f = example2::phi(2);
    GradedMatrix idd = GradedMatrix::identity(f.domain());
    GradedMatrix idc = GradedMatrix::identity(f.codomain());
    CHECK(compose(f, idd).entries_equal(f));
    CHECK(compose(idc, f).entries_equal(f));
    CHECK_THROWS_AS(compose(f, f), composition_error);
}

TEST_CASE("twist shift preserves entries") {
    GradedMatrix f = example2::phi(2);
    GradedMatrix s = f.twist_shifted(5);
    CHECK(s.entries_equal(f));
    CHECK(s.domain().twists()[0] == f.domain().twists()[0] + 5);
}
