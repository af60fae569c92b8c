#include <random>

#include <doctest.h>

#include "icat/bicomod.hpp"
#include "icat/fixtures.hpp"
#include "icat/kernels.hpp"
#include "icat/linalg.hpp"

using namespace icat;

TEST_CASE("comonoid verification") {
    CHECK(verify_comonoid(*fixtures::unit()).ok());
    CHECK(verify_comonoid(*fixtures::points()).ok());
    CHECK(verify_comonoid(*fixtures::comatrix()).ok());

    const auto c = fixtures::points();
    const auto bad = make_comonoid(c->delta, Matrix{{1, 0}});
    const Report r = verify_comonoid(*bad);
    CHECK_FALSE(r.ok());
    CHECK(r.passed("coassociativity"));
    const Check* left = r.find("left counit");
    REQUIRE(left);
    CHECK_FALSE(left->pass);
    REQUIRE(left->witness);
    CHECK(*left->witness == std::vector<std::string>{"0", "1"});

    CHECK_THROWS_AS(verify_comonoid(Comonoid{"", Matrix(3, 2), Matrix(1, 2)}), Error);
}

TEST_CASE("bicomodule verification") {
    CHECK(verify_bicomodule(regular(fixtures::unit())).ok());
    CHECK(verify_bicomodule(regular(fixtures::points())).ok());
    const auto p = fixtures::poset();
    CHECK(verify_bicomodule(p->A).ok());

    Bicomodule swapped = p->A;
    std::swap(swapped.lambda, swapped.rho);
    const Report r = verify_bicomodule(swapped);
    CHECK_FALSE(r.passed("coactions commute"));
}

TEST_CASE("cotensor products") {
    const auto c = fixtures::points();
    const Bicomodule reg = regular(c);
    const Cotensor cc = cotensor(reg, reg);
    CHECK(cc.space.dim() == 2);
    CHECK(is_invertible(left_unitor(reg, cc)));
    CHECK(verify_bicomodule(cc.result).ok());

    const auto p = fixtures::poset();
    const Cotensor aa = cotensor(p->A, p->A);
    CHECK(aa.space.dim() == 4);
    CHECK(aa.space.pivots == std::vector<std::size_t>{0, 4, 5, 6});
    CHECK(verify_bicomodule(aa.result).ok());

    const auto t = fixtures::ceiling(p);
    const Bicomodule ct = induce_right(reg, t->f0, c);
    CHECK(cotensor(ct, p->A).space.dim() == 4);

    const Bicomodule other = regular(fixtures::unit());
    CHECK_THROWS_WITH_AS(cotensor(reg, other), doctest::Contains("ComonoidMismatch"), Error);
}

TEST_CASE("cotensor of regular comonoids on every fixture is the unit constraint") {
    for (const auto& c : {fixtures::unit(), fixtures::points(), fixtures::comatrix()}) {
        const Bicomodule reg = regular(c);
        const Cotensor cc = cotensor(reg, reg);
        CHECK(cc.space.dim() == c->dim());
        const Matrix li = left_unitor(reg, cc);
        CHECK(is_invertible(li));
        CHECK(cc.space.incl * li == c->delta);
        CHECK(is_invertible(right_unitor(reg, cc)));
    }
    const auto p = fixtures::poset();
    const Bicomodule reg = regular(p->C);
    CHECK(is_invertible(left_unitor(p->A, cotensor(reg, p->A))));
    CHECK(is_invertible(right_unitor(p->A, cotensor(p->A, reg))));
}

TEST_CASE("cotensor maps") {
    const auto p = fixtures::poset();
    const Cotensor aa = cotensor(p->A, p->A);
    const Matrix id = Matrix::identity(3);
    CHECK(cotensor_map(id, id, aa, aa) == Matrix::identity(4));

    // (A [] A) [] A with m [] A, compared with an enumeration of composable triples.
    const Cotensor left = cotensor(aa.result, p->A);
    CHECK(left.space.dim() == 5);
    const Matrix h = cotensor_map(p->mult, id, left, aa);
    // Triples as (a, b, c) over [id0, id1, f]; pairs index: (id0,id0) (id1,id1) (id1,f) (f,id0).
    const int comp[3][3] = {{0, -1, -1}, {-1, 1, 2}, {2, -1, -1}};
    const int dom[3] = {0, 1, 0}, cod[3] = {0, 1, 1};
    auto pair_index = [](int a, int b) {
        if (a == 0 && b == 0) return 0;
        if (a == 1 && b == 1) return 1;
        if (a == 1 && b == 2) return 2;
        return 3;
    };
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                if (dom[a] == cod[b] && dom[b] == cod[c]) triples.push_back({a, b, c});
    REQUIRE(triples.size() == 5);
    Matrix expected(4, 5);
    for (std::size_t j = 0; j < 5; ++j) {
        // left.space coordinates are (pair index of (a,b)) * 3 + c in (A [] A) (x) A
        const auto [a, b, c] = triples[j];
        const int ab = pair_index(a, b);
        std::size_t col = 5;
        for (std::size_t k = 0; k < 5; ++k)
            if (left.space.incl(static_cast<std::size_t>(ab * 3 + c), k).is_one()) col = k;
        REQUIRE(col < 5);
        expected.set(static_cast<std::size_t>(pair_index(comp[a][b], c)), col, 1);
    }
    CHECK(h == expected);

    // A map that is not right colinear: swap id0 and id1.
    const Matrix s{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    CHECK_THROWS_WITH_AS(cotensor_map(s, id, aa, aa), doctest::Contains("NoFactorization"), Error);
}

TEST_CASE("cotensor associativity comparison on A [] A [] A") {
    const auto p = fixtures::poset();
    const Cotensor aa = cotensor(p->A, p->A);
    const Cotensor l = cotensor(aa.result, p->A);
    const Cotensor r = cotensor(p->A, aa.result);
    const Space triple = cotensor_space({&p->A, &p->A, &p->A});
    CHECK(l.space.dim() == r.space.dim());
    const Matrix embed_l = kernels::apply_block(l.space.incl, 1, aa.space.incl, 3);
    const Matrix embed_r = kernels::apply_block(r.space.incl, 3, aa.space.incl, 1);
    const Matrix pl = triple.coords(embed_l);
    const Matrix pr = triple.coords(embed_r);
    const Matrix comparison = inverse(pr) * pl;
    CHECK(is_invertible(comparison));
}

TEST_CASE("induced comodules") {
    const auto p = fixtures::poset();
    const auto c = p->C;
    CHECK(induce_left(Matrix::identity(2), c, p->A).lambda == p->A.lambda);
    const Bicomodule k = induce_left(c->counit, fixtures::unit(), p->A);
    CHECK(k.lambda == Matrix::identity(3));
    const auto t = fixtures::ceiling(p);
    const Bicomodule relabel = induce_left(t->f0, c, p->A);
    for (std::size_t a = 0; a < 3; ++a) CHECK(relabel.lambda(3 + a, a).is_one());
    CHECK(verify_bicomodule(relabel).ok());

    CHECK(induce_right(p->A, Matrix::identity(2), c).rho == p->A.rho);
    CHECK(induce_right(p->A, c->counit, fixtures::unit()).rho == Matrix::identity(3));
    const Bicomodule rr = induce_right(p->A, t->f0, c);
    for (std::size_t a = 0; a < 3; ++a) CHECK(rr.rho(a * 2 + 1, a).is_one());

    CHECK_THROWS_WITH_AS(induce_left(Matrix{{1, 0}, {1, 1}}, c, p->A), doctest::Contains("NotComonoidMap"), Error);

    // Random comonoid maps of F2 preserve the comodule laws.
    std::mt19937 gen(1);
    std::uniform_int_distribution<int> pick(0, 1);
    for (int i = 0; i < 20; ++i) {
        Matrix f(2, 2);
        f.set(static_cast<std::size_t>(pick(gen)), 0, 1);
        f.set(static_cast<std::size_t>(pick(gen)), 1, 1);
        CHECK(is_comonoid_map(f, *c, *c));
        CHECK(verify_bicomodule(induce_left(f, c, regular(c))).ok() == true);
        CHECK(verify_bicomodule(induce_right(regular(c), f, c)).ok());
    }
}

TEST_CASE("iterated coactions") {
    const auto p = fixtures::poset();
    CHECK(iterate_coaction(p->A, 1) == p->A.lambda);
    const Bicomodule reg = regular(fixtures::points());
    const Matrix d2 = iterate_coaction(reg, 2);
    CHECK(d2(0, 0).is_one());
    CHECK(d2(7, 1).is_one());
    CHECK(d2 == iterate_comult(*fixtures::points(), 2));
    const Matrix a2 = iterate_coaction(p->A, 2);
    // y (x) y (x) f at (1*2 + 1)*3 + 2
    CHECK(a2(11, 2).is_one());
    for (std::size_t n = 1; n < 4; ++n) {
        const Matrix next = iterate_coaction(p->A, n + 1);
        CHECK(next == kernels::apply_block(p->A.lambda, 2, iterate_coaction(p->A, n), 1));
        std::size_t tail = 1;
        for (std::size_t k = 1; k < n; ++k) tail *= 2;
        CHECK(next == kernels::apply_block(iterate_coaction(p->A, n), 1, p->C->delta, tail * 3));
    }
}

TEST_CASE("bicolinear map spaces") {
    const auto p = fixtures::poset();
    // Endomorphisms of A as a bicomodule: one scalar per basis morphism.
    CHECK(bicolinear_basis(p->A, p->A).size() == 3);
    for (const auto& b : bicolinear_basis(p->A, p->A)) CHECK(is_bicolinear(b, p->A, p->A));
}
