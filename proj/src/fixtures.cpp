#include "icat/fixtures.hpp"

namespace icat::fixtures {

ComonoidPtr unit() { return unit_comonoid(); }

ComonoidPtr points() { return grouplike_comonoid(2, {}, "F2"); }

CategoryPtr poset() {
    const ComonoidPtr c = points();
    // l(a) = cod a (x) a at index cod*3 + a; r(a) = a (x) dom a at index a*2 + dom.
    Matrix lambda(6, 3), rho(6, 3);
    lambda.set(0, 0, 1);
    lambda.set(4, 1, 1);
    lambda.set(5, 2, 1);
    rho.set(0, 0, 1);
    rho.set(3, 1, 1);
    rho.set(4, 2, 1);
    Bicomodule a{"A", c, c, lambda, rho};
    // Composable pairs in canonical order: (id0,id0), (id1,id1), (id1,f), (f,id0).
    const Matrix mult{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}};
    const Matrix unit{{1, 0}, {0, 1}, {0, 0}};
    return make_category("F3", c, a, mult, unit);
}

FunctorPtr ceiling(const CategoryPtr& p) {
    return make_functor("t", p, p, Matrix{{0, 0}, {1, 1}}, Matrix{{0, 0, 0}, {1, 1, 1}, {0, 0, 0}});
}

NatTrans ceiling_mult(const FunctorPtr& t) {
    return NatTrans{"mu", compose_functors(t, t), t, Matrix{{0, 0}, {1, 1}, {0, 0}}};
}

NatTrans ceiling_unit(const FunctorPtr& t) {
    return NatTrans{"eta", identity_functor(t->src), t, Matrix{{0, 0}, {0, 1}, {1, 0}}};
}

FunctorPtr floor(const CategoryPtr& p) {
    return make_functor("l", p, p, Matrix{{1, 1}, {0, 0}}, Matrix{{1, 1, 1}, {0, 0, 0}, {0, 0, 0}});
}

CategoryPtr points_trivial() { return trivial_category(points(), "F2"); }

FunctorPtr points_swap(const CategoryPtr& c) {
    const Matrix s{{0, 1}, {1, 0}};
    return make_functor("swap", c, c, s, s);
}

Matrix z2_mult(Field f) { return Matrix({{1, 0, 0, 1}, {0, 1, 1, 0}}, f); }

Matrix z2_unit(Field f) { return Matrix({{1}, {0}}, f); }

CategoryPtr z2_algebra(Field f) { return algebra_category(z2_mult(f), z2_unit(f), "F4"); }

Monad z2_twist_monad(const CategoryPtr& c) {
    const auto id = identity_functor(c);
    const Matrix g({{0}, {1}}, c->field());
    return Monad{id, NatTrans{"g", compose_functors(id, id), id, g}, NatTrans{"g", id, id, g}};
}

Monad ceiling_monad(const CategoryPtr& p) {
    const auto t = ceiling(p);
    return Monad{t, ceiling_mult(t), ceiling_unit(t)};
}

Adjunction floor_ceiling(const CategoryPtr& p) {
    const auto l = floor(p);
    const auto t = ceiling(p);
    const NatTrans iota{"iota", identity_functor(p), compose_functors(t, l), ceiling_unit(t).alpha};
    const NatTrans sigma{"sigma", compose_functors(l, t), identity_functor(p), Matrix{{1, 0}, {0, 0}, {0, 1}}};
    return Adjunction{l, t, sigma, iota};
}

std::vector<std::pair<std::string, Monad>> monads() {
    const auto p = poset();
    const auto f4 = z2_algebra();
    return {{"F3 ceiling", ceiling_monad(p)},
            {"F3 identity", identity_monad(p)},
            {"F2 identity", identity_monad(points_trivial())},
            {"F4 identity", identity_monad(f4)},
            {"F4 twist", z2_twist_monad(f4)}};
}

ComonoidPtr comatrix() {
    Matrix delta(16, 4), counit(1, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) delta.set((i * 2 + k) * 4 + (k * 2 + j), i * 2 + j, 1);
    counit.set(0, 0, 1);
    counit.set(0, 3, 1);
    return make_comonoid(delta, counit, "F7");
}

AlgebraPtr z2(Field f) { return make_algebra(z2_mult(f), z2_unit(f), "F4"); }

SweedlerPtr sweedler_z2(Field f) {
    const AlgebraPtr a = z2(f);
    return sweedler_coring(a, ground_algebra(f), a->unit);
}

HopfGaloisInstance hopf_galois_z2(Field f) {
    const AlgebraPtr h = z2(f);
    const Matrix delta({{1, 0}, {0, 0}, {0, 0}, {0, 1}}, f);
    return make_hopf_galois(h, delta, Matrix({{1, 1}}, f), Matrix::identity(2, f), h, delta);
}

}  // namespace icat::fixtures
