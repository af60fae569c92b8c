#include <doctest.h>

#include "icat/fixtures.hpp"
#include "icat/kleisli.hpp"
#include "icat/linalg.hpp"

using namespace icat;

namespace {

// Function matrices on an n-point grouplike coalgebra.
std::vector<Matrix> point_maps(std::size_t from, std::size_t to) {
    std::vector<Matrix> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < from; ++i) total *= to;
    for (std::size_t code = 0; code < total; ++code) {
        Matrix f(to, from);
        std::size_t c = code;
        for (std::size_t j = 0; j < from; ++j, c /= to) f.set(c % to, j, 1);
        out.push_back(f);
    }
    return out;
}

// Every combination of the basis with coefficients in {-1, 0, 1}.
std::vector<Matrix> bounded_span(const std::vector<Matrix>& basis, const Matrix& zero) {
    std::vector<Matrix> out;
    if (basis.empty()) return {zero};
    std::vector<int> c(basis.size(), -1);
    while (true) {
        std::vector<Scalar> s;
        for (int x : c) s.emplace_back(x);
        out.push_back(combine(basis, s));
        std::size_t i = 0;
        while (i < c.size() && c[i] == 1) c[i++] = -1;
        if (i == c.size()) break;
        ++c[i];
    }
    return out;
}

// Functors between categories over grouplike object coalgebras, with
// morphism maps bounded to {-1, 0, 1} on the bicolinear basis.
std::vector<FunctorPtr> functors(const CategoryPtr& a, const CategoryPtr& b) {
    std::vector<FunctorPtr> out;
    for (const auto& f0 : point_maps(a->C->dim(), b->C->dim())) {
        const auto probe = make_functor("p", a, b, f0, Matrix(b->A.dim(), a->A.dim()));
        const auto basis = bicolinear_basis(induced_morphisms(*probe), b->A);
        for (const auto& f1 : bounded_span(basis, Matrix(b->A.dim(), a->A.dim()))) {
            auto f = make_functor("y", a, b, f0, f1);
            if (verify_functor(*f).ok()) out.push_back(f);
        }
    }
    return out;
}

std::vector<TAlgebra> talgebras(const Monad& m, const CategoryPtr& b) {
    std::vector<TAlgebra> out;
    for (const auto& y : functors(m.t->src, b)) {
        const auto yt = compose_functors(y, m.t);
        for (const auto& s : bounded_span(natural_basis(yt, y), Matrix(b->A.dim(), m.t->src->C->dim()))) {
            TAlgebra a{y, NatTrans{"sigma", yt, y, s}};
            if (verify_talgebra(m, a).ok()) out.push_back(a);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("adjunctions") {
    const auto p = fixtures::poset();
    CHECK(verify_adjunction(identity_adjunction(p)).ok());
    const Adjunction fc = fixtures::floor_ceiling(p);
    CHECK(verify_adjunction(fc).ok());

    Adjunction doubled = fc;
    doubled.eps.alpha = fc.eps.alpha * Scalar(2);
    const Report r = verify_adjunction(doubled);
    CHECK_FALSE(r.passed("first triangle"));

    const Monad m = fixtures::ceiling_monad(p);
    const Adjunction kl = kleisli_adjunction(m);
    CHECK(verify_adjunction(kl).ok());
}

TEST_CASE("monads, comonads and opmonads") {
    for (const auto& [name, m] : fixtures::monads()) {
        INFO(name);
        CHECK(verify_monad(m).ok());
    }
    const auto p = fixtures::poset();
    const Monad m = fixtures::ceiling_monad(p);
    Monad bent = m;
    bent.eta.alpha = m.eta.alpha * Scalar(2);
    CHECK_FALSE(verify_monad(bent).ok());

    CHECK(verify_comonad(identity_comonad(p)).ok());
    const Comonad mate = mate_comonad(fixtures::floor_ceiling(p), m);
    CHECK(verify_comonad(mate).ok());
    Comonad bent_mate = mate;
    bent_mate.eps.alpha = mate.eps.alpha * Scalar(3);
    CHECK_FALSE(verify_comonad(bent_mate).ok());

    CHECK(verify_opmonad(identity_opmonad(p)).ok());
    Opmonad bent_op = identity_opmonad(p);
    bent_op.eta.alpha = bent_op.eta.alpha * Scalar(2);
    CHECK_FALSE(verify_opmonad(bent_op).ok());
}

TEST_CASE("monad of an adjunction") {
    const auto p = fixtures::poset();
    const Monad id = monad_of_adjunction(identity_adjunction(p));
    CHECK(verify_monad(id).ok());
    CHECK(id.t->f1 == Matrix::identity(3));
    CHECK(id.mu.alpha == p->unit);

    const Monad t = monad_of_adjunction(fixtures::floor_ceiling(p));
    CHECK(verify_monad(t).ok());
    CHECK(same_functor(*t.t, *fixtures::ceiling(p)));

    Adjunction bent = fixtures::floor_ceiling(p);
    bent.eps.alpha = bent.eps.alpha * Scalar(2);
    CHECK_FALSE(verify_monad(monad_of_adjunction(bent)).ok());
}

TEST_CASE("Kleisli objects and adjunctions on every fixture monad") {
    for (const auto& [name, m] : fixtures::monads()) {
        INFO(name);
        const CategoryPtr k = kleisli_object(m);
        CHECK(verify_internal_category(*k).ok());
        const CategoryPtr w = kleisli_object_wreath(m);
        CHECK(k->A.lambda == w->A.lambda);
        CHECK(k->A.rho == w->A.rho);
        CHECK(k->mult == w->mult);
        CHECK(k->unit == w->unit);

        const Adjunction a = kleisli_adjunction(m);
        CHECK(verify_adjunction(a).ok());
        const Monad back = monad_of_adjunction(a);
        CHECK(back.t->f0 == m.t->f0);
        CHECK(back.t->f1 == m.t->f1);
        CHECK(back.mu.alpha == m.mu.alpha);
        CHECK(back.eta.alpha == m.eta.alpha);

        const BiNatural th = adjunction_to_binatural(a);
        CHECK(th.theta == Matrix::identity(th.theta.rows()));
        CHECK(verify_binatural(th, *a.l, *a.r).ok());
        const Adjunction again = binatural_to_adjunction(a.l, a.r, th);
        CHECK(again.eps.alpha == a.eps.alpha);
        CHECK(again.eta.alpha == a.eta.alpha);
        const BiNatural th2 = adjunction_to_binatural(again);
        CHECK(th2.theta == th.theta);
        CHECK(*th2.theta_inv == *th.theta_inv);
    }
}

TEST_CASE("Kleisli object of the ceiling monad") {
    const auto p = fixtures::poset();
    const CategoryPtr k = kleisli_object(fixtures::ceiling_monad(p));
    CHECK(k->A.dim() == 4);
    // Every hom-set is a singleton: one morphism per (codomain, domain) pair.
    CHECK(k->pairs.dim() == 8);

    // The identity monad gives back F3 through C [] A = A.
    const Monad id = identity_monad(p);
    const CategoryPtr kid = kleisli_object(id);
    const Matrix kappa = left_unitor(p->A, cotensor(regular(p->C), p->A));
    CHECK(verify_category_iso(*p, *kid, kappa).ok());

    // Kleisli idempotence: the identity monad on a Kleisli object.
    const CategoryPtr kk = kleisli_object(identity_monad(k));
    CHECK(verify_category_iso(*k, *kk, left_unitor(k->A, cotensor(regular(k->C), k->A))).ok());

    // The twisted product a * b = g a b on Q[Z/2] with unit g.
    const auto f4 = fixtures::z2_algebra();
    const CategoryPtr tw = kleisli_object(fixtures::z2_twist_monad(f4));
    CHECK(tw->mult == Matrix{{0, 1, 1, 0}, {1, 0, 0, 1}});
    CHECK(tw->unit == Matrix{{0}, {1}});
}

TEST_CASE("bi-natural isomorphisms") {
    const auto p = fixtures::poset();
    const Adjunction id = identity_adjunction(p);
    const BiNatural th = adjunction_to_binatural(id);
    CHECK(verify_binatural(th, *id.l, *id.r).ok());
    // C [] A = A = A [] C, through the two unitors.
    const Bicomodule reg = regular(p->C);
    const Matrix expected = right_unitor(p->A, cotensor(p->A, reg)) * inverse(left_unitor(p->A, cotensor(reg, p->A)));
    CHECK(th.theta == expected);
    const Adjunction back = binatural_to_adjunction(id.l, id.r, th);
    CHECK(back.eps.alpha == id.eps.alpha);
    CHECK(back.eta.alpha == id.eta.alpha);

    const Adjunction fc = fixtures::floor_ceiling(p);
    const BiNatural fth = adjunction_to_binatural(fc);
    CHECK(verify_binatural(fth, *fc.l, *fc.r).ok());
    const Adjunction fback = binatural_to_adjunction(fc.l, fc.r, BiNatural{fth.theta, std::nullopt});
    CHECK(fback.eps.alpha == fc.eps.alpha);
    CHECK(fback.eta.alpha == fc.eta.alpha);

    BiNatural bent = fth;
    bent.theta = fth.theta;
    bent.theta(0, 0) += Scalar(1);
    bent.theta_inv.reset();
    CHECK_FALSE(verify_binatural(bent, *fc.l, *fc.r).ok());
    CHECK_THROWS_AS(binatural_to_adjunction(fc.l, fc.r, bent), Error);
    BiNatural zero{fth.theta * Scalar(0), std::nullopt};
    CHECK_THROWS_WITH_AS(binatural_to_adjunction(fc.l, fc.r, zero), doctest::Contains("NotInvertible"), Error);
}

TEST_CASE("Theta correspondence") {
    const auto p = fixtures::poset();
    const Monad m = fixtures::ceiling_monad(p);
    const Adjunction kl = kleisli_adjunction(m);

    // The free algebra (r, r1 eps) goes to r.
    const TAlgebra free = theta_inverse(m, kl.r);
    CHECK(verify_talgebra(m, free).ok());
    CHECK(same_functor(*theta_correspondence(m, free), *kl.r));

    // Identity monad: algebras are functors with identity sigma.
    const Monad id = identity_monad(p);
    const TAlgebra trivial{identity_functor(p), identity_nat(identity_functor(p))};
    const FunctorPtr g = theta_correspondence(id, TAlgebra{trivial.y, NatTrans{"s", compose_functors(trivial.y, id.t),
                                                                               trivial.y, trivial.sigma.alpha}});
    CHECK(g->f0 == Matrix::identity(2));
    CHECK(verify_functor(*g).ok());

    TAlgebra broken = free;
    broken.sigma.alpha = free.sigma.alpha * Scalar(2);
    CHECK_THROWS_WITH_AS(theta_correspondence(m, broken), doctest::Contains("NotTAlgebra"), Error);

    // Exhaustive: t-algebras into F3 and functors out of the Kleisli object biject.
    const CategoryPtr k = kleisli_object(m);
    for (const CategoryPtr& target : {p, fixtures::points_trivial()}) {
        const auto algs = talgebras(m, target);
        const auto funs = functors(k, target);
        CHECK(!algs.empty());
        CHECK(algs.size() == funs.size());
        for (const auto& a : algs) {
            const FunctorPtr f = theta_correspondence(m, a);
            CHECK(verify_functor(*f).ok());
            const TAlgebra back = theta_inverse(m, f);
            CHECK(same_functor(*back.y, *a.y));
            CHECK(back.sigma.alpha == a.sigma.alpha);
            bool found = false;
            for (const auto& h : funs) found = found || same_functor(*h, *f);
            CHECK(found);
        }
        for (const auto& f : funs) CHECK(same_functor(*theta_correspondence(m, theta_inverse(m, f)), *f));
    }

    // Pushforward along a functor keeps algebras algebras.
    const auto l = fixtures::floor(p);
    const TAlgebra pushed = talg_pushforward(l, free);
    CHECK(verify_talgebra(m, pushed).ok());
    CHECK(pushed.sigma.alpha == l->f1 * free.sigma.alpha);
}

TEST_CASE("co-Kleisli objects and mates") {
    const auto p = fixtures::poset();
    const CategoryPtr cid = cokleisli_object(identity_comonad(p));
    CHECK(verify_internal_category(*cid).ok());
    CHECK(verify_category_iso(*p, *cid, right_unitor(p->A, cotensor(p->A, regular(p->C)))).ok());

    const Adjunction fc = fixtures::floor_ceiling(p);
    const Monad m = fixtures::ceiling_monad(p);
    const Comonad g = mate_comonad(fc, m);
    CHECK(verify_comonad(g).ok());
    const CategoryPtr ck = cokleisli_object(g);
    CHECK(verify_internal_category(*ck).ok());
    CHECK(ck->A.dim() == 4);

    const BiNatural th = adjunction_to_binatural(fc);
    CHECK(compare_kleisli_cokleisli(m, g, th).ok());
    BiNatural bent = th;
    bent.theta = th.theta * Scalar(2);
    CHECK_THROWS_WITH_AS(compare_kleisli_cokleisli(m, g, bent), doctest::Contains("NotIsomorphism"), Error);

    // Identity case: the mate of the identity monad is the identity comonad.
    const Comonad gid = mate_comonad(identity_adjunction(p), identity_monad(p));
    CHECK(gid.delta.alpha == p->unit);
    CHECK(gid.eps.alpha == p->unit);
    CHECK(compare_kleisli_cokleisli(identity_monad(p), gid, adjunction_to_binatural(identity_adjunction(p))).ok());
}

TEST_CASE("opmonad Kleisli objects") {
    const auto p = fixtures::poset();
    const CategoryPtr k = opmonad_kleisli(identity_opmonad(p));
    CHECK(k->mult == p->mult);
    CHECK(k->unit == p->unit);
    CHECK(verify_internal_category(*k).ok());
    const auto f2 = fixtures::points_trivial();
    const CategoryPtr k2 = opmonad_kleisli(identity_opmonad(f2));
    CHECK(same_category(*k2, *f2));

    // Every opmonad on the F2 trivial category with bounded coefficients.
    int found = 0;
    for (const auto& f0 : point_maps(2, 2)) {
        const auto t = induced_cofunctor("t", f2, f2, f0);
        const auto tt = compose_cofunctors(t, t);
        const auto id = identity_cofunctor(f2);
        for (const auto& mu : bounded_span(cotrans_basis(tt, t), Matrix(2, 2)))
            for (const auto& eta : bounded_span(cotrans_basis(id, t), Matrix(2, 2))) {
                const Opmonad op{t, Cotrans{"mu", tt, t, mu}, Cotrans{"eta", id, t, eta}};
                if (!verify_opmonad(op).ok()) continue;
                ++found;
                CHECK(verify_internal_category(*opmonad_kleisli(op)).ok());
            }
    }
    CHECK(found >= 1);
}
