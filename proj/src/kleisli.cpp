#include "icat/kleisli.hpp"

#include "icat/linalg.hpp"

namespace icat {

namespace {

Matrix identity_on(std::size_t n, Field f) { return Matrix::identity(n, f); }

LinMap collapse(const Space& s) { return {identity_on(s.dim(), s.field()), s, Space::whole({s.dim()}, s.field())}; }

LinMap expand(const Space& s) { return {s.incl, Space::whole({s.dim()}, s.field()), Space::whole(s.atoms, s.field())}; }

// m_A^2 on the canonical A [] A [] A.
LinMap mult2(const InternalCategory& c) {
    return {iterate_mult(c, 2), cotensor_space({&c.A, &c.A, &c.A}), c.morphisms()};
}

// Identity morphisms on f's objects: u_B f0.
Matrix identities(const InternalFunctor& f) { return f.dst->unit * f.f0; }

NatTrans retag(NatTrans a, FunctorPtr source, FunctorPtr target, std::string name) {
    return NatTrans{std::move(name), std::move(source), std::move(target), std::move(a.alpha)};
}

Cotrans retag(Cotrans a, CofunctorPtr source, CofunctorPtr target, std::string name) {
    return Cotrans{std::move(name), std::move(source), std::move(target), std::move(a.alpha)};
}

struct HomSpaces {
    Bicomodule dr;
    Bicomodule lc;
    Space dra;  // D^r [] A
    Space blc;  // B [] lC
};

HomSpaces hom_spaces(const InternalFunctor& l, const InternalFunctor& r) {
    HomSpaces h{right_hom_carrier(r), left_hom_carrier(l), {}, {}};
    h.dra = cotensor_space({&h.dr, &l.src->A});
    h.blc = cotensor_space({&l.dst->A, &h.lc});
    return h;
}

void require_adjoint_pair(const InternalFunctor& l, const InternalFunctor& r) {
    if (!same_category(*l.src, *r.dst) || !same_category(*l.dst, *r.src))
        throw Error(ErrorKind::DomainMismatch, "l and r do not run between the same two categories");
}

}  // namespace

Bicomodule right_hom_carrier(const InternalFunctor& r) {
    Bicomodule d = induce_right(regular(r.src->C), r.f0, r.dst->C);
    d.name = r.src->C->name + "^" + r.name;
    return d;
}

Bicomodule left_hom_carrier(const InternalFunctor& l) {
    Bicomodule c = induce_left(l.f0, l.dst->C, regular(l.src->C));
    c.name = l.name + "^" + l.src->C->name;
    return c;
}

Report verify_adjunction(const Adjunction& a) {
    Report r("adjunction " + a.l->name + " -| " + a.r->name);
    r.merge(verify_functor(*a.l), "l");
    r.merge(verify_functor(*a.r), "r");
    r.merge(verify_nat(a.eps), "counit");
    r.merge(verify_nat(a.eta), "unit");
    r.equal_lazy("first triangle", "eps l0 * l1 eta = l", [&] {
        const NatTrans lhs = vertical_compose(whisker_right(a.eps, a.l), whisker_left(a.l, a.eta));
        return std::pair{lhs.alpha, identities(*a.l)};
    });
    r.equal_lazy("second triangle", "r1 eps * eta r0 = r", [&] {
        const NatTrans lhs = vertical_compose(whisker_left(a.r, a.eps), whisker_right(a.eta, a.r));
        return std::pair{lhs.alpha, identities(*a.r)};
    });
    return r;
}

Report verify_monad(const Monad& m) {
    Report r("monad " + m.t->name);
    r.merge(verify_functor(*m.t), "t");
    r.merge(verify_nat(m.mu), "mu");
    r.merge(verify_nat(m.eta), "eta");
    r.equal_lazy("associativity", "mu * t1 mu = mu * mu t0", [&] {
        return std::pair{vertical_compose(m.mu, whisker_left(m.t, m.mu)).alpha,
                         vertical_compose(m.mu, whisker_right(m.mu, m.t)).alpha};
    });
    r.equal_lazy("left unit", "mu * t1 eta = t", [&] {
        return std::pair{vertical_compose(m.mu, whisker_left(m.t, m.eta)).alpha, identities(*m.t)};
    });
    r.equal_lazy("right unit", "mu * eta t0 = t", [&] {
        return std::pair{vertical_compose(m.mu, whisker_right(m.eta, m.t)).alpha, identities(*m.t)};
    });
    return r;
}

Report verify_comonad(const Comonad& g) {
    Report r("comonad " + g.g->name);
    r.merge(verify_functor(*g.g), "g");
    r.merge(verify_nat(g.delta), "delta");
    r.merge(verify_nat(g.eps), "eps");
    r.equal_lazy("coassociativity", "g1 delta * delta = delta g0 * delta", [&] {
        return std::pair{vertical_compose(whisker_left(g.g, g.delta), g.delta).alpha,
                         vertical_compose(whisker_right(g.delta, g.g), g.delta).alpha};
    });
    r.equal_lazy("left counit", "g1 eps * delta = g", [&] {
        return std::pair{vertical_compose(whisker_left(g.g, g.eps), g.delta).alpha, identities(*g.g)};
    });
    r.equal_lazy("right counit", "eps g0 * delta = g", [&] {
        return std::pair{vertical_compose(whisker_right(g.eps, g.g), g.delta).alpha, identities(*g.g)};
    });
    return r;
}

Report verify_opmonad(const Opmonad& t) {
    Report r("opmonad " + t.t->name);
    r.merge(verify_cofunctor(*t.t), "t");
    r.merge(verify_cotrans(t.mu), "mu");
    r.merge(verify_cotrans(t.eta), "eta");
    const Cotrans one = identity_cotrans(t.t);
    r.equal_lazy("associativity", "mu *_ (1_t ._ mu) = mu *_ (mu ._ 1_t)", [&] {
        return std::pair{co_vertical(t.mu, co_horizontal(one, t.mu)).alpha,
                         co_vertical(t.mu, co_horizontal(t.mu, one)).alpha};
    });
    r.equal_lazy("left unit", "mu *_ (1_t ._ eta) = 1_t", [&] {
        return std::pair{co_vertical(t.mu, co_horizontal(one, t.eta)).alpha, one.alpha};
    });
    r.equal_lazy("right unit", "mu *_ (eta ._ 1_t) = 1_t", [&] {
        return std::pair{co_vertical(t.mu, co_horizontal(t.eta, one)).alpha, one.alpha};
    });
    return r;
}

Report verify_talgebra(const Monad& m, const TAlgebra& a) {
    Report r("t-algebra " + a.y->name);
    r.merge(verify_functor(*a.y), "y");
    r.merge(verify_nat(a.sigma), "sigma");
    r.equal_lazy("unit", "sigma * y1 eta = y", [&] {
        return std::pair{vertical_compose(a.sigma, whisker_left(a.y, m.eta)).alpha, identities(*a.y)};
    });
    r.equal_lazy("associativity", "sigma * y1 mu = sigma * sigma t0", [&] {
        return std::pair{vertical_compose(a.sigma, whisker_left(a.y, m.mu)).alpha,
                         vertical_compose(a.sigma, whisker_right(a.sigma, m.t)).alpha};
    });
    return r;
}

Adjunction identity_adjunction(const CategoryPtr& c) {
    const auto id = identity_functor(c);
    return Adjunction{id, id, identity_nat(compose_functors(id, id)), identity_nat(compose_functors(id, id))};
}

Monad identity_monad(const CategoryPtr& c) {
    const auto id = identity_functor(c);
    const auto idid = compose_functors(id, id);
    return Monad{id, retag(identity_nat(id), idid, id, "mu"), retag(identity_nat(id), id, id, "eta")};
}

Comonad identity_comonad(const CategoryPtr& c) {
    const auto id = identity_functor(c);
    const auto idid = compose_functors(id, id);
    return Comonad{id, retag(identity_nat(id), id, idid, "delta"), retag(identity_nat(id), id, id, "eps")};
}

Opmonad identity_opmonad(const CategoryPtr& c) {
    const auto id = identity_cofunctor(c);
    const auto idid = compose_cofunctors(id, id);
    return Opmonad{id, retag(identity_cotrans(id), idid, id, "mu"), retag(identity_cotrans(id), id, id, "eta")};
}

BiNatural adjunction_to_binatural(const Adjunction& a) {
    const InternalFunctor& l = *a.l;
    const InternalFunctor& r = *a.r;
    require_adjoint_pair(l, r);
    const InternalCategory& src = *l.src;
    const InternalCategory& dst = *l.dst;
    const HomSpaces h = hom_spaces(l, r);
    const std::size_t c = src.C->dim(), d = dst.C->dim();

    Flow fwd(h.dra);
    fwd.apply(1, src.A.rho, {src.A.dim(), c}).apply(0, a.eps.alpha).apply(1, l.f1).apply(0, dst.m());
    Flow back(h.blc);
    back.apply(0, dst.A.lambda, {d, dst.A.dim()}).apply(1, r.f1).apply(2, a.eta.alpha).apply(1, src.m());
    return BiNatural{fwd.into(h.blc), back.into(h.dra)};
}

Report verify_binatural(const BiNatural& th, const InternalFunctor& l, const InternalFunctor& r) {
    require_adjoint_pair(l, r);
    const InternalCategory& src = *l.src;
    const InternalCategory& dst = *l.dst;
    const HomSpaces h = hom_spaces(l, r);
    if (th.theta.rows() != h.blc.dim() || th.theta.cols() != h.dra.dim())
        throw Error(ErrorKind::ShapeMismatch, "theta has the wrong shape");
    const LinMap theta{th.theta, h.dra, h.blc};
    const std::size_t c = src.C->dim(), d = dst.C->dim();
    Report rep("bi-natural theta for " + l.name + " -| " + r.name);
    check_bicolinear(rep, "theta", th.theta, cotensor(h.dr, src.A).result, cotensor(dst.A, h.lc).result);

    Bicomodule br = induce_right(dst.A, r.f0, src.C);
    const Space bra = cotensor_space({&br, &src.A});
    rep.equal_lazy(
        "covariant naturality", "(m_B [] lC)(B [] theta)(rho [] A) = theta (D^r [] m_A)(D [] r1 [] A)(lambda [] A)",
        [&] {
            Flow lhs(bra), rhs(bra);
            lhs.apply(0, dst.A.rho, {dst.A.dim(), d}).apply(1, theta).apply(0, dst.m());
            rhs.apply(0, dst.A.lambda, {d, dst.A.dim()}).apply(1, r.f1).apply(1, src.m()).apply(0, theta);
            return std::pair{lhs.vectors(), rhs.vectors()};
        },
        &bra.incl);

    const Space draa = cotensor_space({&h.dr, &src.A, &src.A});
    const LinMap m2 = mult2(dst);
    rep.equal_lazy(
        "contravariant naturality", "(m_B^2 [] lC)(B [] l [] l1 [] lC)(theta [] rho) = theta (D^r [] m_A)",
        [&] {
            Flow lhs(draa), rhs(draa);
            lhs.apply(0, theta).apply(2, src.A.rho, {src.A.dim(), c}).apply(1, identities(l)).apply(2, l.f1);
            lhs.apply(0, m2);
            rhs.apply(1, src.m()).apply(0, theta);
            return std::pair{lhs.vectors(), rhs.vectors()};
        },
        &draa.incl);

    if (th.theta_inv) {
        const Matrix& inv = *th.theta_inv;
        if (inv.rows() != h.dra.dim() || inv.cols() != h.blc.dim())
            throw Error(ErrorKind::ShapeMismatch, "theta inverse has the wrong shape");
        rep.equal("inverse after theta", "theta^-1 theta = 1", inv * th.theta, identity_on(h.dra.dim(), inv.field()));
        rep.equal("theta after inverse", "theta theta^-1 = 1", th.theta * inv, identity_on(h.blc.dim(), inv.field()));
    }
    return rep;
}

Adjunction binatural_to_adjunction(const FunctorPtr& l, const FunctorPtr& r, const BiNatural& th) {
    const Matrix inv = th.theta_inv ? *th.theta_inv : inverse(th.theta);
    const BiNatural full{th.theta, inv};
    const Report rep = verify_binatural(full, *l, *r);
    if (!rep.ok()) throw Error(ErrorKind::NotBiNatural, rep.text());
    const InternalCategory& src = *l->src;
    const InternalCategory& dst = *l->dst;
    const HomSpaces h = hom_spaces(*l, *r);
    const std::size_t c = src.C->dim(), d = dst.C->dim();

    Flow e(identity_on(d, dst.field()), {d});
    e.apply(0, dst.C->delta, {d, d}).apply(1, identities(*r)).apply(0, LinMap{th.theta, h.dra, h.blc});
    e.apply(1, identities(*l)).apply(0, dst.m());
    Flow u(identity_on(c, src.field()), {c});
    u.apply(0, src.C->delta, {c, c}).apply(0, identities(*l)).apply(0, LinMap{inv, h.blc, h.dra});
    u.apply(0, identities(*r)).apply(0, src.m());

    const auto lr = compose_functors(l, r);
    const auto rl = compose_functors(r, l);
    return Adjunction{l, r, NatTrans{"eps", lr, identity_functor(l->dst), e.vectors()},
                      NatTrans{"eta", identity_functor(l->src), rl, u.vectors()}};
}

Monad monad_of_adjunction(const Adjunction& a) {
    const auto t = compose_functors(a.r, a.l);
    const NatTrans mu = whisker_left(a.r, whisker_right(a.eps, a.l));
    return Monad{t, retag(mu, compose_functors(t, t), t, "mu"), retag(a.eta, identity_functor(a.l->src), t, "eta")};
}

CategoryPtr kleisli_object(const Monad& m) {
    const InternalCategory& a = *m.t->src;
    const Comonoid& c = *a.C;
    const std::size_t n = c.dim();
    const Cotensor at = cotensor(right_hom_carrier(*m.t), a.A);
    Bicomodule carrier = at.result;
    carrier.name = a.A.name + "_" + m.t->name;

    Flow unit(identity_on(n, c.field()), {n});
    unit.apply(0, c.delta, {n, n}).apply(1, m.eta.alpha).apply(0, collapse(at.space));

    const Space pairs = cotensor_space({&carrier, &carrier});
    Flow mult(pairs);
    mult.apply(0, expand(at.space)).apply(2, expand(at.space)).drop(2, c.counit);
    mult.apply(0, c.delta, {n, n}).apply(1, m.mu.alpha).apply(2, m.t->f1).apply(1, mult2(a));
    mult.apply(0, collapse(at.space));
    return make_category(a.name + "_" + m.t->name, a.C, std::move(carrier), mult.vectors(), unit.vectors());
}

CategoryPtr wreath_product(const KlOneCellPtr& x, const KlTwoCell& mult, const KlTwoCell& unit) {
    const InternalCategory& a = *x->src;
    if (!same_category(a, *x->dst)) throw Error(ErrorKind::DomainMismatch, "wreath product needs an endo 1-cell");
    if (!same_onecell(*mult.target, *x) || !same_onecell(*unit.target, *x))
        throw Error(ErrorKind::DomainMismatch, "wreath product: 2-cells do not end at the 1-cell");
    const Cotensor ma = cotensor(x->m, a.A);
    const Cotensor mm = cotensor(x->m, x->m);
    Bicomodule carrier = ma.result;
    const Space pairs = cotensor_space({&carrier, &carrier});
    Flow flow(pairs);
    flow.apply(0, expand(ma.space)).apply(2, expand(ma.space)).apply(1, x->action());
    flow.apply(0, collapse(mm.space)).apply(1, a.m()).apply(0, mult.component()).apply(1, a.m());
    flow.apply(0, collapse(ma.space));
    return make_category("wreath(" + x->name + ")", a.C, std::move(carrier), flow.vectors(), unit.chi);
}

CategoryPtr kleisli_object_wreath(const Monad& m) {
    const auto x = embed_Phi(m.t);
    const auto xx = kl_compose_onecells(x, x);
    const KlTwoCell mu = embed_Phi_2cell(m.mu);
    const KlTwoCell mult = transport_twocell(mu, xx, phi_comparison(*m.t, *m.t), x,
                                             identity_on(x->m.dim(), x->m.field()));
    const KlTwoCell eta = embed_Phi_2cell(m.eta);
    return wreath_product(x, mult, KlTwoCell{eta.name, identity_onecell(m.t->src), x, eta.chi});
}

Adjunction kleisli_adjunction(const Monad& m) {
    const CategoryPtr a = m.t->src;
    const CategoryPtr k = kleisli_object(m);
    const Comonoid& c = *a->C;
    const std::size_t n = c.dim();
    const Cotensor at = cotensor(right_hom_carrier(*m.t), a->A);

    Flow r1(k->morphisms());
    r1.apply(0, expand(at.space)).apply(0, m.mu.alpha).apply(1, m.t->f1).apply(0, a->m());
    const auto r = make_functor("r", k, a, m.t->f0, r1.vectors());

    Flow l1(a->morphisms());
    l1.apply(0, iterate_coaction(a->A, 2), {n, n, a->A.dim()}).apply(1, m.eta.alpha).apply(1, a->m());
    l1.apply(0, collapse(at.space));
    const auto l = make_functor("l", a, k, identity_on(n, c.field()), l1.vectors());

    Flow eps(identity_on(n, c.field()), {n});
    eps.apply(0, c.delta, {n, n}).apply(1, identities(*m.t)).apply(0, collapse(at.space));
    return Adjunction{l, r, NatTrans{"eps", compose_functors(l, r), identity_functor(k), eps.vectors()},
                      retag(m.eta, identity_functor(a), compose_functors(r, l), "eta")};
}

FunctorPtr theta_correspondence(const Monad& m, const TAlgebra& y) {
    const Report rep = verify_talgebra(m, y);
    if (!rep.ok()) throw Error(ErrorKind::NotTAlgebra, rep.text());
    const CategoryPtr k = kleisli_object(m);
    const Cotensor at = cotensor(right_hom_carrier(*m.t), m.t->src->A);
    Flow flow(k->morphisms());
    flow.apply(0, expand(at.space)).apply(0, y.sigma.alpha).apply(1, y.y->f1).apply(0, y.y->dst->m());
    return make_functor("Theta(" + y.y->name + ")", k, y.y->dst, y.y->f0, flow.vectors());
}

TAlgebra theta_inverse(const Monad& m, const FunctorPtr& g) {
    const Adjunction kl = kleisli_adjunction(m);
    if (!same_category(*g->src, *kl.l->dst))
        throw Error(ErrorKind::DomainMismatch, "theta_inverse: functor does not start at the Kleisli object");
    const auto y = compose_functors(g, kl.l);
    const NatTrans sigma = whisker_left(g, kl.eps);
    return TAlgebra{y, NatTrans{"sigma", compose_functors(y, m.t), y, sigma.alpha * kl.l->f0}};
}

TAlgebra talg_pushforward(const FunctorPtr& f, const TAlgebra& a) {
    return TAlgebra{compose_functors(f, a.y), whisker_left(f, a.sigma)};
}

CategoryPtr cokleisli_object(const Comonad& g) {
    const InternalCategory& a = *g.g->src;
    const Comonoid& c = *a.C;
    const std::size_t n = c.dim();
    const Cotensor ga = cotensor(a.A, left_hom_carrier(*g.g));
    Bicomodule carrier = ga.result;
    carrier.name = g.g->name + "_" + a.A.name;

    Flow unit(identity_on(n, c.field()), {n});
    unit.apply(0, c.delta, {n, n}).apply(0, g.eps.alpha).apply(0, collapse(ga.space));

    const Space pairs = cotensor_space({&carrier, &carrier});
    Flow mult(pairs);
    mult.apply(0, expand(ga.space)).apply(2, expand(ga.space)).drop(1, c.counit);
    mult.apply(2, c.delta, {n, n}).apply(1, g.g->f1).apply(2, g.delta.alpha).apply(0, mult2(a));
    mult.apply(0, collapse(ga.space));
    return make_category(g.g->name + "_" + a.name, a.C, std::move(carrier), mult.vectors(), unit.vectors());
}

Comonad mate_comonad(const Adjunction& a, const Monad& m) {
    if (!same_functor(*a.r, *m.t)) throw Error(ErrorKind::DomainMismatch, "mate_comonad: the monad is not on r");
    const FunctorPtr& l = a.l;
    const auto ll = compose_functors(l, l);
    // delta = sigma l0^2 * l1 mu l0^2 * l1 r1 iota l0 * l1 iota
    const NatTrans s1 = whisker_left(l, a.eta);
    const NatTrans s2 = whisker_left(l, whisker_left(a.r, whisker_right(a.eta, l)));
    const NatTrans s3 = whisker_left(l, whisker_right(m.mu, ll));
    const NatTrans s4 = whisker_right(a.eps, ll);
    const NatTrans delta = vertical_compose(s4, vertical_compose(s3, vertical_compose(s2, s1)));
    const NatTrans eps = vertical_compose(a.eps, whisker_left(l, m.eta));
    return Comonad{l, retag(delta, l, ll, "delta"), retag(eps, l, identity_functor(l->src), "eps")};
}

Report verify_category_iso(const InternalCategory& a, const InternalCategory& b, const Matrix& kappa) {
    require_same_comonoid(*a.C, *b.C, "verify_category_iso");
    Report r("isomorphism " + a.name + " -> " + b.name);
    check_bicolinear(r, "comparison", kappa, a.A, b.A);
    r.add("comparison invertible", "k invertible", kappa.rows() == kappa.cols() && is_invertible(kappa));
    r.equal_lazy(
        "multiplicative", "k m_A = m_B (k [] k)",
        [&] {
            Flow lhs(a.pairs), rhs(a.pairs);
            lhs.apply(0, a.m()).apply(0, kappa);
            rhs.apply(0, kappa).apply(1, kappa).apply(0, b.m());
            return std::pair{lhs.vectors(), rhs.vectors()};
        },
        &a.pairs.incl);
    r.equal("unital", "k u_A = u_B", kappa * a.unit, b.unit);
    return r;
}

Report compare_kleisli_cokleisli(const Monad& m, const Comonad& g, const BiNatural& th) {
    const CategoryPtr k = kleisli_object(m);
    const CategoryPtr ck = cokleisli_object(g);
    if (th.theta.rows() != ck->A.dim() || th.theta.cols() != k->A.dim())
        throw Error(ErrorKind::ShapeMismatch, "theta does not map A_r to lA");
    Report r = verify_category_iso(*k, *ck, th.theta);
    if (!r.ok()) {
        std::string failing;
        for (const auto& c : r.checks())
            if (!c.pass) failing += (failing.empty() ? "" : ", ") + c.law;
        throw Error(ErrorKind::NotIsomorphism, "theta: A_r -> lA fails " + failing);
    }
    return r;
}

CategoryPtr opmonad_kleisli(const Opmonad& t) {
    const InternalCategory& a = *t.t->src;
    const Comonoid& c = *a.C;
    const std::size_t n = c.dim(), d = a.A.dim();
    Bicomodule ta = induce_left(t.t->f0, a.C, a.A);
    ta.name = t.t->name + a.A.name;
    const Space pairs = cotensor_space({&ta, &ta});
    Flow flow(pairs);
    flow.apply(0, a.A.lambda, {n, d}).apply(2, a.A.lambda, {n, d});
    flow.apply(0, t.mu.alpha).apply(1, t.t->on_morphisms()).apply(0, mult2(a));
    return make_category(t.t->name + a.name, a.C, std::move(ta), flow.vectors(), t.eta.alpha);
}

}  // namespace icat
