#include "icat/klbicat.hpp"

#include "icat/linalg.hpp"

namespace icat {

namespace {

Matrix identity_on(std::size_t n, Field f) { return Matrix::identity(n, f); }

// Collapses a block of atoms lying in s to one atom of coordinates.
LinMap collapse(const Space& s) { return {identity_on(s.dim(), s.field()), s, Space::whole({s.dim()}, s.field())}; }

void require_same_ends(const KlOneCell& a, const KlOneCell& b, const std::string& where) {
    if (!same_category(*a.src, *b.src) || !same_category(*a.dst, *b.dst))
        throw Error(ErrorKind::DomainMismatch, where + ": 1-cells with different ends");
}

bool same_bicomodule(const Bicomodule& a, const Bicomodule& b) {
    return same_comonoid(*a.left, *b.left) && same_comonoid(*a.right, *b.right) && a.lambda == b.lambda &&
           a.rho == b.rho;
}

// Carrier of a mirrored 1-cell, built from a D-C-bicomodule map phi_hat:
// M [] A -> B [] M by swapping tensor factors.
KlOneCellPtr from_mirror(std::string name, const CategoryPtr& src, const CategoryPtr& dst, const Bicomodule& hat,
                         const Matrix& hat_phi, const Space& hat_am, const Space& hat_mb) {
    const Bicomodule m = mirror(hat, src->C, dst->C);
    const Space am = cotensor_space({&src->A, &m});
    const std::size_t a = src->A.dim(), b = dst->A.dim(), d = m.dim();
    const Field f = m.field();
    Flow flow(am);
    flow.apply_span(0, 2, Matrix::swap(a, d, f), {d, a}).apply(0, LinMap{hat_phi, hat_am, hat_mb});
    flow.apply_span(0, 2, Matrix::swap(b, d, f), {d, b});
    const Space mb = cotensor_space({&m, &dst->A});
    return make_kl_onecell(std::move(name), src, dst, m, flow.into(mb));
}

std::pair<Matrix, Matrix> square_sides(const KlTwoCell& c) {
    const KlOneCell& x = *c.source;
    const KlOneCell& y = *c.target;
    Flow lhs(x.am), rhs(x.am);
    lhs.apply(0, x.action()).apply(0, c.component()).apply(1, x.dst->m());
    rhs.apply(1, c.component()).apply(0, y.action()).apply(1, x.dst->m());
    return {lhs.vectors(), rhs.vectors()};
}

}  // namespace

KlOneCellPtr make_kl_onecell(std::string name, CategoryPtr src, CategoryPtr dst, Bicomodule m, Matrix phi) {
    require_same_comonoid(*m.left, *src->C, "1-cell carrier (left)");
    require_same_comonoid(*m.right, *dst->C, "1-cell carrier (right)");
    Space am = cotensor_space({&src->A, &m});
    Space mb = cotensor_space({&m, &dst->A});
    if (phi.rows() != mb.dim() || phi.cols() != am.dim())
        throw Error(ErrorKind::ShapeMismatch, "1-cell phi is " + std::to_string(phi.rows()) + "x" +
                                                  std::to_string(phi.cols()) + ", expected " +
                                                  std::to_string(mb.dim()) + "x" + std::to_string(am.dim()));
    return std::make_shared<const KlOneCell>(KlOneCell{std::move(name), std::move(src), std::move(dst), std::move(m),
                                                       std::move(phi), std::move(am), std::move(mb)});
}

bool same_onecell(const KlOneCell& a, const KlOneCell& b) {
    return same_category(*a.src, *b.src) && same_category(*a.dst, *b.dst) && same_bicomodule(a.m, b.m) &&
           a.phi == b.phi;
}

LinMap KlTwoCell::component() const {
    return {chi, Space::whole({source->m.dim()}, chi.field()), target->mb};
}

Report verify_kl_onecell(const KlOneCell& x) {
    const InternalCategory& a = *x.src;
    const InternalCategory& b = *x.dst;
    Report r("KL 1-cell " + x.name);
    check_bicolinear(r, "phi", x.phi, cotensor(a.A, x.m).result, cotensor(x.m, b.A).result);
    const Space triple = cotensor_space({&a.A, &a.A, &x.m});
    r.equal_lazy(
        "associativity", "(M [] m_B)(phi [] B)(A [] phi) = phi (m_A [] M)",
        [&] {
            Flow lhs(triple), rhs(triple);
            lhs.apply(1, x.action()).apply(0, x.action()).apply(1, b.m());
            rhs.apply(0, a.m()).apply(0, x.action());
            return std::pair{lhs.vectors(), rhs.vectors()};
        },
        &triple.incl);
    const std::size_t n = x.m.dim();
    const Matrix id = identity_on(n, x.m.field());
    r.equal_lazy(
        "unit", "phi (u_A [] M) = M [] u_B",
        [&] {
            Flow lhs(id, {n}), rhs(id, {n});
            lhs.apply(0, x.m.lambda, {a.C->dim(), n}).apply(0, a.unit).apply(0, x.action());
            rhs.apply(0, x.m.rho, {n, b.C->dim()}).apply(1, b.unit);
            return std::pair{lhs.vectors(), rhs.vectors()};
        },
        &id);
    return r;
}

Report verify_kl_twocell(const KlTwoCell& c) {
    const KlOneCell& x = *c.source;
    const KlOneCell& y = *c.target;
    require_same_ends(x, y, "KL 2-cell");
    if (c.chi.rows() != y.mb.dim() || c.chi.cols() != x.m.dim())
        throw Error(ErrorKind::ShapeMismatch, "KL 2-cell component has the wrong shape");
    Report r("KL 2-cell " + c.name);
    check_bicolinear(r, "chi", c.chi, x.m, cotensor(y.m, x.dst->A).result);
    r.equal_lazy(
        "2-cell square", "(N [] m_B)(chi [] B) phi = (N [] m_B)(psi [] B)(A [] chi)",
        [&] { return square_sides(c); }, &x.am.incl);
    return r;
}

std::vector<Matrix> kl_twocell_basis(const KlOneCellPtr& x, const KlOneCellPtr& y) {
    require_same_ends(*x, *y, "kl_twocell_basis");
    const auto colinear = bicolinear_basis(x->m, cotensor(y->m, x->dst->A).result);
    return restrict_basis(colinear, [&](const Matrix& chi) {
        auto [lhs, rhs] = square_sides(KlTwoCell{"", x, y, chi});
        return Matrix(lhs - rhs);
    });
}

KlOneCellPtr identity_onecell(const CategoryPtr& c) {
    const Bicomodule reg = regular(c->C);
    Flow flow(cotensor_space({&c->A, &reg}));
    flow.drop(1, c->C->counit).apply(0, c->A.lambda, {c->C->dim(), c->A.dim()});
    return make_kl_onecell("1_" + c->name, c, c, reg, flow.into(cotensor_space({&reg, &c->A})));
}

KlTwoCell identity_twocell(const KlOneCellPtr& x) {
    const std::size_t n = x->m.dim();
    Flow flow(identity_on(n, x->m.field()), {n});
    flow.apply(0, x->m.rho, {n, x->dst->C->dim()}).apply(1, x->dst->unit);
    return KlTwoCell{"1_" + x->name, x, x, flow.into(x->mb)};
}

KlTwoCell kl_vertical(const KlTwoCell& chi2, const KlTwoCell& chi1) {
    if (!same_onecell(*chi2.source, *chi1.target))
        throw Error(ErrorKind::DomainMismatch, "kl_vertical: " + chi2.name + " does not start where " + chi1.name +
                                                   " ends");
    const std::size_t n = chi1.source->m.dim();
    Flow flow(identity_on(n, chi1.chi.field()), {n});
    flow.apply(0, chi1.component()).apply(0, chi2.component()).apply(1, chi1.source->dst->m());
    return KlTwoCell{chi2.name + "*" + chi1.name, chi1.source, chi2.target, flow.into(chi2.target->mb)};
}

KlOneCellPtr kl_compose_onecells(const KlOneCellPtr& y, const KlOneCellPtr& x) {
    if (!same_category(*x->dst, *y->src))
        throw Error(ErrorKind::DomainMismatch, "kl_compose_onecells: middle categories differ");
    const Cotensor mm = cotensor(x->m, y->m);
    const Bicomodule& carrier = mm.result;
    Flow flow(cotensor_space({&x->src->A, &carrier}));
    flow.apply(1, mm.space.incl, {x->m.dim(), y->m.dim()}).apply(0, x->action()).apply(1, y->action());
    flow.apply(0, collapse(mm.space));
    return make_kl_onecell(y->name + "o" + x->name, x->src, y->dst, carrier,
                           flow.into(cotensor_space({&carrier, &y->dst->A})));
}

KlTwoCell kl_horizontal(const KlTwoCell& chi2, const KlTwoCell& chi1) {
    if (!same_category(*chi1.source->dst, *chi2.source->src))
        throw Error(ErrorKind::DomainMismatch, "kl_horizontal: middle categories differ");
    const auto src = kl_compose_onecells(chi2.source, chi1.source);
    const auto tgt = kl_compose_onecells(chi2.target, chi1.target);
    const Cotensor mm = cotensor(chi1.source->m, chi2.source->m);
    const Cotensor nn = cotensor(chi1.target->m, chi2.target->m);
    const std::size_t k = mm.space.dim();
    Flow flow(identity_on(k, chi1.chi.field()), {k});
    flow.apply(0, mm.space.incl, {chi1.source->m.dim(), chi2.source->m.dim()});
    flow.apply(0, chi1.component()).apply(1, chi2.source->action()).apply(1, chi2.component());
    flow.apply(2, chi2.source->dst->m()).apply(0, collapse(nn.space));
    return KlTwoCell{chi2.name + "." + chi1.name, src, tgt, flow.into(tgt->mb)};
}

Report compare_onecells(const KlOneCell& x, const KlOneCell& y, const Matrix& kappa) {
    require_same_ends(x, y, "compare_onecells");
    Report r("comparison " + x.name + " -> " + y.name);
    check_bicolinear(r, "comparison", kappa, x.m, y.m);
    r.add("comparison invertible", "k invertible", kappa.rows() == kappa.cols() && is_invertible(kappa));
    r.equal_lazy(
        "phi transported", "phi_y (A [] k) = (k [] B) phi_x",
        [&] {
            Flow lhs(x.am), rhs(x.am);
            lhs.apply(1, kappa).apply(0, y.action());
            rhs.apply(0, x.action()).apply(0, kappa);
            return std::pair{lhs.vectors(), rhs.vectors()};
        },
        &x.am.incl);
    return r;
}

KlTwoCell transport_twocell(const KlTwoCell& c, const KlOneCellPtr& src, const Matrix& k_src, const KlOneCellPtr& tgt,
                            const Matrix& k_tgt) {
    Flow flow(inverse(k_src), {c.source->m.dim()});
    flow.apply(0, c.component()).apply(0, k_tgt);
    return KlTwoCell{c.name, src, tgt, flow.into(tgt->mb)};
}

Matrix left_identity_comparison(const KlOneCell& x) {
    return left_unitor(x.m, cotensor(regular(x.src->C), x.m));
}

Matrix right_identity_comparison(const KlOneCell& x) {
    return right_unitor(x.m, cotensor(x.m, regular(x.dst->C)));
}

KlOneCellPtr embed_Phi(const FunctorPtr& f) {
    const InternalCategory& a = *f->src;
    Bicomodule cf = induce_right(regular(a.C), f->f0, f->dst->C);
    cf.name = a.C->name + "^" + f->name;
    Flow flow(cotensor_space({&a.A, &cf}));
    flow.drop(1, a.C->counit).apply(0, a.A.lambda, {a.C->dim(), a.A.dim()}).apply(1, f->f1);
    const Space mb = cotensor_space({&cf, &f->dst->A});
    return make_kl_onecell("Phi(" + f->name + ")", f->src, f->dst, cf, flow.into(mb));
}

KlTwoCell embed_Phi_2cell(const NatTrans& a) {
    const auto src = embed_Phi(a.source);
    const auto tgt = embed_Phi(a.target);
    const Comonoid& c = *a.source->src->C;
    Flow flow(identity_on(c.dim(), c.field()), {c.dim()});
    flow.apply(0, c.delta, {c.dim(), c.dim()}).apply(1, a.alpha);
    return KlTwoCell{"Phi(" + a.name + ")", src, tgt, flow.into(tgt->mb)};
}

FunctorPtr phi_preimage(const KlOneCell& x) {
    const Comonoid& c = *x.src->C;
    if (x.m.dim() != c.dim() || !(x.m.lambda == c.delta))
        throw Error(ErrorKind::NotPhiImage, x.name + ": carrier is not C with its own left coaction");
    Flow objects(identity_on(c.dim(), c.field()), {c.dim()});
    objects.apply(0, x.m.rho, {c.dim(), x.dst->C->dim()}).drop(0, c.counit);
    const Bicomodule& a = x.src->A;
    Flow arrows(identity_on(a.dim(), a.field()), {a.dim()});
    arrows.apply(0, a.rho, {a.dim(), c.dim()}).apply(0, x.action()).drop(0, c.counit);
    const auto f = make_functor("Phi^-1(" + x.name + ")", x.src, x.dst, objects.vectors(), arrows.vectors());
    if (!verify_functor(*f).ok()) throw Error(ErrorKind::NotPhiImage, x.name + " reads back to a non-functor");
    if (!same_onecell(*embed_Phi(f), x)) throw Error(ErrorKind::NotPhiImage, x.name + " is not of the form Phi(f)");
    return f;
}

NatTrans phi_local_lift(const KlTwoCell& chi) {
    const auto f = phi_preimage(*chi.source);
    const auto g = phi_preimage(*chi.target);
    const InternalCategory& b = *g->dst;
    const std::size_t n = chi.source->m.dim();
    Flow flow(identity_on(n, b.field()), {n});
    flow.apply(0, chi.component()).apply(0, b.unit * g->f0).apply(0, b.m());
    return NatTrans{"lift(" + chi.name + ")", f, g, flow.vectors()};
}

Matrix phi_comparison(const InternalFunctor& f, const InternalFunctor& g) {
    const Comonoid& c = *f.src->C;
    const Bicomodule cf = induce_right(regular(f.src->C), f.f0, f.dst->C);
    const Bicomodule dg = induce_right(regular(g.src->C), g.f0, g.dst->C);
    const Matrix lifted = tensor(identity_on(c.dim(), c.field()), f.f0) * c.delta;
    return cotensor(cf, dg).space.coords(lifted);
}

CategoryPtr mirror_category(const CategoryPtr& c) {
    const ComonoidPtr cop = coopposite(*c->C);
    Bicomodule a = mirror(c->A, cop, cop);
    const std::size_t n = a.dim();
    Flow flow(cotensor_space({&a, &a}));
    flow.apply_span(0, 2, Matrix::swap(n, n, c->field()), {n, n}).apply(0, c->m());
    return make_category(c->name + "^op", cop, std::move(a), flow.vectors(), c->unit);
}

FunctorPtr mirror_functor(const FunctorPtr& f, const CategoryPtr& src, const CategoryPtr& dst) {
    return make_functor(f->name + "^op", src, dst, f->f0, f->f1);
}

KlOneCellPtr embed_Phi_hat(const FunctorPtr& f) {
    const InternalCategory& a = *f->src;
    const InternalCategory& b = *f->dst;
    Bicomodule fc = induce_left(f->f0, b.C, regular(a.C));
    fc.name = f->name + "^" + a.C->name;
    const Space hat_am = cotensor_space({&fc, &a.A});
    const Space hat_mb = cotensor_space({&b.A, &fc});
    Flow flow(hat_am);
    flow.drop(0, a.C->counit).apply(0, a.A.rho, {a.A.dim(), a.C->dim()}).apply(0, f->f1);
    return from_mirror("Phi^(" + f->name + ")", mirror_category(f->src), mirror_category(f->dst), fc,
                       flow.into(hat_mb), hat_am, hat_mb);
}

KlTwoCell embed_Phi_hat_2cell(const NatTrans& a) {
    const auto src = embed_Phi_hat(a.target);
    const auto tgt = embed_Phi_hat(a.source);
    const Comonoid& c = *a.source->src->C;
    const std::size_t b = a.alpha.rows();
    Flow flow(identity_on(c.dim(), c.field()), {c.dim()});
    flow.apply(0, c.delta, {c.dim(), c.dim()}).apply(0, a.alpha);
    flow.apply_span(0, 2, Matrix::swap(b, c.dim(), c.field()), {c.dim(), b});
    return KlTwoCell{"Phi^(" + a.name + ")", src, tgt, flow.into(tgt->mb)};
}

KlOneCellPtr embed_Psi(const CofunctorPtr& f) {
    const InternalCategory& b = *f->dst;
    Flow flow(f->lift);
    flow.apply(0, f->on_morphisms()).apply(0, b.A.lambda, {b.C->dim(), b.A.dim()});
    const Space mb = cotensor_space({&f->fD, &b.A});
    return make_kl_onecell("Psi(" + f->name + ")", f->src, f->dst, f->fD, flow.into(mb));
}

KlTwoCell embed_Psi_2cell(const Cotrans& a) {
    const auto src = embed_Psi(a.source);
    const auto tgt = embed_Psi(a.target);
    const InternalCategory& b = *a.source->dst;
    const std::size_t d = b.C->dim();
    Flow flow(identity_on(d, b.field()), {d});
    flow.apply(0, a.alpha).apply(0, b.A.lambda, {d, b.A.dim()});
    return KlTwoCell{"Psi(" + a.name + ")", src, tgt, flow.into(tgt->mb)};
}

Matrix psi_comparison(const Cofunctor& f, const Cofunctor& h) {
    const Comonoid& e = *h.dst->C;
    const Matrix lifted = tensor(h.f0, identity_on(e.dim(), e.field())) * e.delta;
    return cotensor(f.fD, h.fD).space.coords(lifted);
}

}  // namespace icat
