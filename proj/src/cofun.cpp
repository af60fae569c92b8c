#include "icat/cofun.hpp"

#include "icat/linalg.hpp"

namespace icat {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw Error(ErrorKind::ShapeMismatch, what + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                                  ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

// B with left coaction pulled back along f0 to C.
Bicomodule pulled_morphisms(const Cofunctor& f) {
    const Bicomodule& b = f.dst->A;
    Bicomodule r = b;
    r.left = f.src->C;
    r.lambda = tensor(f.f0, Matrix::identity(b.dim(), b.field())) * b.lambda;
    return r;
}

void check_same_ends(const Cofunctor& f, const Cofunctor& g, const std::string& where) {
    if (!same_category(*f.src, *g.src) || !same_category(*f.dst, *g.dst))
        throw Error(ErrorKind::DomainMismatch, where + ": cofunctors with different ends");
}

std::pair<Matrix, Matrix> conaturality_sides(const Cofunctor& f, const Cofunctor& g, const Matrix& alpha) {
    const InternalCategory& b = *f.dst;
    const std::size_t d = b.C->dim();
    Flow lhs(f.lift), rhs(f.lift);
    lhs.apply(1, alpha).apply(1, b.A.lambda, {d, b.A.dim()}).apply(0, g.on_morphisms()).apply(0, b.m());
    rhs.apply(0, f.on_morphisms()).apply(0, b.A.lambda, {d, b.A.dim()}).apply(0, alpha).apply(0, b.m());
    return {lhs.vectors(), rhs.vectors()};
}

// (g0 (x) B) l_B alpha - (f0 (x) alpha) Delta_D
Matrix pulled_colinearity_defect(const Cofunctor& f, const Cofunctor& g, const Matrix& alpha) {
    const InternalCategory& b = *f.dst;
    const Matrix idb = Matrix::identity(b.A.dim(), b.field());
    return tensor(g.f0, idb) * b.A.lambda * alpha - tensor(f.f0, alpha) * b.C->delta;
}

}  // namespace

Bicomodule pulled_back(const Matrix& f0, const ComonoidPtr& c, const ComonoidPtr& d) {
    Bicomodule r = regular(d);
    r.name = d->name + "^f";
    r.left = c;
    r.lambda = tensor(f0, Matrix::identity(d->dim(), d->field())) * d->delta;
    return r;
}

CofunctorPtr make_cofunctor(std::string name, CategoryPtr src, CategoryPtr dst, Matrix f0, Matrix f1) {
    require_shape(f0, src->C->dim(), dst->C->dim(), "cofunctor object map");
    Bicomodule fd = pulled_back(f0, src->C, dst->C);
    Space lift = cotensor_space({&src->A, &fd});
    require_shape(f1, dst->A.dim(), lift.dim(), "cofunctor morphism map");
    return std::make_shared<const Cofunctor>(Cofunctor{std::move(name), std::move(src), std::move(dst), std::move(f0),
                                                       std::move(f1), std::move(fd), std::move(lift)});
}

CofunctorPtr identity_cofunctor(const CategoryPtr& c) {
    const Matrix id = Matrix::identity(c->C->dim(), c->field());
    Bicomodule fd = pulled_back(id, c->C, c->C);
    Flow flow(cotensor_space({&c->A, &fd}));
    flow.drop(1, c->C->counit);
    return make_cofunctor("id", c, c, id, flow.vectors());
}

CofunctorPtr induced_cofunctor(std::string name, CategoryPtr src, CategoryPtr dst, Matrix f0) {
    Bicomodule fd = pulled_back(f0, src->C, dst->C);
    Flow flow(cotensor_space({&src->A, &fd}));
    flow.drop(0, src->C->counit);
    if (flow.vectors().rows() != dst->A.dim())
        throw Error(ErrorKind::ShapeMismatch, "induced cofunctor needs B = D");
    return make_cofunctor(std::move(name), std::move(src), std::move(dst), std::move(f0), flow.vectors());
}

bool same_cofunctor(const Cofunctor& a, const Cofunctor& b) {
    return same_category(*a.src, *b.src) && same_category(*a.dst, *b.dst) && a.f0 == b.f0 && a.f1 == b.f1;
}

Report verify_cofunctor(const Cofunctor& f) {
    const InternalCategory& a = *f.src;
    const InternalCategory& b = *f.dst;
    Report r("cofunctor " + f.name);
    r.merge(verify_comonoid_map(f.f0, *b.C, *a.C), "objects");
    if (!r.ok()) return r;
    const Cotensor dom = cotensor(a.A, f.fD);
    check_bicolinear(r, "morphisms", f.f1, dom.result, pulled_morphisms(f));

    const Space triple = cotensor_space({&a.A, &a.A, &f.fD});
    const std::size_t d = b.C->dim();
    r.equal_lazy(
        "multiplicative", "m_B (f1 [] B)(A [] l_B)(A [] f1) = f1 (m_A [] D)",
        [&] {
            Flow lhs(triple), rhs(triple);
            lhs.apply(1, f.on_morphisms()).apply(1, b.A.lambda, {d, b.A.dim()}).apply(0, f.on_morphisms());
            lhs.apply(0, b.m());
            rhs.apply(0, a.m()).apply(0, f.on_morphisms());
            return std::pair{lhs.vectors(), rhs.vectors()};
        },
        &triple.incl);
    const Matrix id = Matrix::identity(d, b.field());
    r.equal_lazy(
        "unital", "f1 (u_A f0 [] D) Delta_D = u_B",
        [&] {
            Flow flow(id, {d});
            flow.apply(0, b.C->delta, {d, d}).apply(0, a.unit * f.f0).apply(0, f.on_morphisms());
            return std::pair{flow.vectors(), b.unit};
        },
        &id);
    return r;
}

CofunctorPtr compose_cofunctors(const CofunctorPtr& h, const CofunctorPtr& f) {
    if (!same_category(*f->dst, *h->src))
        throw Error(ErrorKind::DomainMismatch, "compose_cofunctors: middle categories differ");
    const Matrix f0 = f->f0 * h->f0;
    const ComonoidPtr& e = h->dst->C;
    Bicomodule fd = pulled_back(f0, f->src->C, e);
    Flow flow(cotensor_space({&f->src->A, &fd}));
    flow.apply(1, e->delta, {e->dim(), e->dim()}).apply(1, h->f0);
    flow.apply(0, f->on_morphisms()).apply(0, h->on_morphisms());
    return make_cofunctor(h->name + "o" + f->name, f->src, h->dst, f0, flow.vectors());
}

Report verify_cotrans(const Cotrans& a) {
    const Cofunctor& f = *a.source;
    const Cofunctor& g = *a.target;
    check_same_ends(f, g, "cotransformation");
    const InternalCategory& b = *f.dst;
    require_shape(a.alpha, b.A.dim(), b.C->dim(), "cotransformation");
    Report r("cotransformation " + a.name);
    check_bicolinear(r, "component", a.alpha, regular(b.C), b.A);
    const Matrix id = Matrix::identity(b.C->dim(), b.field());
    const Matrix defect = pulled_colinearity_defect(f, g, a.alpha);
    r.equal("component pulled colinear", "(g0 (x) B) l_B a = (f0 (x) a) Delta_D", defect,
            Matrix(defect.rows(), defect.cols(), b.field()), &id);
    r.equal_lazy(
        "co-naturality", "m_B (g1 [] B)(A [] l_B)(A [] a) = m_B (a [] B) l_B f1",
        [&] { return conaturality_sides(f, g, a.alpha); }, &f.lift.incl);
    return r;
}

Cotrans identity_cotrans(const CofunctorPtr& f) { return Cotrans{"1_" + f->name, f, f, f->dst->unit}; }

Cotrans co_vertical(const Cotrans& beta, const Cotrans& alpha) {
    if (!same_cofunctor(*beta.source, *alpha.target))
        throw Error(ErrorKind::DomainMismatch, "co_vertical: " + beta.name + " does not start where " + alpha.name +
                                                   " ends");
    const InternalCategory& b = *alpha.source->dst;
    const std::size_t d = b.C->dim();
    Flow flow(Matrix::identity(d, b.field()), {d});
    flow.apply(0, alpha.alpha).apply(0, b.A.lambda, {d, b.A.dim()}).apply(0, beta.alpha).apply(0, b.m());
    return Cotrans{beta.name + "*" + alpha.name, alpha.source, beta.target, flow.vectors()};
}

Cotrans co_horizontal(const Cotrans& beta, const Cotrans& alpha) {
    const Cofunctor& f = *alpha.source;
    const Cofunctor& h = *beta.source;
    const Cofunctor& k = *beta.target;
    if (!same_category(*f.dst, *h.src)) throw Error(ErrorKind::DomainMismatch, "co_horizontal: middle categories differ");
    const InternalCategory& b2 = *h.dst;
    const std::size_t e = b2.C->dim();
    Flow flow(Matrix::identity(e, b2.field()), {e});
    flow.apply(0, b2.C->delta, {e, e}).apply(0, h.f0).apply(0, alpha.alpha).apply(1, beta.alpha);
    flow.apply(1, b2.A.lambda, {e, b2.A.dim()}).apply(0, k.on_morphisms()).apply(0, b2.m());
    return Cotrans{beta.name + "." + alpha.name, compose_cofunctors(beta.source, alpha.source),
                   compose_cofunctors(beta.target, alpha.target), flow.vectors()};
}

std::vector<Matrix> cotrans_basis(const CofunctorPtr& f, const CofunctorPtr& g) {
    check_same_ends(*f, *g, "cotrans_basis");
    const InternalCategory& b = *f->dst;
    const auto colinear = restrict_basis(bicolinear_basis(regular(b.C), b.A), [&](const Matrix& x) {
        return pulled_colinearity_defect(*f, *g, x);
    });
    return restrict_basis(colinear, [&](const Matrix& x) {
        auto [lhs, rhs] = conaturality_sides(*f, *g, x);
        return Matrix(lhs - rhs);
    });
}

}  // namespace icat
