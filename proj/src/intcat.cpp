#include "icat/intcat.hpp"

#include "icat/linalg.hpp"

namespace icat {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw Error(ErrorKind::ShapeMismatch, what + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                                  ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

Matrix identity_of(std::size_t n, Field f) { return Matrix::identity(n, f); }

// C as a D-bicomodule with left coaction pushed along g0 and right along f0.
Bicomodule component_bicomodule(const InternalFunctor& f, const InternalFunctor& g) {
    const Bicomodule c = regular(f.src->C);
    Bicomodule r = c;
    r.left = f.dst->C;
    r.right = f.dst->C;
    r.lambda = tensor(g.f0, identity_of(c.dim(), c.field())) * c.lambda;
    r.rho = tensor(identity_of(c.dim(), c.field()), f.f0) * c.rho;
    return r;
}

std::pair<Matrix, Matrix> naturality_sides(const InternalFunctor& f, const InternalFunctor& g, const Matrix& alpha) {
    const InternalCategory& src = *f.src;
    const InternalCategory& dst = *f.dst;
    const std::size_t n = src.A.dim();
    const std::size_t k = src.C->dim();
    const Matrix id = identity_of(n, src.field());
    Flow lhs(id, {n}), rhs(id, {n});
    lhs.apply(0, src.A.rho, {n, k}).apply(0, g.f1).apply(1, alpha).apply(0, dst.m());
    rhs.apply(0, src.A.lambda, {k, n}).apply(0, alpha).apply(1, f.f1).apply(0, dst.m());
    return {lhs.vectors(), rhs.vectors()};
}

}  // namespace

CategoryPtr make_category(std::string name, ComonoidPtr c, Bicomodule a, Matrix mult, Matrix unit) {
    require_same_comonoid(*c, *a.left, "internal category");
    require_same_comonoid(*c, *a.right, "internal category");
    Space pairs = cotensor_space({&a, &a});
    require_shape(mult, a.dim(), pairs.dim(), "multiplication");
    require_shape(unit, a.dim(), c->dim(), "unit");
    return std::make_shared<const InternalCategory>(
        InternalCategory{std::move(name), std::move(c), std::move(a), std::move(mult), std::move(unit), std::move(pairs)});
}

CategoryPtr trivial_category(const ComonoidPtr& c, std::string name) {
    Bicomodule a = regular(c);
    Space pairs = cotensor_space({&a, &a});
    Flow flow(pairs);
    flow.drop(0, c->counit);
    return make_category(name.empty() ? c->name : std::move(name), c, a, flow.vectors(),
                         identity_of(c->dim(), c->field()));
}

CategoryPtr algebra_category(const Matrix& mult, const Matrix& unit, std::string name) {
    const Field f = mult.field();
    const std::size_t d = unit.rows();
    ComonoidPtr k = unit_comonoid(f);
    Bicomodule a{name, k, k, identity_of(d, f), identity_of(d, f)};
    return make_category(std::move(name), k, std::move(a), mult, unit);
}

bool same_category(const InternalCategory& a, const InternalCategory& b) {
    if (&a == &b) return true;
    return same_comonoid(*a.C, *b.C) && a.A.lambda == b.A.lambda && a.A.rho == b.A.rho && a.mult == b.mult &&
           a.unit == b.unit;
}

Report verify_internal_category(const InternalCategory& ic) {
    const std::size_t n = ic.A.dim();
    require_shape(ic.mult, n, ic.pairs.dim(), "multiplication");
    require_shape(ic.unit, n, ic.C->dim(), "unit");
    Report r("internal category " + ic.name);
    const Cotensor aa = cotensor(ic.A, ic.A);
    check_bicolinear(r, "multiplication", ic.mult, aa.result, ic.A);
    check_bicolinear(r, "unit", ic.unit, regular(ic.C), ic.A);

    const Space triple = cotensor_space({&ic.A, &ic.A, &ic.A});
    r.equal_lazy(
        "associativity", "m (m [] A) = m (A [] m)",
        [&] {
            Flow lhs(triple), rhs(triple);
            lhs.apply(0, ic.m()).apply(0, ic.m());
            rhs.apply(1, ic.m()).apply(0, ic.m());
            return std::pair{lhs.vectors(), rhs.vectors()};
        },
        &triple.incl);
    const Matrix id = identity_of(n, ic.field());
    const std::size_t c = ic.C->dim();
    r.equal_lazy(
        "left unit", "m (u [] A) l = A",
        [&] {
            Flow f(id, {n});
            f.apply(0, ic.A.lambda, {c, n}).apply(0, ic.unit).apply(0, ic.m());
            return std::pair{f.vectors(), id};
        },
        &id);
    r.equal_lazy(
        "right unit", "m (A [] u) r = A",
        [&] {
            Flow f(id, {n});
            f.apply(0, ic.A.rho, {n, c}).apply(1, ic.unit).apply(0, ic.m());
            return std::pair{f.vectors(), id};
        },
        &id);
    return r;
}

Matrix iterate_mult(const InternalCategory& ic, std::size_t n) {
    std::vector<const Bicomodule*> chain(n + 1, &ic.A);
    Flow f(cotensor_space(chain));
    for (std::size_t k = 0; k < n; ++k) f.apply(0, ic.m());
    return f.vectors();
}

Matrix iterate_mult_right(const InternalCategory& ic, std::size_t n) {
    std::vector<const Bicomodule*> chain(n + 1, &ic.A);
    Flow f(cotensor_space(chain));
    for (std::size_t k = n; k-- > 0;) f.apply(k, ic.m());
    return f.vectors();
}

FunctorPtr make_functor(std::string name, CategoryPtr src, CategoryPtr dst, Matrix f0, Matrix f1) {
    require_shape(f0, dst->C->dim(), src->C->dim(), "object map");
    require_shape(f1, dst->A.dim(), src->A.dim(), "morphism map");
    return std::make_shared<const InternalFunctor>(
        InternalFunctor{std::move(name), std::move(src), std::move(dst), std::move(f0), std::move(f1)});
}

FunctorPtr identity_functor(const CategoryPtr& c) {
    return make_functor("id", c, c, identity_of(c->C->dim(), c->field()), identity_of(c->A.dim(), c->field()));
}

bool same_functor(const InternalFunctor& a, const InternalFunctor& b) {
    return same_category(*a.src, *b.src) && same_category(*a.dst, *b.dst) && a.f0 == b.f0 && a.f1 == b.f1;
}

Bicomodule induced_morphisms(const InternalFunctor& f) {
    const Bicomodule& a = f.src->A;
    Bicomodule r = a;
    r.left = f.dst->C;
    r.right = f.dst->C;
    r.lambda = tensor(f.f0, identity_of(a.dim(), a.field())) * a.lambda;
    r.rho = tensor(identity_of(a.dim(), a.field()), f.f0) * a.rho;
    return r;
}

Report verify_functor(const InternalFunctor& f) {
    const InternalCategory& a = *f.src;
    const InternalCategory& b = *f.dst;
    require_shape(f.f0, b.C->dim(), a.C->dim(), "object map");
    require_shape(f.f1, b.A.dim(), a.A.dim(), "morphism map");
    Report r("functor " + f.name);
    r.merge(verify_comonoid_map(f.f0, *a.C, *b.C), "objects");
    check_bicolinear(r, "morphisms", f.f1, induced_morphisms(f), b.A);
    r.equal_lazy(
        "multiplicative", "m_B (f1 [] f1) = f1 m_A",
        [&] {
            Flow lhs(a.pairs), rhs(a.pairs);
            lhs.apply(0, f.f1).apply(1, f.f1).apply(0, b.m());
            rhs.apply(0, a.m()).apply(0, f.f1);
            return std::pair{lhs.vectors(), rhs.vectors()};
        },
        &a.pairs.incl);
    const Matrix id = identity_of(a.C->dim(), a.field());
    r.equal("unital", "f1 u_A = u_B f0", f.f1 * a.unit, b.unit * f.f0, &id);
    return r;
}

FunctorPtr compose_functors(const FunctorPtr& g, const FunctorPtr& f) {
    if (!same_category(*f->dst, *g->src)) throw Error(ErrorKind::DomainMismatch, "compose_functors: middle categories differ");
    return make_functor(g->name + "." + f->name, f->src, g->dst, g->f0 * f->f0, g->f1 * f->f1);
}

Report verify_nat(const NatTrans& a) {
    const InternalFunctor& f = *a.source;
    const InternalFunctor& g = *a.target;
    if (!same_category(*f.src, *g.src) || !same_category(*f.dst, *g.dst))
        throw Error(ErrorKind::DomainMismatch, "natural transformation between functors with different ends");
    const InternalCategory& src = *f.src;
    const InternalCategory& dst = *f.dst;
    require_shape(a.alpha, dst.A.dim(), src.C->dim(), "natural transformation");
    Report r("natural transformation " + a.name);
    check_bicolinear(r, "component", a.alpha, component_bicomodule(f, g), dst.A);
    const Matrix id = identity_of(src.A.dim(), src.field());
    r.equal_lazy(
        "naturality", "m_B (g1 [] a) r_A = m_B (a [] f1) l_A",
        [&] {
            auto [lhs, rhs] = naturality_sides(f, g, a.alpha);
            return std::pair{lhs, rhs};
        },
        &id);
    return r;
}

std::vector<Matrix> natural_basis(const FunctorPtr& f, const FunctorPtr& g) {
    return restrict_basis(bicolinear_basis(component_bicomodule(*f, *g), f->dst->A), [&](const Matrix& x) {
        auto [lhs, rhs] = naturality_sides(*f, *g, x);
        return Matrix(lhs - rhs);
    });
}

NatTrans identity_nat(const FunctorPtr& f) {
    const Matrix a = f->f1 * f->src->unit;
    if (!(a == f->dst->unit * f->f0))
        throw Error(ErrorKind::IdentityMismatch, "f1 u_A differs from u_B f0 for " + f->name);
    return NatTrans{"1_" + f->name, f, f, a};
}

Matrix convolve(const InternalCategory& b, const Comonoid& c, const Matrix& beta, const Matrix& alpha) {
    const std::size_t k = c.dim();
    Flow flow(identity_of(k, c.field()), {k});
    flow.apply(0, c.delta, {k, k}).apply(0, beta).apply(1, alpha).apply(0, b.m());
    return flow.vectors();
}

NatTrans vertical_compose(const NatTrans& beta, const NatTrans& alpha) {
    if (!same_functor(*beta.source, *alpha.target))
        throw Error(ErrorKind::DomainMismatch, "vertical composite: " + beta.name + " does not start where " +
                                                   alpha.name + " ends");
    const InternalCategory& b = *alpha.source->dst;
    return NatTrans{beta.name + "*" + alpha.name, alpha.source, beta.target,
                    convolve(b, *alpha.source->src->C, beta.alpha, alpha.alpha)};
}

NatTrans whisker_right(const NatTrans& beta, const FunctorPtr& f) {
    return NatTrans{beta.name + "." + f->name, compose_functors(beta.source, f), compose_functors(beta.target, f),
                    beta.alpha * f->f0};
}

NatTrans whisker_left(const FunctorPtr& h, const NatTrans& alpha) {
    return NatTrans{h->name + "." + alpha.name, compose_functors(h, alpha.source), compose_functors(h, alpha.target),
                    h->f1 * alpha.alpha};
}

NatTrans horizontal_compose(const NatTrans& beta, const NatTrans& alpha) {
    if (!same_category(*alpha.source->dst, *beta.source->src))
        throw Error(ErrorKind::DomainMismatch, "horizontal composite: middle categories differ");
    const NatTrans one = vertical_compose(whisker_right(beta, alpha.target), whisker_left(beta.source, alpha));
    const NatTrans two = vertical_compose(whisker_left(beta.target, alpha), whisker_right(beta, alpha.source));
    if (!(one.alpha == two.alpha))
        throw Error(ErrorKind::GodementMismatch, "b g0 * h1 a differs from k1 a * b f0 for " + beta.name + ", " +
                                                     alpha.name);
    return NatTrans{beta.name + "." + alpha.name, one.source, one.target, one.alpha};
}

}  // namespace icat
