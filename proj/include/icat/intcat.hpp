#pragma once

#include <memory>
#include <string>

#include "icat/bicomod.hpp"

namespace icat {

/// A monoid (A, m, u) in C-bicomodules. `mult` acts on the canonical basis of
/// A [] A, which is stored in `pairs`.
struct InternalCategory {
    std::string name;
    ComonoidPtr C;
    Bicomodule A;
    Matrix mult;
    Matrix unit;
    Space pairs;

    Field field() const { return A.field(); }
    Space morphisms() const { return Space::whole({A.dim()}, field()); }
    LinMap m() const { return {mult, pairs, morphisms()}; }
};

using CategoryPtr = std::shared_ptr<const InternalCategory>;

/// Checks shapes and computes the canonical A [] A.
CategoryPtr make_category(std::string name, ComonoidPtr c, Bicomodule a, Matrix mult, Matrix unit);
/// (C, C, e (x) C, id): the internal category with only identity morphisms.
CategoryPtr trivial_category(const ComonoidPtr& c, std::string name = {});
/// An ordinary algebra (mult: d x d^2, unit: d x 1) over the unit comonoid.
CategoryPtr algebra_category(const Matrix& mult, const Matrix& unit, std::string name = {});

bool same_category(const InternalCategory& a, const InternalCategory& b);

Report verify_internal_category(const InternalCategory& ic);

/// n-fold composite multiplication on the canonical basis of A^{[] (n+1)},
/// nested to the left. iterate_mult(ic, 1) = m.
Matrix iterate_mult(const InternalCategory& ic, std::size_t n);
Matrix iterate_mult_right(const InternalCategory& ic, std::size_t n);

struct InternalFunctor {
    std::string name;
    CategoryPtr src;
    CategoryPtr dst;
    Matrix f0;  // C -> D
    Matrix f1;  // A -> B

    LinMap on_morphisms() const { return {f1, src->morphisms(), dst->morphisms()}; }
};

using FunctorPtr = std::shared_ptr<const InternalFunctor>;

FunctorPtr make_functor(std::string name, CategoryPtr src, CategoryPtr dst, Matrix f0, Matrix f1);
FunctorPtr identity_functor(const CategoryPtr& c);
bool same_functor(const InternalFunctor& a, const InternalFunctor& b);

/// A with coactions pushed along f0 on both sides.
Bicomodule induced_morphisms(const InternalFunctor& f);

Report verify_functor(const InternalFunctor& f);
FunctorPtr compose_functors(const FunctorPtr& g, const FunctorPtr& f);

/// alpha: C -> B, a D-bicomodule map from gCf to B.
struct NatTrans {
    std::string name;
    FunctorPtr source;
    FunctorPtr target;
    Matrix alpha;
};

Report verify_nat(const NatTrans& a);
NatTrans identity_nat(const FunctorPtr& f);
/// Basis of all natural transformations f => g.
std::vector<Matrix> natural_basis(const FunctorPtr& f, const FunctorPtr& g);

/// beta * alpha = m_B (beta (x) alpha) Delta_C on raw matrices.
Matrix convolve(const InternalCategory& b, const Comonoid& c, const Matrix& beta, const Matrix& alpha);

NatTrans vertical_compose(const NatTrans& beta, const NatTrans& alpha);
/// beta f0 for beta: g => h and f composable before g.
NatTrans whisker_right(const NatTrans& beta, const FunctorPtr& f);
/// h1 alpha for alpha: f => g and h composable after f.
NatTrans whisker_left(const FunctorPtr& h, const NatTrans& alpha);
/// Godement product; throws GodementMismatch when the two expansions differ.
NatTrans horizontal_compose(const NatTrans& beta, const NatTrans& alpha);

}  // namespace icat
