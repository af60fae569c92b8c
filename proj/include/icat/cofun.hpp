#pragma once

#include <memory>
#include <string>
#include <vector>

#include "icat/intcat.hpp"

namespace icat {

/// A cofunctor (C, A) -> (D, B): f0: D -> C and f1: A [] fD -> B, where fD is
/// D with left C-coaction (f0 (x) D) Delta_D. `lift` is the canonical A [] fD.
struct Cofunctor {
    std::string name;
    CategoryPtr src;
    CategoryPtr dst;
    Matrix f0;
    Matrix f1;
    Bicomodule fD;
    Space lift;

    LinMap on_morphisms() const { return {f1, lift, dst->morphisms()}; }
};

using CofunctorPtr = std::shared_ptr<const Cofunctor>;

/// D as a C-D-bicomodule through f0: D -> C (no comonoid-map check).
Bicomodule pulled_back(const Matrix& f0, const ComonoidPtr& c, const ComonoidPtr& d);

CofunctorPtr make_cofunctor(std::string name, CategoryPtr src, CategoryPtr dst, Matrix f0, Matrix f1);
CofunctorPtr identity_cofunctor(const CategoryPtr& c);
/// f1 = (e (x) D) on A [] fD, available when A = C (trivial source).
CofunctorPtr induced_cofunctor(std::string name, CategoryPtr src, CategoryPtr dst, Matrix f0);
bool same_cofunctor(const Cofunctor& a, const Cofunctor& b);

Report verify_cofunctor(const Cofunctor& f);
/// h o f: objects f0 h0, morphisms h1 (f1 [] E) (A [] (h0 (x) E) Delta_E).
CofunctorPtr compose_cofunctors(const CofunctorPtr& h, const CofunctorPtr& f);

/// alpha: D -> B from fD to gB.
struct Cotrans {
    std::string name;
    CofunctorPtr source;
    CofunctorPtr target;
    Matrix alpha;
};

Report verify_cotrans(const Cotrans& a);
/// u_B as the identity cotransformation of f.
Cotrans identity_cotrans(const CofunctorPtr& f);
/// beta *_ alpha = m_B (beta (x) B) l_B alpha.
Cotrans co_vertical(const Cotrans& beta, const Cotrans& alpha);
Cotrans co_horizontal(const Cotrans& beta, const Cotrans& alpha);
/// Basis of all cotransformations f => g.
std::vector<Matrix> cotrans_basis(const CofunctorPtr& f, const CofunctorPtr& g);

}  // namespace icat
