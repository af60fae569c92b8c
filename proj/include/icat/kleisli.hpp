#pragma once

#include <optional>
#include <string>

#include "icat/cofun.hpp"
#include "icat/intcat.hpp"
#include "icat/klbicat.hpp"

namespace icat {

/// l: (C, A) -> (D, B) left adjoint to r, with eps: lr => 1 and eta: 1 => rl.
struct Adjunction {
    FunctorPtr l;
    FunctorPtr r;
    NatTrans eps;
    NatTrans eta;
};

/// theta: D^r [] A -> B [] lC on canonical bases.
struct BiNatural {
    Matrix theta;
    std::optional<Matrix> theta_inv;
};

struct Monad {
    FunctorPtr t;
    NatTrans mu;
    NatTrans eta;
};

/// (y, sigma) with sigma: yt => y.
struct TAlgebra {
    FunctorPtr y;
    NatTrans sigma;
};

struct Comonad {
    FunctorPtr g;
    NatTrans delta;
    NatTrans eps;
};

struct Opmonad {
    CofunctorPtr t;
    Cotrans mu;
    Cotrans eta;
};

Report verify_adjunction(const Adjunction& a);
Report verify_monad(const Monad& m);
Report verify_comonad(const Comonad& g);
Report verify_opmonad(const Opmonad& t);
Report verify_talgebra(const Monad& m, const TAlgebra& a);

Adjunction identity_adjunction(const CategoryPtr& c);
Monad identity_monad(const CategoryPtr& c);
Comonad identity_comonad(const CategoryPtr& c);
Opmonad identity_opmonad(const CategoryPtr& c);

/// D^r (D with right coaction along r0) and lC (C with left coaction along l0).
Bicomodule right_hom_carrier(const InternalFunctor& r);
Bicomodule left_hom_carrier(const InternalFunctor& l);

/// theta = (m_B [] lC)(eps [] l1 [] C)(D^r [] rho) with its inverse
/// (D^r [] m_A)(D [] r1 [] eta)(lambda [] lC).
BiNatural adjunction_to_binatural(const Adjunction& a);
/// eps = m_B (B [] l) theta (D [] r) Delta_D, eta = m_A (r [] A) theta^-1 (l [] C) Delta_C.
/// Throws NotInvertible or NotBiNatural.
Adjunction binatural_to_adjunction(const FunctorPtr& l, const FunctorPtr& r, const BiNatural& th);
Report verify_binatural(const BiNatural& th, const InternalFunctor& l, const InternalFunctor& r);

/// (rl, r1 eps l0, eta).
Monad monad_of_adjunction(const Adjunction& a);

/// C^t [] A with u_t = (C [] eta) Delta_C and
/// m_t = (C^t [] m_A^2)(C^t [] mu [] t1 [] A)(Delta_C [] A^t [] A).
CategoryPtr kleisli_object(const Monad& m);
/// The wreath product of (C, A) with a monad (x, mult, unit) in KL.
CategoryPtr wreath_product(const KlOneCellPtr& x, const KlTwoCell& mult, const KlTwoCell& unit);
/// Kleisli object as the wreath product with Phi(t), Phi(mu), Phi(eta).
CategoryPtr kleisli_object_wreath(const Monad& m);
/// Kleisli adjunction l -| r into kleisli_object(m).
Adjunction kleisli_adjunction(const Monad& m);

/// Theta(y, sigma) = (y0, m_B (sigma [] y1)); throws NotTAlgebra.
FunctorPtr theta_correspondence(const Monad& m, const TAlgebra& a);
/// (gl, g1 eps) for g out of the Kleisli object.
TAlgebra theta_inverse(const Monad& m, const FunctorPtr& g);
/// (fy, f1 sigma).
TAlgebra talg_pushforward(const FunctorPtr& f, const TAlgebra& a);

/// A [] gC with u_g = (eps [] C) Delta_C and
/// m_g = (m_A^2 [] gC)(A [] g1 [] delta [] gC)(A [] gA [] Delta_C).
CategoryPtr cokleisli_object(const Comonad& g);
/// For l -| r (unit iota, counit sigma) and a monad on r: the mate comonad on l.
Comonad mate_comonad(const Adjunction& a, const Monad& m);
/// Certifies theta: A_r -> lA as an isomorphism of internal categories;
/// throws NotIsomorphism naming the failing square.
Report compare_kleisli_cokleisli(const Monad& m, const Comonad& g, const BiNatural& th);

/// Checks that kappa: A -> A' is an invertible bicolinear map intertwining
/// the multiplications and units of two categories over the same C.
Report verify_category_iso(const InternalCategory& a, const InternalCategory& b, const Matrix& kappa);

/// tA with unit eta and m^t = m_A^2 (mu [] t1 [] A)(lambda [] lambda).
CategoryPtr opmonad_kleisli(const Opmonad& t);

}  // namespace icat
