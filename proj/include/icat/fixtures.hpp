#pragma once

#include "icat/coring.hpp"
#include "icat/intcat.hpp"
#include "icat/kleisli.hpp"

namespace icat::fixtures {

// F1: the ground field as a comonoid.
ComonoidPtr unit();
// F2: grouplike coalgebra on {x, y}.
ComonoidPtr points();
// F3: the poset 0 <= 1 over F2, morphism basis [id0, id1, f] with f: 0 -> 1.
CategoryPtr poset();
// The idempotent ceiling monad on F3: every object goes to 1.
FunctorPtr ceiling(const CategoryPtr& p);
NatTrans ceiling_mult(const FunctorPtr& t);
NatTrans ceiling_unit(const FunctorPtr& t);
// The floor functor (every object to 0), left adjoint to the ceiling.
FunctorPtr floor(const CategoryPtr& p);
// Trivial internal category on F2.
CategoryPtr points_trivial();
// The swap x <-> y as an endofunctor of the F2 trivial internal category.
FunctorPtr points_swap(const CategoryPtr& c);
// F4: the group algebra Q[Z/2] on basis [1, g], as (mult, unit).
Matrix z2_mult(Field f = {});
Matrix z2_unit(Field f = {});
// Q[Z/2] as an internal category over the unit comonoid.
CategoryPtr z2_algebra(Field f = {});
// On an algebra category: t = id, mu = eta = g (g^2 = 1, g central).
Monad z2_twist_monad(const CategoryPtr& c);
Monad ceiling_monad(const CategoryPtr& p);
// floor -| ceiling on F3 with unit eta and counit x |-> id0, y |-> f.
Adjunction floor_ceiling(const CategoryPtr& p);
// Every monad the suites run over, with a display name.
std::vector<std::pair<std::string, Monad>> monads();
// F4 as an Algebra, basis [1, g].
AlgebraPtr z2(Field f = {});
// F5: the Sweedler coring of Q -> Q[Z/2].
SweedlerPtr sweedler_z2(Field f = {});
// F6: H = A = Q[Z/2] with rho = Delta, so B = Q.
HopfGaloisInstance hopf_galois_z2(Field f = {});
// F7: comatrix coalgebra on e11, e12, e21, e22.
ComonoidPtr comatrix();

}  // namespace icat::fixtures
