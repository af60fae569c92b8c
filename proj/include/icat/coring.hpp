#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "icat/intcat.hpp"
#include "icat/kleisli.hpp"

namespace icat {

/// mult is dim x dim^2 on a (x) b at index a * dim + b, unit is dim x 1.
struct Algebra {
    std::string name;
    Matrix mult;
    Matrix unit;

    std::size_t dim() const { return unit.rows(); }
    Field field() const { return unit.field(); }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(Matrix mult, Matrix unit, std::string name = {});
/// The ground field as a one-dimensional algebra.
AlgebraPtr ground_algebra(Field f = {});
Report verify_algebra(const Algebra& a);
/// x |-> ax and x |-> xa.
Matrix left_mult(const Algebra& a, const Matrix& elem);
Matrix right_mult(const Algebra& a, const Matrix& elem);
/// Some x with ax = 1 = xa; throws NotInvertible.
Matrix invert_element(const Algebra& a, const Matrix& elem);

/// lact: dim x (dim left * dim), ract: dim x (dim * dim right).
struct Bimodule {
    std::string name;
    AlgebraPtr left;
    AlgebraPtr right;
    Matrix lact;
    Matrix ract;

    std::size_t dim() const { return lact.rows(); }
    Field field() const { return lact.field(); }
};

/// A as an A-A-bimodule.
Bimodule regular(const AlgebraPtr& a);
/// Actions restricted along algebra maps f: b -> left and g: b' -> right.
Bimodule restrict_scalars(const Bimodule& m, const AlgebraPtr& b, const Matrix& f, const AlgebraPtr& b2,
                          const Matrix& g);
Report verify_bimodule(const Bimodule& m);
bool is_bimodule_map(const Matrix& f, const Bimodule& m, const Bimodule& n);

/// M1 (x)_A ... (x)_A Mk as the cokernel of the balancing relations inside
/// M1 (x) ... (x) Mk. proj is the canonical cokernel projection, section a
/// fixed right inverse of it.
struct TensorOver {
    std::vector<std::size_t> factors;
    Matrix proj;
    Matrix section;
    Bimodule result;

    std::size_t dim() const { return proj.rows(); }
};

/// Throws ShapeMismatch unless each right algebra matches the next left algebra.
TensorOver tensor_over(const std::vector<Bimodule>& chain);
TensorOver tensor_over(const Bimodule& m, const Bimodule& n);
/// f (x)_A g between two tensor products of the same length-two shape.
Matrix tensor_map(const Matrix& f, const Matrix& g, const TensorOver& src, const TensorOver& dst);

/// M^B: basis (columns) of {m | bm = mb for all b} for a B-B-bimodule.
Matrix centralizer(const Bimodule& m);

/// delta: C -> C (x)_A C on the quotient basis of `cc`, counit: C -> A.
struct Coring {
    std::string name;
    AlgebraPtr base;
    Bimodule carrier;
    Matrix delta;
    Matrix counit;
    TensorOver cc;

    std::size_t dim() const { return carrier.dim(); }
    Field field() const { return carrier.field(); }
};

Coring make_coring(std::string name, Bimodule carrier, Matrix delta, Matrix counit);
/// Same carrier, new structure maps.
Coring with_structure(const Coring& c, Matrix delta, Matrix counit, std::string name = {});
Report verify_coring(const Coring& c);
/// Bimodule map with Delta f = (f (x)_A f) Delta and e f = e.
Report verify_coring_map(const Matrix& f, const Coring& src, const Coring& dst);
bool same_coring(const Coring& a, const Coring& b);
/// A as an A-coring: Delta(a) = a (x)_A 1, e = id.
Coring trivial_coring(const AlgebraPtr& a);
/// Delta^2 lifted to C (x) C (x) C.
Matrix lifted_double_comult(const Coring& c);

/// Finite-dimensional duality with the generic engine.
ComonoidPtr dualize(const Algebra& a);
AlgebraPtr undualize(const Comonoid& c);
Bicomodule dualize(const Bimodule& m, const ComonoidPtr& left, const ComonoidPtr& right);
Bimodule undualize(const Bicomodule& m, const AlgebraPtr& left, const AlgebraPtr& right);
CategoryPtr dualize(const Coring& c);
Coring undualize(const InternalCategory& ic);

/// The Sweedler coring A (x)_B A of an algebra map incl: B -> A.
struct Sweedler {
    AlgebraPtr a;
    AlgebraPtr b;
    Matrix incl;
    Bimodule ab;    // A as a B-B-bimodule
    TensorOver q;   // A (x)_B A
    TensorOver q3;  // A (x)_B A (x)_B A
    Coring coring;

    /// Class of a (x) a'.
    Matrix pure(const Matrix& a1, const Matrix& a2) const;
    /// Lift of an element of A (x)_B A to A (x) A.
    Matrix lift(const Matrix& x) const { return q.section * x; }
};

using SweedlerPtr = std::shared_ptr<const Sweedler>;

SweedlerPtr sweedler_coring(const AlgebraPtr& a, const AlgebraPtr& b, const Matrix& incl);

/// t in (A (x)_B A)^B, m, u in A^B as coordinate vectors.
struct SweedlerMonadData {
    SweedlerPtr sw;
    Matrix t;
    Matrix m;
    Matrix u;
};

/// sum_{i,j} s_i s_j (x) t_j t_i.
Matrix sweedler_square(const Sweedler& sw, const Matrix& t);
/// Labels "(a)" ... "(e)"; throws NotCentral when t, m or u leave the centralizers.
Report verify_sweedler_monad_data(const SweedlerMonadData& d);
/// (u (x) u^-1, u^-1, u); throws NotCentral or NotInvertible.
SweedlerMonadData unit_monad_data(const SweedlerPtr& sw, const Matrix& u);
/// Delta_t(a (x) a') = amt (x) a', e_t(a (x) a') = aua'.
Coring sweedler_kleisli_coring(const SweedlerMonadData& d);
/// The engine monad on dualize(sw.coring) with t0 = id, t1(a (x) a') = ata',
/// mu(a (x) a') = ama', eta(a (x) a') = aua'.
Monad dualize_monad(const SweedlerMonadData& d);
/// undualize(kleisli_object(dualize_monad(d))) moved onto the Sweedler
/// carrier by the canonical comparison C [] A = A.
Coring kleisli_coring_via_engine(const SweedlerMonadData& d);
bool is_grouplike(const Matrix& x, const Coring& c);
/// mt as a coordinate vector.
Matrix sweedler_mt(const SweedlerMonadData& d);

/// l1: a (x) a' |-> amta' (Sweedler to Kleisli), r1: a (x) a' |-> au (x) a'.
struct SweedlerAdjunction {
    Matrix l1;
    Matrix r1;
};
SweedlerAdjunction sweedler_kleisli_adjunction(const SweedlerMonadData& d);

/// l: D -> C and r: C -> D coring maps, theta: D^l -> ^rC a bicomodule isomorphism.
struct TwistingDatum {
    Coring c;
    Coring d;
    Matrix l;
    Matrix r;
    Matrix theta;
};

Report verify_twisting_datum(const TwistingDatum& td);
TwistingDatum identity_twisting_datum(const Coring& c);
/// C = Sweedler, D = Kleisli coring, l = r1, r = l1, theta = id.
TwistingDatum sweedler_twisting_datum(const SweedlerMonadData& d);
/// (C_theta, D^theta).
std::pair<Coring, Coring> twist_corings(const TwistingDatum& td);
/// (C_theta <-> C) with rbar = theta r, lbar = (e_D theta^-1 (x)_A C) Delta_C, thetabar = id.
TwistingDatum kleisli_twisting_datum(const TwistingDatum& td);
/// C_thetabar = C_theta and (C_theta)^thetabar = C, entrywise.
Report twisting_termination(const TwistingDatum& td);

/// f * g = m (f (x)_A g) Delta on bimodule maps C -> A.
Matrix convolve(const Coring& c, const Matrix& f, const Matrix& g);
/// Throws NotConvolutionInvertible.
Matrix convolution_inverse(const Coring& c, const Matrix& f);

struct CoringIso {
    Matrix l_inv;
    Report report;
};
/// l^-1 = ubar * r * u with u = e_D theta^-1; throws NotConvolutionInvertible.
CoringIso lemma51_iso(const TwistingDatum& td);

/// H a Hopf algebra, A a right H-comodule algebra, B = A^coH (computed).
struct HopfGaloisInstance {
    AlgebraPtr h;
    Matrix delta_h;   // (dim H)^2 x dim H
    Matrix counit_h;  // 1 x dim H
    Matrix antipode;
    AlgebraPtr a;
    Matrix rho;  // (dim A * dim H) x dim A
    AlgebraPtr b;
    Matrix incl;
    SweedlerPtr sw;
};

HopfGaloisInstance make_hopf_galois(AlgebraPtr h, Matrix delta_h, Matrix counit_h, Matrix antipode, AlgebraPtr a,
                                    Matrix rho);
Report verify_hopf_galois(const HopfGaloisInstance& hg);
/// a' (x)_B a |-> a' rho(a), (dim A * dim H) x dim(A (x)_B A).
Matrix canonical_map(const HopfGaloisInstance& hg);
/// h |-> can^-1(1 (x) h); throws NotGalois.
Matrix translation_map(const HopfGaloisInstance& hg);
/// a < h = sum h(1) a h(2) with tau(h) = sum h(1) (x)_B h(2); throws NotGalois.
Matrix mu_action(const HopfGaloisInstance& hg, const Matrix& a, const Matrix& h);
bool is_grouplike(const HopfGaloisInstance& hg, const Matrix& x);
/// Grouplikes of H with coordinates in {-1, 0, 1}.
std::vector<Matrix> grouplikes(const HopfGaloisInstance& hg);

struct GrouplikeMonadCheck {
    SweedlerMonadData data;
    Report direct;  // verify_sweedler_monad_data
    Report report;  // equivalences between coaction/HG forms and direct verdicts
    /// m^2 = m(m < h) for every grouplike h.
    std::vector<std::pair<Matrix, bool>> d_at_grouplikes;
};

/// t = tau(x); throws NotGrouplike or NotGalois.
GrouplikeMonadCheck grouplike_monad_data(const HopfGaloisInstance& hg, const Matrix& x, const Matrix& m,
                                         const Matrix& u);

}  // namespace icat
