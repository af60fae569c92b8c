#pragma once

#include <memory>
#include <string>

#include "icat/cofun.hpp"
#include "icat/intcat.hpp"

namespace icat {

/// A 1-cell (M, phi): (C, A) -> (D, B) of the Kleisli completion of
/// bicomodules. phi maps the canonical basis of A [] M to that of M [] B.
struct KlOneCell {
    std::string name;
    CategoryPtr src;
    CategoryPtr dst;
    Bicomodule m;
    Matrix phi;
    Space am;
    Space mb;

    LinMap action() const { return {phi, am, mb}; }
};

using KlOneCellPtr = std::shared_ptr<const KlOneCell>;

KlOneCellPtr make_kl_onecell(std::string name, CategoryPtr src, CategoryPtr dst, Bicomodule m, Matrix phi);
/// Same categories, carrier structure and phi; names are ignored.
bool same_onecell(const KlOneCell& a, const KlOneCell& b);

/// chi: M -> N [] B, on the canonical basis of N [] B.
struct KlTwoCell {
    std::string name;
    KlOneCellPtr source;
    KlOneCellPtr target;
    Matrix chi;

    LinMap component() const;
};

Report verify_kl_onecell(const KlOneCell& x);
Report verify_kl_twocell(const KlTwoCell& x);

/// Basis of all KL 2-cells x => y.
std::vector<Matrix> kl_twocell_basis(const KlOneCellPtr& x, const KlOneCellPtr& y);

/// (C, canonical A [] C = A = C [] A).
KlOneCellPtr identity_onecell(const CategoryPtr& c);
/// (M [] u_B) rho_M.
KlTwoCell identity_twocell(const KlOneCellPtr& x);

/// (Q [] m_B)(chi2 [] B) chi1.
KlTwoCell kl_vertical(const KlTwoCell& chi2, const KlTwoCell& chi1);
/// y after x: (M [] M', (M [] phi')(phi [] M')) on the canonical M [] M'.
KlOneCellPtr kl_compose_onecells(const KlOneCellPtr& y, const KlOneCellPtr& x);
/// (N [] N' [] m_B')(N [] chi2 [] B')(N [] phi')(chi1 [] M').
KlTwoCell kl_horizontal(const KlTwoCell& chi2, const KlTwoCell& chi1);

/// Checks that kappa: x.m -> y.m is an invertible bicolinear map carrying
/// phi_x to phi_y.
Report compare_onecells(const KlOneCell& x, const KlOneCell& y, const Matrix& kappa);
/// The 2-cell (k_tgt [] B) chi k_src^-1 between the replacement 1-cells.
KlTwoCell transport_twocell(const KlTwoCell& c, const KlOneCellPtr& src, const Matrix& k_src, const KlOneCellPtr& tgt,
                            const Matrix& k_tgt);

/// Canonical comparisons: M -> C [] M and M -> M [] D.
Matrix left_identity_comparison(const KlOneCell& x);
Matrix right_identity_comparison(const KlOneCell& x);

/// (C^f, (C [] f1) lambda_A) on the canonical A [] C^f = A.
KlOneCellPtr embed_Phi(const FunctorPtr& f);
/// (C^g [] alpha) Delta_C.
KlTwoCell embed_Phi_2cell(const NatTrans& a);
/// The functor f with Phi(f) = x, read off as f0 = (e_C (x) D) rho and
/// f1 = (e_C (x) B) phi; throws NotPhiImage.
FunctorPtr phi_preimage(const KlOneCell& x);
/// alpha = m_B (u_B g0 [] B) chi; throws NotPhiImage.
NatTrans phi_local_lift(const KlTwoCell& chi);
/// C^(gf) -> C^f [] D^g, c |-> (C (x) f0) Delta_C c.
Matrix phi_comparison(const InternalFunctor& f, const InternalFunctor& g);

/// The same category read with all 1-cells reversed: C^cop with the factors
/// of every coaction and of A [] A swapped.
CategoryPtr mirror_category(const CategoryPtr& c);
FunctorPtr mirror_functor(const FunctorPtr& f, const CategoryPtr& src, const CategoryPtr& dst);
/// (fC, (f1 [] C) rho_A), carried to the mirror categories.
KlOneCellPtr embed_Phi_hat(const FunctorPtr& f);
/// For alpha: g => f, (alpha [] gC) Delta_C from Phi_hat(f) to Phi_hat(g).
KlTwoCell embed_Phi_hat_2cell(const NatTrans& a);

/// (fD, f1) with B identified with fD [] B by lambda_B.
KlOneCellPtr embed_Psi(const CofunctorPtr& f);
KlTwoCell embed_Psi_2cell(const Cotrans& a);
/// (hf)D' -> fD [] hD', d |-> (h0 (x) D') Delta_D' d.
Matrix psi_comparison(const Cofunctor& f, const Cofunctor& h);

}  // namespace icat
