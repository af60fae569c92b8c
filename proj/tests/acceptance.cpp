// Acceptance gate: twelve exact criteria, one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "icat/coring.hpp"
#include "icat/fixtures.hpp"
#include "icat/klbicat.hpp"
#include "icat/kleisli.hpp"
#include "icat/linalg.hpp"
#include "icat/oracle.hpp"

using namespace icat;

namespace {

constexpr double time_limit_ms = 5000;

class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (!ok && first_.empty()) first_ = what;
    }
    // The call must throw an Error of the given kind.
    void expect_error(ErrorKind kind, const std::function<void()>& f, const std::string& what) {
        try {
            f();
        } catch (const Error& e) {
            expect(e.kind() == kind, what + " (threw " + std::string(error_name(e.kind())) + ")");
            return;
        }
        expect(false, what + " (no error)");
    }
    int count() const { return count_; }
    const std::string& first_failure() const { return first_; }

private:
    int count_ = 0;
    std::string first_;
};

// ---- enumeration helpers ----

std::vector<Matrix> point_maps(std::size_t from, std::size_t to) {
    std::vector<Matrix> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < from; ++i) total *= to;
    for (std::size_t code = 0; code < total; ++code) {
        Matrix f(to, from);
        std::size_t c = code;
        for (std::size_t j = 0; j < from; ++j, c /= to) f.set(c % to, j, 1);
        out.push_back(f);
    }
    return out;
}

std::vector<Matrix> bounded_span(const std::vector<Matrix>& basis, const Matrix& zero) {
    if (basis.empty()) return {zero};
    std::vector<Matrix> out;
    std::vector<int> c(basis.size(), -1);
    while (true) {
        std::vector<Scalar> s;
        for (int x : c) s.emplace_back(x);
        out.push_back(combine(basis, s));
        std::size_t i = 0;
        while (i < c.size() && c[i] == 1) c[i++] = -1;
        if (i == c.size()) break;
        ++c[i];
    }
    return out;
}

std::vector<Matrix> grid(std::size_t n) {
    std::vector<Matrix> out;
    std::vector<int> c(n, -1);
    while (true) {
        Matrix x(n, 1);
        for (std::size_t i = 0; i < n; ++i) x.set(i, 0, c[i]);
        out.push_back(x);
        std::size_t i = 0;
        while (i < n && c[i] == 1) c[i++] = -1;
        if (i == n) break;
        ++c[i];
    }
    return out;
}

std::vector<FunctorPtr> functors(const CategoryPtr& a, const CategoryPtr& b) {
    std::vector<FunctorPtr> out;
    for (const auto& f0 : point_maps(a->C->dim(), b->C->dim())) {
        const auto probe = make_functor("p", a, b, f0, Matrix(b->A.dim(), a->A.dim()));
        const auto basis = bicolinear_basis(induced_morphisms(*probe), b->A);
        for (const auto& f1 : bounded_span(basis, Matrix(b->A.dim(), a->A.dim()))) {
            auto f = make_functor("y", a, b, f0, f1);
            if (verify_functor(*f).ok()) out.push_back(f);
        }
    }
    return out;
}

std::vector<TAlgebra> talgebras(const Monad& m, const CategoryPtr& b) {
    std::vector<TAlgebra> out;
    for (const auto& y : functors(m.t->src, b)) {
        const auto yt = compose_functors(y, m.t);
        for (const auto& s : bounded_span(natural_basis(yt, y), Matrix(b->A.dim(), m.t->src->C->dim()))) {
            TAlgebra a{y, NatTrans{"sigma", yt, y, s}};
            if (verify_talgebra(m, a).ok()) out.push_back(a);
        }
    }
    return out;
}

std::vector<NatTrans> sample_naturals(const FunctorPtr& f, const FunctorPtr& g) {
    std::vector<NatTrans> out;
    const auto basis = natural_basis(f, g);
    if (basis.empty()) return out;
    for (long a : {-1L, 1L, 2L}) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < basis.size(); ++i) c.emplace_back(a + static_cast<long>(i));
        out.push_back(NatTrans{"n", f, g, combine(basis, c)});
    }
    return out;
}

std::vector<Cotrans> all_cotransformations(const CofunctorPtr& f, const CofunctorPtr& g) {
    std::vector<Cotrans> out;
    for (const auto& a : bounded_span(cotrans_basis(f, g), Matrix(g->dst->A.dim(), f->dst->C->dim())))
        out.push_back(Cotrans{"c", f, g, a});
    return out;
}

Matrix el(long one, long g) { return Matrix{{one}, {g}}; }

// ---- criteria ----

// Kleisli object of the F3 monad against the classical Kleisli category.
void oracle_equivalence(Checker& c) {
    const CategoryPtr p = fixtures::poset();
    const CategoryPtr k = kleisli_object(fixtures::ceiling_monad(p));
    c.expect(k->A.dim() == 4, "Kleisli object is 4-dimensional");

    const FiniteCategory chain = chain_category(2);
    const SetMonad ceiling{{1, 1}, {1, 1, 1}, {2, 1}, {1, 1}};
    c.expect(verify_set_monad(chain, ceiling).ok(), "ceiling is a set monad");
    const FiniteCategory classical = classical_kleisli(chain, ceiling);
    c.expect(classical.morphisms.size() == 4, "classical Kleisli has 4 morphisms");
    // hom(a, b) = hom(a, T b) = hom(a, 1): one arrow for every pair.
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) c.expect(classical.hom(a, b).size() == 1, "hom-sets are singletons");
    c.expect(compare(*k, classical).ok(), "compare succeeds");
    c.expect(compare(*kleisli_object(linearize_monad(chain, ceiling)), classical).ok(),
             "linearized monad also matches");

    FiniteCategory perturbed = classical;
    perturbed.dom.swap(perturbed.cod);
    c.expect_error(ErrorKind::Mismatch, [&] { compare(*k, perturbed); }, "perturbed table is rejected");
}

std::vector<std::pair<std::string, Adjunction>> adjunction_suite() {
    const CategoryPtr p = fixtures::poset();
    std::vector<std::pair<std::string, Adjunction>> out{{"identity", identity_adjunction(p)},
                                                        {"floor -| ceiling", fixtures::floor_ceiling(p)}};
    for (const auto& [name, m] : fixtures::monads()) out.emplace_back("Kleisli " + name, kleisli_adjunction(m));
    return out;
}

void theta_round_trip(Checker& c) {
    for (const auto& [name, a] : adjunction_suite()) {
        const BiNatural th = adjunction_to_binatural(a);
        c.expect(verify_binatural(th, *a.l, *a.r).ok(), name + ": theta is bi-natural");
        const Adjunction back = binatural_to_adjunction(a.l, a.r, th);
        c.expect(back.eps.alpha == a.eps.alpha, name + ": eps reproduced");
        c.expect(back.eta.alpha == a.eta.alpha, name + ": eta reproduced");
        const BiNatural again = adjunction_to_binatural(back);
        c.expect(again.theta == th.theta, name + ": theta reproduced");
        c.expect(th.theta_inv && again.theta_inv && *again.theta_inv == *th.theta_inv, name + ": theta^-1 reproduced");
        c.expect(th.theta * *th.theta_inv == Matrix::identity(th.theta.rows()), name + ": theta theta^-1 = 1");
    }
}

void kleisli_adjunction_suite(Checker& c) {
    for (const auto& [name, m] : fixtures::monads()) {
        c.expect(verify_monad(m).ok(), name + ": monad");
        const Adjunction a = kleisli_adjunction(m);
        c.expect(verify_adjunction(a).ok(), name + ": Kleisli adjunction verified");
        const Monad back = monad_of_adjunction(a);
        c.expect(back.t->f0 == m.t->f0 && back.t->f1 == m.t->f1, name + ": rl = t");
        c.expect(back.mu.alpha == m.mu.alpha, name + ": mu recovered");
        c.expect(back.eta.alpha == m.eta.alpha, name + ": eta recovered");
        const Matrix th = adjunction_to_binatural(a).theta;
        c.expect(th == Matrix::identity(th.rows()), name + ": theta is the identity matrix");
    }
}

void dual_path(Checker& c) {
    for (const auto& [name, m] : fixtures::monads()) {
        const CategoryPtr direct = kleisli_object(m);
        const CategoryPtr wreath = kleisli_object_wreath(m);
        c.expect(direct->A.lambda == wreath->A.lambda, name + ": lambda");
        c.expect(direct->A.rho == wreath->A.rho, name + ": rho");
        c.expect(direct->mult == wreath->mult, name + ": m_t");
        c.expect(direct->unit == wreath->unit, name + ": u_t");
        c.expect(direct->pairs.incl == wreath->pairs.incl, name + ": A_t [] A_t basis");
    }
}

void mates(Checker& c) {
    const CategoryPtr p = fixtures::poset();
    const Adjunction fc = fixtures::floor_ceiling(p);
    const Monad m = fixtures::ceiling_monad(p);
    const Comonad g = mate_comonad(fc, m);
    c.expect(verify_comonad(g).ok(), "mate comonad verified");
    const CategoryPtr ck = cokleisli_object(g);
    c.expect(verify_internal_category(*ck).ok(), "co-Kleisli object verified");
    c.expect(compare_kleisli_cokleisli(m, g, adjunction_to_binatural(fc)).ok(), "theta is an isomorphism");
    BiNatural bent = adjunction_to_binatural(fc);
    bent.theta = bent.theta * Scalar(2);
    c.expect_error(ErrorKind::NotIsomorphism, [&] { compare_kleisli_cokleisli(m, g, bent); }, "scaled theta rejected");

    const Adjunction id = identity_adjunction(p);
    const Comonad gid = mate_comonad(id, identity_monad(p));
    c.expect(verify_comonad(gid).ok(), "identity mate verified");
    c.expect(compare_kleisli_cokleisli(identity_monad(p), gid, adjunction_to_binatural(id)).ok(),
             "identity theta is an isomorphism");
}

void opmonads(Checker& c) {
    for (const CategoryPtr& cat : {fixtures::poset(), fixtures::points_trivial()}) {
        const CategoryPtr k = opmonad_kleisli(identity_opmonad(cat));
        c.expect(k->mult == cat->mult, cat->name + ": m^t = m_A");
        c.expect(k->unit == cat->unit, cat->name + ": u = u_A");
        c.expect(verify_internal_category(*k).ok(), cat->name + ": tA verified");
    }
    const CategoryPtr f2 = fixtures::points_trivial();
    int found = 0;
    for (const auto& f0 : point_maps(2, 2)) {
        const auto t = induced_cofunctor("t", f2, f2, f0);
        const auto tt = compose_cofunctors(t, t);
        const auto id = identity_cofunctor(f2);
        for (const auto& mu : bounded_span(cotrans_basis(tt, t), Matrix(2, 2)))
            for (const auto& eta : bounded_span(cotrans_basis(id, t), Matrix(2, 2))) {
                const Opmonad op{t, Cotrans{"mu", tt, t, mu}, Cotrans{"eta", id, t, eta}};
                if (!verify_opmonad(op).ok()) continue;
                ++found;
                c.expect(verify_internal_category(*opmonad_kleisli(op)).ok(), "searched opmonad gives a category");
            }
    }
    c.expect(found >= 1, "search finds opmonads");
}

void theta_correspondence_suite(Checker& c) {
    const CategoryPtr p = fixtures::poset();
    const Monad m = fixtures::ceiling_monad(p);
    const CategoryPtr k = kleisli_object(m);
    for (const CategoryPtr& target : {p, fixtures::points_trivial()}) {
        const auto algs = talgebras(m, target);
        const auto funs = functors(k, target);
        c.expect(!algs.empty(), target->name + ": t-algebras exist");
        c.expect(algs.size() == funs.size(), target->name + ": as many t-algebras as functors");
        for (const auto& a : algs) {
            const FunctorPtr f = theta_correspondence(m, a);
            c.expect(verify_functor(*f).ok(), "Theta(y, sigma) is a functor");
            const TAlgebra back = theta_inverse(m, f);
            c.expect(same_functor(*back.y, *a.y) && back.sigma.alpha == a.sigma.alpha, "Theta^-1 Theta = id");
        }
        for (const auto& f : funs)
            c.expect(same_functor(*theta_correspondence(m, theta_inverse(m, f)), *f), "Theta Theta^-1 = id");
    }
}

void section_sweedler(Checker& c) {
    const auto sw = fixtures::sweedler_z2();
    const Matrix e1 = el(1, 0), eg = el(0, 1);
    const SweedlerMonadData g = unit_monad_data(sw, eg);
    const Report r = verify_sweedler_monad_data(g);
    for (const char* label : {"(a)", "(b)", "(c)", "(d)", "(e)"}) c.expect(r.passed(label), std::string("condition ") + label);

    const Coring kt = sweedler_kleisli_coring(g);
    c.expect(verify_coring(kt).ok(), "Kleisli coring verified");
    const Matrix x11 = sw->pure(e1, e1);
    c.expect(kt.delta * x11 == kt.cc.proj * tensor(sw->pure(e1, eg), x11), "Delta_t(1 (x) 1) = 1 (x) g (x) 1");
    c.expect(kt.counit * x11 == eg, "e_t(1 (x) 1) = g");
    c.expect(is_grouplike(sweedler_mt(g), kt), "mt is grouplike");

    const SweedlerAdjunction adj = sweedler_kleisli_adjunction(g);
    c.expect(verify_coring_map(adj.l1, sw->coring, kt).ok(), "l1 is a coring map");
    c.expect(verify_coring_map(adj.r1, kt, sw->coring).ok(), "r1 is a coring map");

    // mt is grouplike for every datum with coordinates in {-1, 0, 1}.
    int found = 0;
    for (const auto& m : grid(2))
        for (const auto& u : grid(2)) {
            if (!(sw->a->mult * tensor(m, u) == e1)) continue;
            for (const auto& t : grid(4)) {
                const SweedlerMonadData d{sw, t, m, u};
                if (!verify_sweedler_monad_data(d).ok()) continue;
                ++found;
                c.expect(is_grouplike(sweedler_mt(d), sweedler_kleisli_coring(d)), "mt grouplike on searched datum");
            }
        }
    c.expect(found >= 4, "search finds monad data");
}

void section_twisting(Checker& c) {
    const auto sw = fixtures::sweedler_z2();
    const Matrix e1 = el(1, 0), eg = el(0, 1);
    const SweedlerMonadData g = unit_monad_data(sw, eg);
    const TwistingDatum td = sweedler_twisting_datum(g);
    c.expect(verify_twisting_datum(td).ok(), "Sweedler twisting datum verified");
    const auto [ct, dt] = twist_corings(td);
    const Coring kt = sweedler_kleisli_coring(g);
    c.expect(ct.delta == kt.delta && ct.counit == kt.counit, "C_theta is the Kleisli coring");
    c.expect(verify_coring(dt).ok(), "D^theta verified");

    for (const TwistingDatum& x : {identity_twisting_datum(sw->coring), td}) {
        const TwistingDatum k = kleisli_twisting_datum(x);
        c.expect(verify_twisting_datum(k).ok(), "Kleisli twisting datum verified");
        const auto [c1, d1] = twist_corings(x);
        const auto [c2, d2] = twist_corings(k);
        c.expect(same_coring(c2, c1), "C_thetabar = C_theta");
        c.expect(same_coring(d2, x.c), "(C_theta)^thetabar = C");
        c.expect(twisting_termination(x).ok(), "termination report");
    }

    const CoringIso iso = lemma51_iso(td);
    c.expect(iso.report.ok(), "coring isomorphism certified");
    c.expect(iso.l_inv * sw->pure(e1, e1) == sw->pure(eg, e1), "l^-1(1 (x) 1) = g (x) 1");
    TwistingDatum degenerate = td;
    degenerate.d.counit = sw->a->mult * tensor(sw->a->mult, Matrix::identity(2)) *
                          tensor({Matrix::identity(2), el(1, 1), Matrix::identity(2)}) * sw->q.section;
    c.expect_error(ErrorKind::NotConvolutionInvertible, [&] { lemma51_iso(degenerate); },
                   "non-invertible convolution unit rejected");
}

void hopf_galois(Checker& c) {
    const HopfGaloisInstance hg = fixtures::hopf_galois_z2();
    const Matrix e1 = el(1, 0), eg = el(0, 1);
    c.expect(verify_hopf_galois(hg).ok(), "instance verified");
    const Matrix can = canonical_map(hg);
    c.expect(is_invertible(can), "can invertible");
    c.expect(can * hg.sw->pure(e1, eg) == tensor(eg, eg), "can(1 (x) g) = g (x) g");
    c.expect(translation_map(hg) * eg == hg.sw->pure(eg, eg), "tau(g) = g (x) g");
    for (const Matrix& a : {e1, eg})
        for (const Matrix& h : {e1, eg}) c.expect(mu_action(hg, a, h) == a, "a < h = a");
    const auto gl = grouplikes(hg);
    c.expect(gl.size() == 2, "two grouplikes");
    for (const Matrix& x : gl)
        for (const auto& m : grid(2))
            for (const auto& u : grid(2)) {
                const GrouplikeMonadCheck chk = grouplike_monad_data(hg, x, m, u);
                c.expect(chk.report.ok(), "HG forms agree with direct verdicts");
            }
}

void duality(Checker& c) {
    const auto a = fixtures::z2();
    const AlgebraPtr back = undualize(*dualize(*a));
    c.expect(back->mult == a->mult && back->unit == a->unit, "algebra round trip");
    const auto sw = fixtures::sweedler_z2();
    const Coring& base = sw->coring;
    std::vector<Coring> suite{trivial_coring(a),
                              base,
                              with_structure(base, base.delta, base.counit * Scalar(2)),
                              with_structure(base, base.delta * Scalar(3), base.counit),
                              sweedler_kleisli_coring(unit_monad_data(sw, el(0, 1))),
                              sweedler_kleisli_coring(unit_monad_data(sw, el(0, 2)))};
    bool some_fail = false;
    for (const auto& x : suite) {
        const bool direct = verify_coring(x).ok();
        some_fail = some_fail || !direct;
        const CategoryPtr ic = dualize(x);
        c.expect(direct == verify_internal_category(*ic).ok(), x.name + ": verdicts agree");
        const Coring round = undualize(*ic);
        c.expect(same_coring(round, x), x.name + ": undualize . dualize = id");
        c.expect(same_category(*dualize(round), *ic), x.name + ": dualize . undualize = id");
    }
    c.expect(some_fail, "suite contains a failing coring");
}

void embeddings(Checker& c) {
    const CategoryPtr p = fixtures::poset();
    const FunctorPtr t = fixtures::ceiling(p);
    const std::vector<FunctorPtr> fs{identity_functor(p), t, fixtures::floor(p)};
    int vertical = 0, horizontal = 0;
    for (const auto& f : fs)
        for (const auto& g : fs)
            for (const auto& a : sample_naturals(f, g)) {
                const KlTwoCell pa = embed_Phi_2cell(a);
                c.expect(verify_kl_twocell(pa).ok(), "Phi(alpha) verified");
                c.expect(phi_local_lift(pa).alpha == a.alpha, "phi_local_lift round trip");
                for (const auto& h : fs)
                    for (const auto& b : sample_naturals(g, h)) {
                        c.expect(kl_vertical(embed_Phi_2cell(b), pa).chi == embed_Phi_2cell(vertical_compose(b, a)).chi,
                                 "Phi preserves vertical composition");
                        ++vertical;
                    }
                for (const auto& h : fs)
                    for (const auto& k : fs)
                        for (const auto& b : sample_naturals(h, k)) {
                            const KlTwoCell kl = kl_horizontal(embed_Phi_2cell(b), pa);
                            c.expect(verify_kl_twocell(kl).ok(), "KL horizontal composite verified");
                            const KlTwoCell moved = transport_twocell(embed_Phi_2cell(horizontal_compose(b, a)),
                                                                      kl.source, phi_comparison(*f, *h), kl.target,
                                                                      phi_comparison(*g, *k));
                            c.expect(moved.chi == kl.chi, "Phi preserves horizontal composition");
                            ++horizontal;
                        }
            }
    c.expect(vertical > 10 && horizontal > 10, "enough sampled naturals");
    for (const auto& f : fs) {
        c.expect(verify_kl_onecell(*embed_Phi(f)).ok(), "Phi(f) verified");
        c.expect(same_functor(*phi_preimage(*embed_Phi(f)), *f), "phi_preimage round trip");
        const auto x = embed_Phi(f);
        for (const auto& g : fs)
            for (const auto& chi : kl_twocell_basis(x, embed_Phi(g)))
                c.expect(embed_Phi_2cell(phi_local_lift(KlTwoCell{"c", x, embed_Phi(g), chi})).chi == chi,
                         "every KL 2-cell between Phi images lifts");
    }

    const CategoryPtr f2 = fixtures::points_trivial();
    std::vector<CofunctorPtr> cofs;
    for (const auto& f0 : point_maps(2, 2)) cofs.push_back(induced_cofunctor("r", f2, f2, f0));
    int psi = 0;
    for (const auto& f : cofs) {
        c.expect(verify_kl_onecell(*embed_Psi(f)).ok(), "Psi(f) verified");
        for (const auto& g : cofs)
            for (const auto& a : all_cotransformations(f, g)) {
                const KlTwoCell pa = embed_Psi_2cell(a);
                c.expect(verify_kl_twocell(pa).ok(), "Psi(alpha) verified");
                for (const auto& h : cofs)
                    for (const auto& b : all_cotransformations(g, h)) {
                        c.expect(kl_vertical(embed_Psi_2cell(b), pa).chi == embed_Psi_2cell(co_vertical(b, a)).chi,
                                 "Psi preserves *_");
                        ++psi;
                    }
            }
    }
    c.expect(psi > 20, "enough cotransformations");
}

struct Criterion {
    int id;
    const char* title;
    void (*body)(Checker&);
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence of the Kleisli object", oracle_equivalence},
        {2, "adjunction <-> bi-natural iso round trips", theta_round_trip},
        {3, "Kleisli adjunction suite", kleisli_adjunction_suite},
        {4, "direct and wreath Kleisli paths agree", dual_path},
        {5, "mate comonad and Kleisli/co-Kleisli comparison", mates},
        {6, "opmonad Kleisli objects", opmonads},
        {7, "Theta correspondence", theta_correspondence_suite},
        {8, "Sweedler monad data and Kleisli coring", section_sweedler},
        {9, "twisting data and coring isomorphism", section_twisting},
        {10, "Hopf-Galois instance F6", hopf_galois},
        {11, "duality soundness", duality},
        {12, "embedding suite", embeddings},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        std::string error;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(c);
        } catch (const Error& e) {
            error = e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::string why = !error.empty() ? "error: " + error : c.first_failure();
        if (why.empty() && ms > time_limit_ms) why = "over the time limit";
        const bool pass = why.empty();
        failed += pass ? 0 : 1;
        std::printf("[%s] %2d. %s (%d checks, %.0f ms)%s%s\n", pass ? "PASS" : "FAIL", cr.id, cr.title, c.count(), ms,
                    pass ? "" : ": ", why.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
