#include "icat/run.hpp"

#include <functional>
#include <sstream>

#include "icat/linalg.hpp"

namespace icat::cli {
namespace {

using io::json;

std::string message(const Error& e) {
    const std::string what = e.what();
    const std::string prefix = std::string(error_name(e.kind())) + ": ";
    return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

// Errors inside a stage become a failed check named after the error.
void guard(Report& r, const std::string& stage, const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        r.add(std::string(error_name(e.kind())), stage, false, message(e));
    }
}

std::optional<std::string> target_of(const json& args) {
    const auto it = args.find("target");
    if (it == args.end()) return std::nullopt;
    if (!it->is_string()) throw Error(ErrorKind::ParseError, "\"target\" must be a string");
    return it->get<std::string>();
}

template <class M>
std::pair<std::string, const typename M::mapped_type*> pick(const M& m, const json& args, const char* kind) {
    if (const auto t = target_of(args)) {
        const auto it = m.find(*t);
        if (it == m.end()) throw Error(ErrorKind::UnresolvedReference, std::string("no ") + kind + " named \"" + *t + "\"");
        return {it->first, &it->second};
    }
    if (m.size() != 1)
        throw Error(ErrorKind::UnresolvedReference,
                    std::string("the document has ") + std::to_string(m.size()) + " " + kind + "s; name one with --target");
    return {m.begin()->first, &m.begin()->second};
}

std::optional<Matrix> vector_arg(const json& args, const char* key, Field f) {
    const auto it = args.find(key);
    if (it == args.end()) return std::nullopt;
    return io::matrix_from_json(*it, f);
}

std::string coords(const Matrix& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.rows(); ++i) s += (i ? ", " : "") + v(i, 0).str();
    return s + "]";
}

CategoryPtr renamed(const CategoryPtr& c, const std::string& name) {
    auto x = std::make_shared<InternalCategory>(*c);
    x->name = name;
    return x;
}

Coring renamed(Coring c, const std::string& name) {
    c.name = name;
    return c;
}

RunResult verify(const io::Document& d, const json& args) {
    const auto target = target_of(args);
    RunResult out{Report("verify " + target.value_or("document")), {}};
    out.output.field = d.field;
    Report& r = out.report;
    bool found = false;
    const auto one = [&](const std::string& name, const std::function<Report()>& f) {
        if (target && name != *target) return;
        found = true;
        guard(r, name, [&] { r.merge(f(), name); });
    };
    for (const auto& [k, v] : d.comonoids) one(k, [&] { return verify_comonoid(*v); });
    for (const auto& [k, v] : d.bicomodules) one(k, [&] { return verify_bicomodule(v); });
    for (const auto& [k, v] : d.categories) one(k, [&] { return verify_internal_category(*v); });
    for (const auto& [k, v] : d.functors) one(k, [&] { return verify_functor(*v); });
    for (const auto& [k, v] : d.cofunctors) one(k, [&] { return verify_cofunctor(*v); });
    for (const auto& [k, v] : d.naturals) one(k, [&] { return verify_nat(v); });
    for (const auto& [k, v] : d.cotransformations) one(k, [&] { return verify_cotrans(v); });
    for (const auto& [k, v] : d.monads) one(k, [&] { return verify_monad(v); });
    for (const auto& [k, v] : d.comonads) one(k, [&] { return verify_comonad(v); });
    for (const auto& [k, v] : d.opmonads) one(k, [&] { return verify_opmonad(v); });
    for (const auto& [k, v] : d.adjunctions) one(k, [&] { return verify_adjunction(v); });
    for (const auto& [k, v] : d.talgebras)
        one(k, [&] { return verify_talgebra(d.monads.at(v.monad), v.algebra); });
    for (const auto& [k, v] : d.algebras) one(k, [&] { return verify_algebra(*v); });
    for (const auto& [k, v] : d.bimodules) one(k, [&] { return verify_bimodule(v); });
    for (const auto& [k, v] : d.corings) one(k, [&] { return verify_coring(v); });
    for (const auto& [k, v] : d.sweedlers) one(k, [&] { return verify_coring(v->coring); });
    for (const auto& [k, v] : d.sweedler_data) one(k, [&] { return verify_sweedler_monad_data(v); });
    for (const auto& [k, v] : d.twisting) one(k, [&] { return verify_twisting_datum(v); });
    for (const auto& [k, v] : d.hopf_galois) one(k, [&] { return verify_hopf_galois(v); });
    for (const auto& [k, v] : d.finite_categories) one(k, [&] { return verify_finite_category(v); });
    for (const auto& [k, v] : d.set_monads)
        one(k, [&] { return verify_set_monad(d.finite_categories.at(v.category), v.monad); });
    if (target && !found) throw Error(ErrorKind::UnresolvedReference, "nothing named \"" + *target + "\" to verify");
    return out;
}

RunResult cotensor_cmd(const io::Document& d, const json& args) {
    const auto target = target_of(args);
    if (!target) throw Error(ErrorKind::UnresolvedReference, "cotensor needs --target M,N");
    std::vector<Bicomodule> chain;
    std::string name;
    std::stringstream ss(*target);
    for (std::string part; std::getline(ss, part, ',');) {
        const auto it = d.bicomodules.find(part);
        if (it == d.bicomodules.end()) throw Error(ErrorKind::UnresolvedReference, "no bicomodule named \"" + part + "\"");
        chain.push_back(it->second);
        name += (name.empty() ? "" : "[]") + part;
    }
    if (chain.size() < 2) throw Error(ErrorKind::UnresolvedReference, "cotensor needs at least two bicomodules");
    RunResult out{Report("cotensor " + name), {}};
    out.output.field = d.field;
    guard(out.report, "M [] N", [&] {
        const Cotensor ct = cotensor(chain);
        Bicomodule res = ct.result;
        res.name = name;
        out.report.merge(verify_bicomodule(res), name);
        io::add(out.output, res);
        out.output.matrices[name + " inclusion"] = ct.space.incl;
    });
    return out;
}

RunResult kleisli_cmd(const io::Document& d, const json& args) {
    const auto [name, m] = pick(d.monads, args, "monad");
    RunResult out{Report("kleisli " + name), {}};
    out.output.field = d.field;
    Report& r = out.report;
    guard(r, "monad", [&] { r.merge(verify_monad(*m), "monad"); });
    guard(r, "C^t [] A", [&] {
        const CategoryPtr k = renamed(kleisli_object(*m), name + "_kleisli");
        r.merge(verify_internal_category(*k), "kleisli object");
        r.add("wreath path", "C^t [] A = wreath(Phi(t), Phi(mu), Phi(eta))",
              same_category(*k, *kleisli_object_wreath(*m)));
        const Adjunction adj = kleisli_adjunction(*m);
        r.merge(verify_adjunction(adj), "kleisli adjunction");
        const Monad back = monad_of_adjunction(adj);
        r.add("monad recovered", "rl = t", same_functor(*back.t, *m->t));
        r.equal("monad recovered", "r1 eps l0 = mu", back.mu.alpha, m->mu.alpha);
        r.equal("monad recovered", "eta = eta", back.eta.alpha, m->eta.alpha);
        const BiNatural th = adjunction_to_binatural(adj);
        r.add("theta is the identity", "D^r [] A -> B [] lC", th.theta.is_identity());
        io::add(out.output, k);
        io::add(out.output, name + "_adjunction", adj);
    });
    return out;
}

RunResult cokleisli_cmd(const io::Document& d, const json& args) {
    const auto [name, g] = pick(d.comonads, args, "comonad");
    RunResult out{Report("cokleisli " + name), {}};
    out.output.field = d.field;
    Report& r = out.report;
    guard(r, "comonad", [&] { r.merge(verify_comonad(*g), "comonad"); });
    guard(r, "A [] gC", [&] {
        const CategoryPtr k = renamed(cokleisli_object(*g), name + "_cokleisli");
        r.merge(verify_internal_category(*k), "cokleisli object");
        io::add(out.output, k);
    });
    return out;
}

RunResult opkleisli_cmd(const io::Document& d, const json& args) {
    const auto [name, t] = pick(d.opmonads, args, "opmonad");
    RunResult out{Report("opkleisli " + name), {}};
    out.output.field = d.field;
    Report& r = out.report;
    guard(r, "opmonad", [&] { r.merge(verify_opmonad(*t), "opmonad"); });
    guard(r, "tA", [&] {
        const CategoryPtr k = renamed(opmonad_kleisli(*t), name + "_kleisli");
        r.merge(verify_internal_category(*k), "opmonad kleisli object");
        io::add(out.output, k);
    });
    return out;
}

RunResult adjoint_cmd(const io::Document& d, const json& args) {
    const auto [name, a] = pick(d.adjunctions, args, "adjunction");
    RunResult out{Report("adjoint-check " + name), {}};
    out.output.field = d.field;
    Report& r = out.report;
    guard(r, "adjunction", [&] { r.merge(verify_adjunction(*a), "adjunction"); });
    guard(r, "theta", [&] {
        const BiNatural th = adjunction_to_binatural(*a);
        r.merge(verify_binatural(th, *a->l, *a->r), "theta");
        const Adjunction back = binatural_to_adjunction(a->l, a->r, th);
        r.equal("round trip eps", "eps = m_B (B [] l) theta (D [] r) Delta_D", back.eps.alpha, a->eps.alpha);
        r.equal("round trip eta", "eta = m_A (r [] A) theta^-1 (l [] C) Delta_C", back.eta.alpha, a->eta.alpha);
        const BiNatural again = adjunction_to_binatural(back);
        r.equal("round trip theta", "theta = (m_B [] lC)(eps [] l1 [] C)(D^r [] rho)", again.theta, th.theta);
        if (th.theta_inv && again.theta_inv)
            r.equal("round trip theta^-1", "theta^-1 = (D^r [] m_A)(D [] r1 [] eta)(lambda [] lC)", *again.theta_inv,
                    *th.theta_inv);
        out.output.matrices["theta"] = th.theta;
        if (th.theta_inv) out.output.matrices["theta_inv"] = *th.theta_inv;
    });
    return out;
}

RunResult theta_cmd(const io::Document& d, const json& args) {
    const auto [name, def] = pick(d.talgebras, args, "t-algebra");
    const Monad& m = d.monads.at(def->monad);
    const TAlgebra& a = def->algebra;
    RunResult out{Report("theta " + name), {}};
    out.output.field = d.field;
    Report& r = out.report;
    guard(r, "t-algebra", [&] { r.merge(verify_talgebra(m, a), "t-algebra"); });
    guard(r, "Theta(y, sigma)", [&] {
        auto f = std::make_shared<InternalFunctor>(*theta_correspondence(m, a));
        f->name = name + "_theta";
        r.merge(verify_functor(*f), "Theta(y, sigma)");
        const TAlgebra back = theta_inverse(m, f);
        r.add("round trip y", "gl = y", same_functor(*back.y, *a.y));
        r.equal("round trip sigma", "g1 eps = sigma", back.sigma.alpha, a.sigma.alpha);
        io::add(out.output, FunctorPtr(f));
    });
    return out;
}

RunResult twist_cmd(const io::Document& d, const json& args) {
    const auto [name, td] = pick(d.twisting, args, "twisting datum");
    RunResult out{Report("twist " + name), {}};
    out.output.field = d.field;
    Report& r = out.report;
    guard(r, "datum", [&] { r.merge(verify_twisting_datum(*td), "datum"); });
    guard(r, "(C_theta, D^theta)", [&] {
        const auto [ct, dt] = twist_corings(*td);
        r.merge(verify_coring(ct), "C_theta");
        r.merge(verify_coring(dt), "D^theta");
        io::add(out.output, renamed(ct, name + "_C_theta"));
        io::add(out.output, renamed(dt, name + "_D_theta"));
    });
    guard(r, "C_theta <-> C", [&] {
        r.merge(verify_twisting_datum(kleisli_twisting_datum(*td)), "Kleisli datum");
        r.merge(twisting_termination(*td), "termination");
    });
    guard(r, "l^-1 = ubar * r * u", [&] {
        try {
            const CoringIso iso = lemma51_iso(*td);
            r.merge(iso.report, "coring iso");
            out.output.matrices["l_inv"] = iso.l_inv;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotConvolutionInvertible) throw;
            r.add("coring iso skipped", "u = e_D theta^-1 convolution invertible", true,
                  "the convolution unit has no inverse, so no isomorphism is claimed");
        }
    });
    return out;
}

RunResult sweedler_cmd(const io::Document& d, const json& args) {
    const auto [name, data] = pick(d.sweedler_data, args, "Sweedler monad datum");
    RunResult out{Report("sweedler " + name), {}};
    out.output.field = d.field;
    Report& r = out.report;
    guard(r, "(t, m, u)", [&] { r.merge(verify_sweedler_monad_data(*data), "monad data"); });
    guard(r, "Delta_t, e_t", [&] {
        const Coring kc = renamed(sweedler_kleisli_coring(*data), name + "_kleisli");
        r.merge(verify_coring(kc), "Kleisli coring");
        r.add("engine path", "undualize(C^t [] A) = (A (x)_B A, Delta_t, e_t)",
              same_coring(kc, kleisli_coring_via_engine(*data)));
        r.add("mt grouplike", "Delta_t(mt) = mt (x) mt, e_t(mt) = 1", is_grouplike(sweedler_mt(*data), kc));
        const SweedlerAdjunction adj = sweedler_kleisli_adjunction(*data);
        r.merge(verify_coring_map(adj.l1, data->sw->coring, kc), "l1");
        r.merge(verify_coring_map(adj.r1, kc, data->sw->coring), "r1");
        io::add(out.output, kc);
        out.output.matrices["l1"] = adj.l1;
        out.output.matrices["r1"] = adj.r1;
    });
    return out;
}

RunResult hopf_galois_cmd(const io::Document& d, const json& args) {
    const auto [name, hg] = pick(d.hopf_galois, args, "Hopf-Galois instance");
    RunResult out{Report("hopf-galois " + name), {}};
    out.output.field = d.field;
    Report& r = out.report;
    const Field f = d.field;
    guard(r, "instance", [&] { r.merge(verify_hopf_galois(*hg), "instance"); });
    guard(r, "can", [&] {
        const Matrix can = canonical_map(*hg);
        r.add("can bijective", "can(a' (x)_B a) = a' rho(a)", is_invertible(can));
        out.output.matrices["B"] = hg->incl;
        out.output.matrices["can"] = can;
        out.output.matrices["tau"] = translation_map(*hg);
        const std::size_t da = hg->a->dim(), dh = hg->h->dim();
        Matrix table(da, da * dh, f);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < dh; ++j) {
                const Matrix v = mu_action(*hg, Matrix::unit_column(da, i, f), Matrix::unit_column(dh, j, f));
                for (std::size_t k = 0; k < da; ++k) table(k, i * dh + j) = v(k, 0);
            }
        out.output.matrices["mu_table"] = table;
    });
    guard(r, "grouplikes", [&] {
        const auto x = vector_arg(args, "x", f);
        const auto m = vector_arg(args, "m", f);
        const auto u = vector_arg(args, "u", f);
        const std::vector<Matrix> gl = x ? std::vector<Matrix>{*x} : grouplikes(*hg);
        if (!gl.empty()) {
            Matrix cols = gl[0];
            for (std::size_t i = 1; i < gl.size(); ++i) cols = hstack(cols, gl[i]);
            out.output.matrices["grouplikes"] = cols;
        }
        for (const Matrix& g : gl) {
            const std::string label = "x=" + coords(g);
            guard(r, label, [&] {
                const GrouplikeMonadCheck chk =
                    grouplike_monad_data(*hg, g, m.value_or(hg->a->unit), u.value_or(hg->a->unit));
                r.merge(chk.report, label);
                // Explicit (m, u) are claims to check; the default is a probe.
                if (m || u) r.merge(chk.direct, label + " direct");
            });
        }
    });
    return out;
}

RunResult oracle_cmd(const io::Document& d, const json& args) {
    const auto [name, def] = pick(d.set_monads, args, "set monad");
    const FiniteCategory& c = d.finite_categories.at(def->category);
    RunResult out{Report("oracle-compare " + name), {}};
    out.output.field = d.field;
    Report& r = out.report;
    guard(r, "inputs", [&] {
        r.merge(verify_finite_category(c), "category");
        r.merge(verify_set_monad(c, def->monad), "monad");
    });
    guard(r, "hom(a, Tb)", [&] {
        FiniteCategory ck = classical_kleisli(c, def->monad);
        ck.name = name + "_classical";
        r.merge(verify_finite_category(ck), "classical Kleisli");
        const Monad lm = linearize_monad(c, def->monad);
        r.merge(verify_monad(lm), "linearized monad");
        const CategoryPtr k = renamed(kleisli_object(lm), name + "_kleisli");
        guard(r, "C^t [] A vs hom(a, Tb)", [&] { r.merge(compare(*k, ck), "compare"); });
        io::add(out.output, ck);
        io::add(out.output, k);
    });
    return out;
}

using Handler = RunResult (*)(const io::Document&, const json&);

const std::vector<std::pair<std::string, Handler>>& table() {
    static const std::vector<std::pair<std::string, Handler>> t{
        {"verify", verify},          {"cotensor", cotensor_cmd},       {"kleisli", kleisli_cmd},
        {"cokleisli", cokleisli_cmd}, {"opkleisli", opkleisli_cmd},     {"adjoint-check", adjoint_cmd},
        {"theta", theta_cmd},         {"twist", twist_cmd},             {"sweedler", sweedler_cmd},
        {"hopf-galois", hopf_galois_cmd}, {"oracle-compare", oracle_cmd},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, h] : table()) n.push_back(k);
        return n;
    }();
    return names;
}

RunResult run_command(const io::Document& doc, const std::string& command, const json& args) {
    for (const auto& [k, h] : table())
        if (k == command) return h(doc, args.is_object() ? args : json::object());
    throw Error(ErrorKind::UnresolvedReference, "unknown command \"" + command + "\"");
}

RunResult run_task(const io::Document& doc, const std::string& task) {
    const auto it = doc.tasks.find(task);
    if (it == doc.tasks.end()) throw Error(ErrorKind::UnresolvedReference, "no task named \"" + task + "\"");
    return run_command(doc, it->second.at("command").get<std::string>(), it->second);
}

bool empty(const io::Document& d) {
    json j = io::serialize(d);
    j.erase("field");
    j.erase("p");
    return j.empty();
}

}  // namespace icat::cli
