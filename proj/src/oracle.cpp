#include "icat/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "icat/error.hpp"
#include "icat/linalg.hpp"

namespace icat {

namespace {

std::size_t find_name(const std::vector<std::string>& names, const std::string& n) {
    const auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw Error(ErrorKind::UnresolvedReference, "no morphism named " + n);
    return static_cast<std::size_t>(it - names.begin());
}

std::optional<std::size_t> compose(const FiniteCategory& c, std::size_t g, std::size_t f) {
    if (c.dom[g] != c.cod[f]) return std::nullopt;
    return c.comp[g][f];
}

std::size_t must_compose(const FiniteCategory& c, std::size_t g, std::size_t f) {
    const auto h = compose(c, g, f);
    if (!h) throw Error(ErrorKind::LawViolation, c.morphisms[g] + " o " + c.morphisms[f] + " is undefined");
    return *h;
}

// Odometer over the product of the given ranges.
void for_each_choice(const std::vector<std::vector<std::size_t>>& options,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
    for (const auto& o : options)
        if (o.empty()) return;
    std::vector<std::size_t> idx(options.size(), 0);
    std::vector<std::size_t> pick(options.size());
    while (true) {
        for (std::size_t i = 0; i < options.size(); ++i) pick[i] = options[i][idx[i]];
        visit(pick);
        std::size_t i = 0;
        while (i < options.size() && idx[i] + 1 == options[i].size()) idx[i++] = 0;
        if (i == options.size()) return;
        ++idx[i];
    }
}

Matrix point(std::size_t n, std::size_t i) { return Matrix::unit_column(n, i); }

}  // namespace

std::vector<std::size_t> FiniteCategory::hom(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < morphisms.size(); ++f)
        if (dom[f] == a && cod[f] == b) out.push_back(f);
    return out;
}

FiniteCategory finite_category(std::string name, std::vector<std::string> objects,
                               std::vector<std::tuple<std::string, std::size_t, std::size_t>> arrows,
                               const std::vector<std::tuple<std::string, std::string, std::string>>& table) {
    FiniteCategory c;
    c.name = std::move(name);
    c.objects = std::move(objects);
    for (std::size_t i = 0; i < c.objects.size(); ++i) {
        c.identity.push_back(c.morphisms.size());
        c.morphisms.push_back("id_" + c.objects[i]);
        c.dom.push_back(i);
        c.cod.push_back(i);
    }
    for (auto& [n, d, t] : arrows) {
        if (d >= c.objects.size() || t >= c.objects.size())
            throw Error(ErrorKind::UnresolvedReference, "arrow " + n + " has an unknown endpoint");
        c.morphisms.push_back(n);
        c.dom.push_back(d);
        c.cod.push_back(t);
    }
    const std::size_t n = c.morphisms.size();
    c.comp.assign(n, std::vector<std::optional<std::size_t>>(n));
    for (std::size_t f = 0; f < n; ++f) {
        c.comp[c.identity[c.cod[f]]][f] = f;
        c.comp[f][c.identity[c.dom[f]]] = f;
    }
    for (const auto& [g, f, h] : table)
        c.comp[find_name(c.morphisms, g)][find_name(c.morphisms, f)] = find_name(c.morphisms, h);
    return c;
}

FiniteCategory chain_category(std::size_t n) {
    std::vector<std::string> objs;
    for (std::size_t i = 0; i < n; ++i) objs.push_back(std::to_string(i));
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> arrows;
    const auto arrow = [](std::size_t i, std::size_t j) { return std::to_string(i) + "<" + std::to_string(j); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) arrows.emplace_back(arrow(i, j), i, j);
    std::vector<std::tuple<std::string, std::string, std::string>> table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) table.emplace_back(arrow(j, k), arrow(i, j), arrow(i, k));
    return finite_category("chain" + std::to_string(n), objs, arrows, table);
}

FiniteCategory discrete_category(std::size_t n) {
    std::vector<std::string> objs;
    for (std::size_t i = 0; i < n; ++i) objs.push_back(std::to_string(i));
    return finite_category("discrete" + std::to_string(n), objs, {}, {});
}

FiniteCategory cyclic_group_category(std::size_t n) {
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> arrows;
    for (std::size_t i = 1; i < n; ++i) arrows.emplace_back("g" + std::to_string(i), 0, 0);
    const auto name = [](std::size_t i) { return i == 0 ? std::string("id_*") : "g" + std::to_string(i); };
    std::vector<std::tuple<std::string, std::string, std::string>> table;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) table.emplace_back(name(i), name(j), name((i + j) % n));
    return finite_category("Z/" + std::to_string(n), {"*"}, arrows, table);
}

Report verify_finite_category(const FiniteCategory& c) {
    Report r("finite category " + c.name);
    const std::size_t n = c.morphisms.size();
    bool closed = true, typed = true, assoc = true, unital = true;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f) {
            const auto h = compose(c, g, f);
            if (c.dom[g] != c.cod[f]) continue;
            if (!h) {
                closed = false;
                continue;
            }
            if (c.dom[*h] != c.dom[f] || c.cod[*h] != c.cod[g]) typed = false;
        }
    r.add("composition total", "g o f defined when dom g = cod f", closed);
    r.add("composition typed", "dom(g o f) = dom f, cod(g o f) = cod g", typed);
    if (closed && typed) {
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t f = 0; f < n; ++f) {
                    if (c.dom[h] != c.cod[g] || c.dom[g] != c.cod[f]) continue;
                    if (*compose(c, h, *compose(c, g, f)) != *compose(c, *compose(c, h, g), f)) assoc = false;
                }
        for (std::size_t f = 0; f < n; ++f)
            if (*compose(c, c.identity[c.cod[f]], f) != f || *compose(c, f, c.identity[c.dom[f]]) != f) unital = false;
    }
    r.add("associativity", "h o (g o f) = (h o g) o f", closed && typed && assoc);
    r.add("identities", "id o f = f = f o id", closed && typed && unital);
    return r;
}

Report verify_set_monad(const FiniteCategory& c, const SetMonad& t) {
    Report r("monad on " + c.name);
    const std::size_t no = c.objects.size();
    const std::size_t nm = c.morphisms.size();
    if (t.obj.size() != no || t.mor.size() != nm || t.eta.size() != no || t.mu.size() != no)
        throw Error(ErrorKind::ShapeMismatch, "verify_set_monad");
    bool typed = true;
    for (std::size_t f = 0; f < nm; ++f)
        if (c.dom[t.mor[f]] != t.obj[c.dom[f]] || c.cod[t.mor[f]] != t.obj[c.cod[f]]) typed = false;
    for (std::size_t a = 0; a < no; ++a) {
        if (c.dom[t.eta[a]] != a || c.cod[t.eta[a]] != t.obj[a]) typed = false;
        if (c.dom[t.mu[a]] != t.obj[t.obj[a]] || c.cod[t.mu[a]] != t.obj[a]) typed = false;
    }
    r.add("typed", "T f: Ta -> Tb, eta_a: a -> Ta, mu_a: TTa -> Ta", typed);
    if (!typed) return r;
    bool functor = true, nat = true, assoc = true, unit = true;
    for (std::size_t a = 0; a < no; ++a)
        if (t.mor[c.identity[a]] != c.identity[t.obj[a]]) functor = false;
    for (std::size_t g = 0; g < nm; ++g)
        for (std::size_t f = 0; f < nm; ++f)
            if (c.dom[g] == c.cod[f] && t.mor[must_compose(c, g, f)] != must_compose(c, t.mor[g], t.mor[f]))
                functor = false;
    for (std::size_t f = 0; f < nm; ++f) {
        const std::size_t a = c.dom[f], b = c.cod[f];
        if (must_compose(c, t.mor[f], t.eta[a]) != must_compose(c, t.eta[b], f)) nat = false;
        if (must_compose(c, t.mor[f], t.mu[a]) != must_compose(c, t.mu[b], t.mor[t.mor[f]])) nat = false;
    }
    for (std::size_t a = 0; a < no; ++a) {
        const std::size_t ta = t.obj[a];
        if (must_compose(c, t.mu[a], t.mor[t.mu[a]]) != must_compose(c, t.mu[a], t.mu[ta])) assoc = false;
        if (must_compose(c, t.mu[a], t.eta[ta]) != c.identity[ta]) unit = false;
        if (must_compose(c, t.mu[a], t.mor[t.eta[a]]) != c.identity[ta]) unit = false;
    }
    r.add("functor", "T(g o f) = Tg o Tf, T id = id", functor);
    r.add("naturality", "Tf eta_a = eta_b f, Tf mu_a = mu_b TTf", nat);
    r.add("associativity", "mu T(mu) = mu mu_T", assoc);
    r.add("unit", "mu eta_T = id = mu T(eta)", unit);
    return r;
}

SetMonad identity_set_monad(const FiniteCategory& c) {
    SetMonad t;
    for (std::size_t a = 0; a < c.objects.size(); ++a) t.obj.push_back(a);
    for (std::size_t f = 0; f < c.morphisms.size(); ++f) t.mor.push_back(f);
    t.eta = c.identity;
    t.mu = c.identity;
    return t;
}

std::vector<SetMonad> enumerate_set_monads(const FiniteCategory& c) {
    const std::size_t no = c.objects.size();
    std::vector<std::vector<std::size_t>> obj_opts(no);
    for (auto& o : obj_opts)
        for (std::size_t b = 0; b < no; ++b) o.push_back(b);
    std::vector<SetMonad> out;
    for_each_choice(obj_opts, [&](const std::vector<std::size_t>& obj) {
        std::vector<std::vector<std::size_t>> mor_opts;
        for (std::size_t f = 0; f < c.morphisms.size(); ++f) mor_opts.push_back(c.hom(obj[c.dom[f]], obj[c.cod[f]]));
        std::vector<std::vector<std::size_t>> eta_opts, mu_opts;
        for (std::size_t a = 0; a < no; ++a) {
            eta_opts.push_back(c.hom(a, obj[a]));
            mu_opts.push_back(c.hom(obj[obj[a]], obj[a]));
        }
        for_each_choice(mor_opts, [&](const std::vector<std::size_t>& mor) {
            for_each_choice(eta_opts, [&](const std::vector<std::size_t>& eta) {
                for_each_choice(mu_opts, [&](const std::vector<std::size_t>& mu) {
                    SetMonad t{obj, mor, eta, mu};
                    if (verify_set_monad(c, t).ok()) out.push_back(std::move(t));
                });
            });
        });
    });
    return out;
}

FiniteCategory classical_kleisli(const FiniteCategory& c, const SetMonad& t) {
    const Report vc = verify_finite_category(c);
    const Report vt = verify_set_monad(c, t);
    if (!vc.ok() || !vt.ok()) throw Error(ErrorKind::LawViolation, "classical_kleisli: bad input\n" + vc.text() + vt.text());
    FiniteCategory k;
    k.name = c.name + "_T";
    k.objects = c.objects;
    // Morphism (f, b) for f: a -> Tb, ordered by b then f.
    std::vector<std::pair<std::size_t, std::size_t>> under;
    for (std::size_t b = 0; b < c.objects.size(); ++b)
        for (std::size_t f = 0; f < c.morphisms.size(); ++f)
            if (c.cod[f] == t.obj[b]) {
                under.emplace_back(f, b);
                k.morphisms.push_back(c.morphisms[f] + ">" + c.objects[b]);
                k.dom.push_back(c.dom[f]);
                k.cod.push_back(b);
            }
    const auto index = [&](std::size_t f, std::size_t b) {
        const auto it = std::find(under.begin(), under.end(), std::make_pair(f, b));
        return static_cast<std::size_t>(it - under.begin());
    };
    for (std::size_t a = 0; a < c.objects.size(); ++a) k.identity.push_back(index(t.eta[a], a));
    const std::size_t n = under.size();
    k.comp.assign(n, std::vector<std::optional<std::size_t>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto [g, cb] = under[i];
            const auto [f, bb] = under[j];
            if (k.dom[i] != bb) continue;
            // g . f = mu_c T(g) f
            const std::size_t h = must_compose(c, t.mu[cb], must_compose(c, t.mor[g], f));
            k.comp[i][j] = index(h, cb);
        }
    const Report vk = verify_finite_category(k);
    if (!vk.ok()) throw Error(ErrorKind::LawViolation, "classical_kleisli: result fails\n" + vk.text());
    return k;
}

CategoryPtr linearize(const FiniteCategory& c) {
    const Report v = verify_finite_category(c);
    if (!v.ok()) throw Error(ErrorKind::LawViolation, "linearize: " + v.text());
    const std::size_t no = c.objects.size();
    const std::size_t nm = c.morphisms.size();
    const ComonoidPtr k = grouplike_comonoid(no, {}, c.name + " objects");
    Matrix lambda(no * nm, nm), rho(nm * no, nm);
    for (std::size_t f = 0; f < nm; ++f) {
        lambda.set(c.cod[f] * nm + f, f, 1);
        rho.set(f * no + c.dom[f], f, 1);
    }
    Bicomodule a{c.name, k, k, lambda, rho};
    const Space pairs = cotensor_space({&a, &a});
    Matrix ambient(nm, nm * nm);
    for (std::size_t g = 0; g < nm; ++g)
        for (std::size_t f = 0; f < nm; ++f)
            if (const auto h = compose(c, g, f)) ambient.set(*h, g * nm + f, 1);
    Matrix unit(nm, no);
    for (std::size_t x = 0; x < no; ++x) unit.set(c.identity[x], x, 1);
    return make_category(c.name, k, a, ambient * pairs.incl, unit);
}

Monad linearize_monad(const FiniteCategory& c, const SetMonad& t) {
    const Report v = verify_set_monad(c, t);
    if (!v.ok()) throw Error(ErrorKind::LawViolation, "linearize_monad: " + v.text());
    const CategoryPtr lc = linearize(c);
    const std::size_t no = c.objects.size();
    const std::size_t nm = c.morphisms.size();
    Matrix t0(no, no), t1(nm, nm), mu(nm, no), eta(nm, no);
    for (std::size_t a = 0; a < no; ++a) {
        t0.set(t.obj[a], a, 1);
        mu.set(t.mu[a], a, 1);
        eta.set(t.eta[a], a, 1);
    }
    for (std::size_t f = 0; f < nm; ++f) t1.set(t.mor[f], f, 1);
    const FunctorPtr tf = make_functor("T", lc, lc, t0, t1);
    return Monad{tf, NatTrans{"mu", compose_functors(tf, tf), tf, mu}, NatTrans{"eta", identity_functor(lc), tf, eta}};
}

Report compare(const InternalCategory& internal, const FiniteCategory& classical) {
    const std::size_t no = classical.objects.size();
    const std::size_t nm = classical.morphisms.size();
    if (internal.C->dim() != no || internal.A.dim() != nm)
        throw Error(ErrorKind::Mismatch, "compare: " + std::to_string(internal.C->dim()) + " objects and " +
                                             std::to_string(internal.A.dim()) + " morphisms against " +
                                             std::to_string(no) + " and " + std::to_string(nm));
    if (!same_comonoid(*internal.C, *grouplike_comonoid(no, internal.field())))
        throw Error(ErrorKind::Mismatch, "compare: object coalgebra is not grouplike on the standard basis");

    // Signature of each internal basis vector from its coactions.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> internal_class, classical_class;
    for (std::size_t i = 0; i < nm; ++i) {
        std::optional<std::size_t> d, t;
        for (std::size_t x = 0; x < no; ++x) {
            if (internal.A.lambda.col(i) == tensor(point(no, x), point(nm, i))) t = x;
            if (internal.A.rho.col(i) == tensor(point(nm, i), point(no, x))) d = x;
        }
        if (!d || !t) throw Error(ErrorKind::Mismatch, "compare: basis vector " + std::to_string(i) + " is not a morphism");
        internal_class[{*d, *t}].push_back(i);
    }
    for (std::size_t f = 0; f < nm; ++f) classical_class[{classical.dom[f], classical.cod[f]}].push_back(f);
    for (const auto& [sig, fs] : classical_class) {
        const auto it = internal_class.find(sig);
        if (it == internal_class.end() || it->second.size() != fs.size())
            throw Error(ErrorKind::Mismatch, "compare: hom-set " + classical.objects[sig.first] + " -> " +
                                                 classical.objects[sig.second] + " has a different size");
    }

    std::vector<std::vector<std::size_t>> perms;  // one permutation per class
    std::vector<std::pair<std::size_t, std::size_t>> sigs;
    for (const auto& [sig, fs] : classical_class) {
        sigs.push_back(sig);
        perms.push_back(internal_class[sig]);
    }
    std::string first_diff;
    const auto check = [&](const std::vector<std::size_t>& sigma) -> bool {
        for (std::size_t x = 0; x < no; ++x) {
            if (!(internal.unit.col(x) == point(nm, sigma[classical.identity[x]]))) {
                if (first_diff.empty()) first_diff = "unit at object " + classical.objects[x];
                return false;
            }
        }
        for (std::size_t g = 0; g < nm; ++g)
            for (std::size_t f = 0; f < nm; ++f) {
                const auto h = compose(classical, g, f);
                if (!h) continue;
                const Matrix pair = internal.pairs.coords(tensor(point(nm, sigma[g]), point(nm, sigma[f])));
                if (!(internal.mult * pair == point(nm, sigma[*h]))) {
                    if (first_diff.empty())
                        first_diff = "composite " + classical.morphisms[g] + " o " + classical.morphisms[f];
                    return false;
                }
            }
        return true;
    };

    std::vector<std::size_t> sigma(nm);
    std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
        if (k == sigs.size()) return check(sigma);
        auto& p = perms[k];
        std::sort(p.begin(), p.end());
        do {
            const auto& fs = classical_class[sigs[k]];
            for (std::size_t i = 0; i < fs.size(); ++i) sigma[fs[i]] = p[i];
            if (search(k + 1)) return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    };
    if (!search(0)) throw Error(ErrorKind::Mismatch, "compare: no basis bijection matches; first differing entry: " + first_diff);

    Report r("oracle comparison " + internal.name + " ~ " + classical.name);
    std::string note;
    for (std::size_t f = 0; f < nm; ++f)
        note += (f ? ", " : "") + classical.morphisms[f] + "->" + std::to_string(sigma[f]);
    r.add("basis bijection", "m and u match the linearized tables", true, note);
    return r;
}

}  // namespace icat
