#include "icat/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <sstream>

namespace icat::io {
namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
    throw Error(ErrorKind::ParseError, path + ": " + msg);
}

std::string detail(const Error& e) {
    const std::string what = e.what();
    const std::string prefix = std::string(error_name(e.kind())) + ": ";
    return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

// Runs f, attaching `path` to errors that do not carry one yet.
template <class F>
auto at(const std::string& path, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::UnresolvedReference) throw;
        throw Error(e.kind(), path + ": " + detail(e));
    } catch (const json::exception& e) {
        bad(path, e.what());
    }
}

void expect_keys(const json& o, std::initializer_list<const char*> keys, const std::string& path) {
    if (!o.is_object()) bad(path, "expected an object");
    for (const auto& [k, v] : o.items())
        if (std::none_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; }))
            bad(path, "unexpected key \"" + k + "\"");
}

const json& member(const json& o, const std::string& key, const std::string& path) {
    if (!o.is_object()) bad(path, "expected an object");
    const auto it = o.find(key);
    if (it == o.end()) bad(path, "missing \"" + key + "\"");
    return *it;
}

std::string text(const json& o, const std::string& key, const std::string& path) {
    const json& v = member(o, key, path);
    if (!v.is_string()) bad(path + "/" + key, "expected a string");
    return v.get<std::string>();
}

std::size_t index(const json& v, const std::string& path) {
    if (!v.is_number_unsigned()) bad(path, "expected a non-negative integer");
    return v.get<std::size_t>();
}

Scalar scalar(const json& v, Field f, const std::string& path) {
    try {
        if (v.is_number_integer()) return Scalar::parse(v.dump(), f);
        if (v.is_string()) return Scalar::parse(v.get<std::string>(), f);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + detail(e));
    }
    bad(path, "expected an integer or a \"p/q\" string");
}

bool is_scalar(const json& v) { return v.is_number_integer() || v.is_string(); }

Matrix matrix_at(const json& j, Field f, const std::string& path) {
    if (j.is_object()) {
        expect_keys(j, {"shape"}, path);
        const json& s = member(j, "shape", path);
        if (!s.is_array() || s.size() != 2) bad(path + "/shape", "expected [rows, cols]");
        return Matrix(index(s[0], path + "/shape/0"), index(s[1], path + "/shape/1"), f);
    }
    if (!j.is_array() || j.empty()) bad(path, "expected a non-empty array or {\"shape\": [r, c]}");
    if (std::all_of(j.begin(), j.end(), is_scalar)) {
        Matrix m(j.size(), 1, f);
        for (std::size_t i = 0; i < j.size(); ++i) m(i, 0) = scalar(j[i], f, path + "/" + std::to_string(i));
        return m;
    }
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) bad(path, "rows must be non-empty arrays");
    Matrix m(j.size(), cols, f);
    for (std::size_t r = 0; r < j.size(); ++r) {
        const std::string rp = path + "/" + std::to_string(r);
        if (!j[r].is_array() || j[r].size() != cols) bad(rp, "expected a row of length " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(j[r][c], f, rp + "/" + std::to_string(c));
    }
    return m;
}

Matrix mat(const json& o, const std::string& key, Field f, const std::string& path) {
    return matrix_at(member(o, key, path), f, path + "/" + key);
}

void expect_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& path) {
    if (m.rows() != rows || m.cols() != cols)
        throw Error(ErrorKind::ShapeMismatch, path + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                                                  ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

template <class M>
const typename M::mapped_type& lookup(const M& m, const json& o, const std::string& key, const char* kind,
                                      const std::string& path) {
    const std::string name = text(o, key, path);
    const auto it = m.find(name);
    if (it == m.end())
        throw Error(ErrorKind::UnresolvedReference, path + "/" + key + ": no " + kind + " named \"" + name + "\"");
    return it->second;
}

const json& section(const json& doc, const char* key) {
    static const json empty = json::object();
    const auto it = doc.find(key);
    if (it == doc.end()) return empty;
    if (!it->is_object()) bad(std::string("/") + key, "expected an object keyed by name");
    return *it;
}

std::size_t find_name(const std::vector<std::string>& names, const std::string& n, const std::string& path) {
    const auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw Error(ErrorKind::UnresolvedReference, path + ": unknown name \"" + n + "\"");
    return static_cast<std::size_t>(it - names.begin());
}

std::vector<std::string> names(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) bad(path + "/" + std::to_string(i), "expected a string");
        out.push_back(j[i].get<std::string>());
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        if (std::find(out.begin(), out.begin() + static_cast<long>(i), out[i]) != out.begin() + static_cast<long>(i))
            bad(path, "duplicate name \"" + out[i] + "\"");
    return out;
}

// [[name, a, b], ...] with a, b resolved against `objs`.
std::vector<std::tuple<std::string, std::size_t, std::size_t>> triples(const json& j,
                                                                        const std::vector<std::string>& objs,
                                                                        const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of [name, dom, cod]");
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "/" + std::to_string(i);
        const json& t = j[i];
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_string())
            bad(p, "expected [name, dom, cod]");
        out.emplace_back(t[0].get<std::string>(), find_name(objs, t[1].get<std::string>(), p),
                         find_name(objs, t[2].get<std::string>(), p));
    }
    return out;
}

std::vector<std::tuple<std::string, std::string, std::string>> table(const json& o, const std::string& path) {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    const auto it = o.find("compose");
    if (it == o.end()) return out;
    if (!it->is_array()) bad(path + "/compose", "expected an array of [g, f, g o f]");
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& t = (*it)[i];
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_string())
            bad(path + "/compose/" + std::to_string(i), "expected [g, f, g o f]");
        out.emplace_back(t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>());
    }
    return out;
}

FiniteCategory parse_finite_category(const std::string& name, const json& o, const std::string& path) {
    if (o.contains("arrows")) {
        expect_keys(o, {"objects", "arrows", "compose"}, path);
        const auto objs = names(member(o, "objects", path), path + "/objects");
        auto arrows = triples(o["arrows"], objs, path + "/arrows");
        const auto t = table(o, path);
        FiniteCategory c = finite_category(name, objs, arrows, {});
        for (std::size_t i = 0; i < c.morphisms.size(); ++i)
            for (std::size_t k = 0; k < i; ++k)
                if (c.morphisms[k] == c.morphisms[i]) bad(path + "/arrows", "duplicate name \"" + c.morphisms[i] + "\"");
        for (const auto& [g, f, h] : t) {
            const std::string p = path + "/compose";
            c.comp[find_name(c.morphisms, g, p)][find_name(c.morphisms, f, p)] = find_name(c.morphisms, h, p);
        }
        return c;
    }
    expect_keys(o, {"objects", "morphisms", "identity", "compose"}, path);
    FiniteCategory c;
    c.name = name;
    c.objects = names(member(o, "objects", path), path + "/objects");
    for (auto& [n, d, t] : triples(member(o, "morphisms", path), c.objects, path + "/morphisms")) {
        c.morphisms.push_back(n);
        c.dom.push_back(d);
        c.cod.push_back(t);
    }
    names(json(c.morphisms), path + "/morphisms");
    const json& ids = member(o, "identity", path);
    if (!ids.is_object() || ids.size() != c.objects.size()) bad(path + "/identity", "expected one identity per object");
    for (const auto& obj : c.objects) {
        const std::string p = path + "/identity";
        if (!ids.contains(obj) || !ids[obj].is_string()) bad(p, "missing identity of \"" + obj + "\"");
        c.identity.push_back(find_name(c.morphisms, ids[obj].get<std::string>(), p));
    }
    const std::size_t n = c.morphisms.size();
    c.comp.assign(n, std::vector<std::optional<std::size_t>>(n));
    for (std::size_t f = 0; f < n; ++f) {
        c.comp[c.identity[c.cod[f]]][f] = f;
        c.comp[f][c.identity[c.dom[f]]] = f;
    }
    for (const auto& [g, f, h] : table(o, path)) {
        const std::string p = path + "/compose";
        c.comp[find_name(c.morphisms, g, p)][find_name(c.morphisms, f, p)] = find_name(c.morphisms, h, p);
    }
    return c;
}

std::vector<std::size_t> name_map(const json& o, const std::string& key, const std::vector<std::string>& from,
                                  const std::vector<std::string>& to, const std::string& path) {
    const json& m = member(o, key, path);
    const std::string p = path + "/" + key;
    if (!m.is_object()) bad(p, "expected an object from names to names");
    std::vector<std::size_t> out;
    for (const auto& n : from) {
        if (!m.contains(n) || !m[n].is_string()) bad(p, "missing entry for \"" + n + "\"");
        out.push_back(find_name(to, m[n].get<std::string>(), p));
    }
    if (m.size() != from.size()) bad(p, "unexpected entries");
    return out;
}

Field declared_field(const json& doc) {
    const auto it = doc.find("field");
    if (it == doc.end()) {
        if (doc.contains("p")) bad("/p", "\"p\" without \"field\": \"Fp\"");
        return Field::rationals();
    }
    if (*it == "Q") {
        if (doc.contains("p")) bad("/p", "\"p\" is only meaningful with \"field\": \"Fp\"");
        return Field::rationals();
    }
    if (*it != "Fp") bad("/field", "expected \"Q\" or \"Fp\"");
    const auto p = doc.find("p");
    if (p == doc.end() || !p->is_number_unsigned()) bad("/p", "expected a prime");
    return at("/p", [&] { return Field::prime(p->get<std::uint64_t>()); });
}

// --- serialization helpers ---

json scalar_json(const Scalar& s) {
    const mpq_class& v = s.value();
    if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
    return s.str();
}

json vector_json(const Matrix& m) {
    if (m.cols() != 1 || m.rows() == 0) return to_json(m);
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(scalar_json(m(r, 0)));
    return out;
}

bool same_algebra(const Algebra& a, const Algebra& b) { return a.mult == b.mult && a.unit == b.unit; }

bool same_bicomodule(const Bicomodule& a, const Bicomodule& b) {
    return same_comonoid(*a.left, *b.left) && same_comonoid(*a.right, *b.right) && a.lambda == b.lambda &&
           a.rho == b.rho;
}

bool same_finite(const FiniteCategory& a, const FiniteCategory& b) {
    return a.objects == b.objects && a.morphisms == b.morphisms && a.dom == b.dom && a.cod == b.cod &&
           a.identity == b.identity && a.comp == b.comp;
}

bool same_sweedler(const Sweedler& a, const Sweedler& b) {
    return same_algebra(*a.a, *b.a) && same_algebra(*a.b, *b.b) && a.incl == b.incl;
}

template <class T>
const T& deref(const std::shared_ptr<const T>& p) {
    return *p;
}
template <class T>
const T& deref(const T& v) {
    return v;
}
template <class T>
bool same_handle(const std::shared_ptr<const T>& a, const std::shared_ptr<const T>& b) {
    return a == b;
}
template <class T>
bool same_handle(const T&, const T&) {
    return false;
}

// Key of the entry holding v: the same object, else an equal one with the
// same name, else any equal one.
template <class V, class Same>
std::optional<std::string> find_key(const std::map<std::string, V>& m, const V& v, const std::string& name,
                                    Same same) {
    for (const auto& [k, x] : m)
        if (same_handle(x, v)) return k;
    for (const auto& [k, x] : m)
        if (k == name && same(deref(x), deref(v))) return k;
    for (const auto& [k, x] : m)
        if (same(deref(x), deref(v))) return k;
    return std::nullopt;
}

template <class V, class Same>
std::string ref(const std::map<std::string, V>& m, const V& v, const std::string& name, Same same, const char* kind) {
    if (auto k = find_key(m, v, name, same)) return *k;
    throw Error(ErrorKind::UnresolvedReference, std::string("serialize: ") + kind + " \"" + name + "\" is not in the document");
}

template <class V, class Same>
std::string insert(std::map<std::string, V>& m, const V& v, const std::string& name, const char* fallback, Same same) {
    if (auto k = find_key(m, v, name, same)) return *k;
    const std::string base = name.empty() ? fallback : name;
    std::string key = base;
    for (int i = 2; m.count(key); ++i) key = base + "_" + std::to_string(i);
    m.emplace(key, v);
    return key;
}

bool same_functor_ptr(const InternalFunctor& a, const InternalFunctor& b) { return same_functor(a, b); }
bool same_cofunctor_ptr(const Cofunctor& a, const Cofunctor& b) { return same_cofunctor(a, b); }
bool same_category_ptr(const InternalCategory& a, const InternalCategory& b) { return same_category(a, b); }
bool same_comonoid_ptr(const Comonoid& a, const Comonoid& b) { return same_comonoid(a, b); }
bool same_coring_val(const Coring& a, const Coring& b) { return same_coring(a, b); }

struct Refs {
    const Document& d;
    std::string comonoid(const ComonoidPtr& c) const { return ref(d.comonoids, c, c->name, same_comonoid_ptr, "comonoid"); }
    std::string category(const CategoryPtr& c) const { return ref(d.categories, c, c->name, same_category_ptr, "category"); }
    std::string functor(const FunctorPtr& f) const { return ref(d.functors, f, f->name, same_functor_ptr, "functor"); }
    std::string cofunctor(const CofunctorPtr& f) const {
        return ref(d.cofunctors, f, f->name, same_cofunctor_ptr, "cofunctor");
    }
    std::string algebra(const AlgebraPtr& a) const { return ref(d.algebras, a, a->name, same_algebra, "algebra"); }
    std::string coring(const Coring& c) const { return ref(d.corings, c, c.name, same_coring_val, "coring"); }
    std::string sweedler(const SweedlerPtr& s) const { return ref(d.sweedlers, s, "", same_sweedler, "Sweedler coring"); }
};

}  // namespace

Field parse_field(const std::string& t) {
    if (t == "Q") return Field::rationals();
    std::string digits;
    if (t.rfind("Fp:", 0) == 0)
        digits = t.substr(3);
    else if (t.size() > 1 && t[0] == 'F')
        digits = t.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        digits.size() > 18)
        throw Error(ErrorKind::ParseError, "field \"" + t + "\": expected Q, Fp:<prime> or F<prime>");
    return Field::prime(std::stoull(digits));
}

json to_json(const Matrix& m) {
    if (m.empty()) return json{{"shape", {m.rows(), m.cols()}}};
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const json& j, Field f) { return matrix_at(j, f, ""); }

Document parse(const std::string& src, std::optional<Field> field, std::optional<Field> fallback) {
    json j;
    try {
        j = json::parse(src);
    } catch (const json::parse_error& e) {
        const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, src.size());
        const std::size_t line = 1 + static_cast<std::size_t>(std::count(src.begin(), src.begin() + static_cast<long>(pos), '\n'));
        const std::size_t nl = src.rfind('\n', pos == 0 ? std::string::npos : pos - 1);
        const std::size_t col = nl == std::string::npos || pos == 0 ? pos + 1 : pos - nl;
        std::string msg = e.what();
        if (const auto k = msg.find("syntax error"); k != std::string::npos) msg = msg.substr(k);
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    }
    if (!j.is_object()) bad("/", "a document is a JSON object");
    expect_keys(j, {"field", "p", "comonoids", "bicomodules", "categories", "functors", "cofunctors", "naturals",
                    "cotransformations", "monads", "comonads", "opmonads", "adjunctions", "talgebras", "algebras",
                    "bimodules", "corings", "sweedlers", "sweedler_data", "twisting", "hopf_galois",
                    "finite_categories", "set_monads", "matrices", "tasks"},
                "/");

    Document d;
    const Field declared = declared_field(j);
    d.field = field ? *field : !j.contains("field") && fallback ? *fallback : declared;
    const Field f = d.field;

    for (const auto& [k, v] : section(j, "comonoids").items()) {
        const std::string p = "/comonoids/" + k;
        expect_keys(v, {"delta", "counit"}, p);
        d.comonoids[k] = at(p, [&] {
            const Matrix counit = mat(v, "counit", f, p);
            const Matrix delta = mat(v, "delta", f, p);
            expect_shape(counit, 1, counit.cols(), p + "/counit");
            expect_shape(delta, counit.cols() * counit.cols(), counit.cols(), p + "/delta");
            return make_comonoid(delta, counit, k);
        });
    }

    const auto bicomodule = [&](const std::string& name, const ComonoidPtr& l, const ComonoidPtr& r, const json& v,
                                const std::string& p) {
        const Matrix lambda = mat(v, "lambda", f, p);
        const Matrix rho = mat(v, "rho", f, p);
        expect_shape(lambda, l->dim() * lambda.cols(), lambda.cols(), p + "/lambda");
        expect_shape(rho, lambda.cols() * r->dim(), lambda.cols(), p + "/rho");
        return Bicomodule{name, l, r, lambda, rho};
    };

    for (const auto& [k, v] : section(j, "bicomodules").items()) {
        const std::string p = "/bicomodules/" + k;
        expect_keys(v, {"left", "right", "lambda", "rho"}, p);
        d.bicomodules[k] = at(p, [&] {
            return bicomodule(k, lookup(d.comonoids, v, "left", "comonoid", p),
                              lookup(d.comonoids, v, "right", "comonoid", p), v, p);
        });
    }

    for (const auto& [k, v] : section(j, "categories").items()) {
        const std::string p = "/categories/" + k;
        expect_keys(v, {"C", "A", "mult", "unit"}, p);
        d.categories[k] = at(p, [&] {
            const ComonoidPtr c = lookup(d.comonoids, v, "C", "comonoid", p);
            const json& a = member(v, "A", p);
            Bicomodule am;
            if (a.is_string()) {
                am = lookup(d.bicomodules, v, "A", "bicomodule", p);
            } else {
                expect_keys(a, {"lambda", "rho"}, p + "/A");
                am = bicomodule("A", c, c, a, p + "/A");
            }
            return make_category(k, c, am, mat(v, "mult", f, p), mat(v, "unit", f, p));
        });
    }

    for (const auto& [k, v] : section(j, "functors").items()) {
        const std::string p = "/functors/" + k;
        expect_keys(v, {"src", "dst", "f0", "f1"}, p);
        d.functors[k] = at(p, [&] {
            return make_functor(k, lookup(d.categories, v, "src", "category", p),
                                lookup(d.categories, v, "dst", "category", p), mat(v, "f0", f, p), mat(v, "f1", f, p));
        });
    }

    for (const auto& [k, v] : section(j, "cofunctors").items()) {
        const std::string p = "/cofunctors/" + k;
        expect_keys(v, {"src", "dst", "f0", "f1"}, p);
        d.cofunctors[k] = at(p, [&] {
            return make_cofunctor(k, lookup(d.categories, v, "src", "category", p),
                                  lookup(d.categories, v, "dst", "category", p), mat(v, "f0", f, p),
                                  mat(v, "f1", f, p));
        });
    }

    // alpha: C -> B for functors (C, A) -> (D, B).
    const auto nat = [&](const std::string& name, FunctorPtr s, FunctorPtr t, const json& v, const char* key,
                         const std::string& p) {
        Matrix alpha = mat(v, key, f, p);
        expect_shape(alpha, s->dst->A.dim(), s->src->C->dim(), p + "/" + key);
        return NatTrans{name, std::move(s), std::move(t), std::move(alpha)};
    };
    // alpha: D -> B for cofunctors (C, A) -> (D, B).
    const auto cotrans = [&](const std::string& name, CofunctorPtr s, CofunctorPtr t, const json& v, const char* key,
                             const std::string& p) {
        Matrix alpha = mat(v, key, f, p);
        expect_shape(alpha, s->dst->A.dim(), s->dst->C->dim(), p + "/" + key);
        return Cotrans{name, std::move(s), std::move(t), std::move(alpha)};
    };

    for (const auto& [k, v] : section(j, "naturals").items()) {
        const std::string p = "/naturals/" + k;
        expect_keys(v, {"source", "target", "alpha"}, p);
        d.naturals[k] = at(p, [&] {
            return nat(k, lookup(d.functors, v, "source", "functor", p), lookup(d.functors, v, "target", "functor", p),
                       v, "alpha", p);
        });
    }

    for (const auto& [k, v] : section(j, "cotransformations").items()) {
        const std::string p = "/cotransformations/" + k;
        expect_keys(v, {"source", "target", "alpha"}, p);
        d.cotransformations[k] = at(p, [&] {
            return cotrans(k, lookup(d.cofunctors, v, "source", "cofunctor", p),
                           lookup(d.cofunctors, v, "target", "cofunctor", p), v, "alpha", p);
        });
    }

    for (const auto& [k, v] : section(j, "monads").items()) {
        const std::string p = "/monads/" + k;
        expect_keys(v, {"t", "mu", "eta"}, p);
        d.monads[k] = at(p, [&] {
            const FunctorPtr t = lookup(d.functors, v, "t", "functor", p);
            return Monad{t, nat("mu", compose_functors(t, t), t, v, "mu", p),
                         nat("eta", identity_functor(t->src), t, v, "eta", p)};
        });
    }

    for (const auto& [k, v] : section(j, "comonads").items()) {
        const std::string p = "/comonads/" + k;
        expect_keys(v, {"g", "delta", "eps"}, p);
        d.comonads[k] = at(p, [&] {
            const FunctorPtr g = lookup(d.functors, v, "g", "functor", p);
            return Comonad{g, nat("delta", g, compose_functors(g, g), v, "delta", p),
                           nat("eps", g, identity_functor(g->src), v, "eps", p)};
        });
    }

    for (const auto& [k, v] : section(j, "opmonads").items()) {
        const std::string p = "/opmonads/" + k;
        expect_keys(v, {"t", "mu", "eta"}, p);
        d.opmonads[k] = at(p, [&] {
            const CofunctorPtr t = lookup(d.cofunctors, v, "t", "cofunctor", p);
            return Opmonad{t, cotrans("mu", compose_cofunctors(t, t), t, v, "mu", p),
                           cotrans("eta", identity_cofunctor(t->src), t, v, "eta", p)};
        });
    }

    for (const auto& [k, v] : section(j, "adjunctions").items()) {
        const std::string p = "/adjunctions/" + k;
        expect_keys(v, {"l", "r", "eps", "eta"}, p);
        d.adjunctions[k] = at(p, [&] {
            const FunctorPtr l = lookup(d.functors, v, "l", "functor", p);
            const FunctorPtr r = lookup(d.functors, v, "r", "functor", p);
            return Adjunction{l, r, nat("eps", compose_functors(l, r), identity_functor(l->dst), v, "eps", p),
                              nat("eta", identity_functor(l->src), compose_functors(r, l), v, "eta", p)};
        });
    }

    for (const auto& [k, v] : section(j, "talgebras").items()) {
        const std::string p = "/talgebras/" + k;
        expect_keys(v, {"monad", "y", "sigma"}, p);
        d.talgebras[k] = at(p, [&] {
            const Monad& m = lookup(d.monads, v, "monad", "monad", p);
            const FunctorPtr y = lookup(d.functors, v, "y", "functor", p);
            return TAlgebraDef{text(v, "monad", p), TAlgebra{y, nat("sigma", compose_functors(y, m.t), y, v, "sigma", p)}};
        });
    }

    for (const auto& [k, v] : section(j, "algebras").items()) {
        const std::string p = "/algebras/" + k;
        expect_keys(v, {"mult", "unit"}, p);
        d.algebras[k] = at(p, [&] { return make_algebra(mat(v, "mult", f, p), mat(v, "unit", f, p), k); });
    }

    const auto bimodule = [&](const std::string& name, const AlgebraPtr& l, const AlgebraPtr& r, const json& v,
                              const std::string& p) {
        const Matrix lact = mat(v, "lact", f, p);
        const Matrix ract = mat(v, "ract", f, p);
        expect_shape(lact, lact.rows(), l->dim() * lact.rows(), p + "/lact");
        expect_shape(ract, lact.rows(), lact.rows() * r->dim(), p + "/ract");
        return Bimodule{name, l, r, lact, ract};
    };

    for (const auto& [k, v] : section(j, "bimodules").items()) {
        const std::string p = "/bimodules/" + k;
        expect_keys(v, {"left", "right", "lact", "ract"}, p);
        d.bimodules[k] = at(p, [&] {
            return bimodule(k, lookup(d.algebras, v, "left", "algebra", p), lookup(d.algebras, v, "right", "algebra", p),
                            v, p);
        });
    }

    for (const auto& [k, v] : section(j, "corings").items()) {
        const std::string p = "/corings/" + k;
        expect_keys(v, {"base", "carrier", "delta", "counit"}, p);
        d.corings.emplace(k, at(p, [&] {
            const AlgebraPtr base = lookup(d.algebras, v, "base", "algebra", p);
            const json& c = member(v, "carrier", p);
            Bimodule carrier;
            if (c.is_string()) {
                carrier = lookup(d.bimodules, v, "carrier", "bimodule", p);
            } else {
                expect_keys(c, {"lact", "ract"}, p + "/carrier");
                carrier = bimodule(k, base, base, c, p + "/carrier");
            }
            return make_coring(k, carrier, mat(v, "delta", f, p), mat(v, "counit", f, p));
        }));
    }

    for (const auto& [k, v] : section(j, "sweedlers").items()) {
        const std::string p = "/sweedlers/" + k;
        expect_keys(v, {"a", "b", "incl"}, p);
        d.sweedlers[k] = at(p, [&] {
            return sweedler_coring(lookup(d.algebras, v, "a", "algebra", p), lookup(d.algebras, v, "b", "algebra", p),
                                   mat(v, "incl", f, p));
        });
    }

    for (const auto& [k, v] : section(j, "sweedler_data").items()) {
        const std::string p = "/sweedler_data/" + k;
        expect_keys(v, {"sweedler", "t", "m", "u"}, p);
        d.sweedler_data.emplace(k, at(p, [&] {
            const SweedlerPtr sw = lookup(d.sweedlers, v, "sweedler", "Sweedler coring", p);
            SweedlerMonadData data{sw, mat(v, "t", f, p), mat(v, "m", f, p), mat(v, "u", f, p)};
            expect_shape(data.t, sw->q.dim(), 1, p + "/t");
            expect_shape(data.m, sw->a->dim(), 1, p + "/m");
            expect_shape(data.u, sw->a->dim(), 1, p + "/u");
            return data;
        }));
    }

    for (const auto& [k, v] : section(j, "twisting").items()) {
        const std::string p = "/twisting/" + k;
        expect_keys(v, {"c", "d", "l", "r", "theta"}, p);
        d.twisting.emplace(k, at(p, [&] {
            const Coring& c = lookup(d.corings, v, "c", "coring", p);
            const Coring& dd = lookup(d.corings, v, "d", "coring", p);
            TwistingDatum td{c, dd, mat(v, "l", f, p), mat(v, "r", f, p), mat(v, "theta", f, p)};
            expect_shape(td.l, c.dim(), dd.dim(), p + "/l");
            expect_shape(td.r, dd.dim(), c.dim(), p + "/r");
            expect_shape(td.theta, c.dim(), dd.dim(), p + "/theta");
            return td;
        }));
    }

    for (const auto& [k, v] : section(j, "hopf_galois").items()) {
        const std::string p = "/hopf_galois/" + k;
        expect_keys(v, {"h", "delta_h", "counit_h", "antipode", "a", "rho"}, p);
        d.hopf_galois.emplace(k, at(p, [&] {
            return make_hopf_galois(lookup(d.algebras, v, "h", "algebra", p), mat(v, "delta_h", f, p),
                                    mat(v, "counit_h", f, p), mat(v, "antipode", f, p),
                                    lookup(d.algebras, v, "a", "algebra", p), mat(v, "rho", f, p));
        }));
    }

    for (const auto& [k, v] : section(j, "finite_categories").items())
        d.finite_categories.emplace(k, at("/finite_categories/" + k, [&, k = k] {
            return parse_finite_category(k, v, "/finite_categories/" + k);
        }));

    for (const auto& [k, v] : section(j, "set_monads").items()) {
        const std::string p = "/set_monads/" + k;
        expect_keys(v, {"category", "obj", "mor", "eta", "mu"}, p);
        d.set_monads.emplace(k, at(p, [&] {
            const FiniteCategory& c = lookup(d.finite_categories, v, "category", "finite category", p);
            SetMonad t{name_map(v, "obj", c.objects, c.objects, p), name_map(v, "mor", c.morphisms, c.morphisms, p),
                       name_map(v, "eta", c.objects, c.morphisms, p), name_map(v, "mu", c.objects, c.morphisms, p)};
            return SetMonadDef{text(v, "category", p), t};
        }));
    }

    for (const auto& [k, v] : section(j, "matrices").items())
        d.matrices.emplace(k, matrix_at(v, f, "/matrices/" + k));

    for (const auto& [k, v] : section(j, "tasks").items()) {
        const std::string p = "/tasks/" + k;
        text(v, "command", p);
        d.tasks[k] = v;
    }
    return d;
}

Document load(const std::string& path, std::optional<Field> field, std::optional<Field> fallback) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), field, fallback);
}

json serialize(const Document& d) {
    const Refs refs{d};
    json j = json::object();
    if (d.field.is_rational()) {
        j["field"] = "Q";
    } else {
        j["field"] = "Fp";
        j["p"] = d.field.characteristic();
    }
    const auto put = [&](const char* sec, const std::string& k, json v) { j[sec][k] = std::move(v); };

    for (const auto& [k, c] : d.comonoids) put("comonoids", k, {{"delta", to_json(c->delta)}, {"counit", to_json(c->counit)}});
    for (const auto& [k, m] : d.bicomodules)
        put("bicomodules", k,
            {{"left", refs.comonoid(m.left)}, {"right", refs.comonoid(m.right)}, {"lambda", to_json(m.lambda)},
             {"rho", to_json(m.rho)}});
    for (const auto& [k, c] : d.categories)
        put("categories", k,
            {{"C", refs.comonoid(c->C)},
             {"A", {{"lambda", to_json(c->A.lambda)}, {"rho", to_json(c->A.rho)}}},
             {"mult", to_json(c->mult)},
             {"unit", to_json(c->unit)}});
    for (const auto& [k, x] : d.functors)
        put("functors", k,
            {{"src", refs.category(x->src)}, {"dst", refs.category(x->dst)}, {"f0", to_json(x->f0)}, {"f1", to_json(x->f1)}});
    for (const auto& [k, x] : d.cofunctors)
        put("cofunctors", k,
            {{"src", refs.category(x->src)}, {"dst", refs.category(x->dst)}, {"f0", to_json(x->f0)}, {"f1", to_json(x->f1)}});
    for (const auto& [k, a] : d.naturals)
        put("naturals", k,
            {{"source", refs.functor(a.source)}, {"target", refs.functor(a.target)}, {"alpha", to_json(a.alpha)}});
    for (const auto& [k, a] : d.cotransformations)
        put("cotransformations", k,
            {{"source", refs.cofunctor(a.source)}, {"target", refs.cofunctor(a.target)}, {"alpha", to_json(a.alpha)}});
    for (const auto& [k, m] : d.monads)
        put("monads", k, {{"t", refs.functor(m.t)}, {"mu", to_json(m.mu.alpha)}, {"eta", to_json(m.eta.alpha)}});
    for (const auto& [k, g] : d.comonads)
        put("comonads", k, {{"g", refs.functor(g.g)}, {"delta", to_json(g.delta.alpha)}, {"eps", to_json(g.eps.alpha)}});
    for (const auto& [k, t] : d.opmonads)
        put("opmonads", k, {{"t", refs.cofunctor(t.t)}, {"mu", to_json(t.mu.alpha)}, {"eta", to_json(t.eta.alpha)}});
    for (const auto& [k, a] : d.adjunctions)
        put("adjunctions", k,
            {{"l", refs.functor(a.l)}, {"r", refs.functor(a.r)}, {"eps", to_json(a.eps.alpha)}, {"eta", to_json(a.eta.alpha)}});
    for (const auto& [k, a] : d.talgebras)
        put("talgebras", k,
            {{"monad", a.monad}, {"y", refs.functor(a.algebra.y)}, {"sigma", to_json(a.algebra.sigma.alpha)}});
    for (const auto& [k, a] : d.algebras) put("algebras", k, {{"mult", to_json(a->mult)}, {"unit", to_json(a->unit)}});
    for (const auto& [k, m] : d.bimodules)
        put("bimodules", k,
            {{"left", refs.algebra(m.left)}, {"right", refs.algebra(m.right)}, {"lact", to_json(m.lact)},
             {"ract", to_json(m.ract)}});
    for (const auto& [k, c] : d.corings)
        put("corings", k,
            {{"base", refs.algebra(c.base)},
             {"carrier", {{"lact", to_json(c.carrier.lact)}, {"ract", to_json(c.carrier.ract)}}},
             {"delta", to_json(c.delta)},
             {"counit", to_json(c.counit)}});
    for (const auto& [k, s] : d.sweedlers)
        put("sweedlers", k, {{"a", refs.algebra(s->a)}, {"b", refs.algebra(s->b)}, {"incl", to_json(s->incl)}});
    for (const auto& [k, x] : d.sweedler_data)
        put("sweedler_data", k,
            {{"sweedler", refs.sweedler(x.sw)}, {"t", vector_json(x.t)}, {"m", vector_json(x.m)}, {"u", vector_json(x.u)}});
    for (const auto& [k, td] : d.twisting)
        put("twisting", k,
            {{"c", refs.coring(td.c)},
             {"d", refs.coring(td.d)},
             {"l", to_json(td.l)},
             {"r", to_json(td.r)},
             {"theta", to_json(td.theta)}});
    for (const auto& [k, hg] : d.hopf_galois)
        put("hopf_galois", k,
            {{"h", refs.algebra(hg.h)},
             {"delta_h", to_json(hg.delta_h)},
             {"counit_h", to_json(hg.counit_h)},
             {"antipode", to_json(hg.antipode)},
             {"a", refs.algebra(hg.a)},
             {"rho", to_json(hg.rho)}});
    for (const auto& [k, c] : d.finite_categories) {
        json mors = json::array();
        for (std::size_t i = 0; i < c.morphisms.size(); ++i)
            mors.push_back({c.morphisms[i], c.objects[c.dom[i]], c.objects[c.cod[i]]});
        json ids = json::object();
        for (std::size_t o = 0; o < c.objects.size(); ++o) ids[c.objects[o]] = c.morphisms[c.identity[o]];
        const auto is_id = [&](std::size_t m) { return std::find(c.identity.begin(), c.identity.end(), m) != c.identity.end(); };
        json comp = json::array();
        for (std::size_t g = 0; g < c.morphisms.size(); ++g)
            for (std::size_t f = 0; f < c.morphisms.size(); ++f)
                if (c.comp[g][f] && !is_id(g) && !is_id(f))
                    comp.push_back({c.morphisms[g], c.morphisms[f], c.morphisms[*c.comp[g][f]]});
        put("finite_categories", k, {{"objects", c.objects}, {"morphisms", mors}, {"identity", ids}, {"compose", comp}});
    }
    for (const auto& [k, s] : d.set_monads) {
        const auto it = d.finite_categories.find(s.category);
        if (it == d.finite_categories.end())
            throw Error(ErrorKind::UnresolvedReference, "serialize: finite category \"" + s.category + "\" is not in the document");
        const FiniteCategory& c = it->second;
        json obj = json::object(), mor = json::object(), eta = json::object(), mu = json::object();
        for (std::size_t o = 0; o < c.objects.size(); ++o) {
            obj[c.objects[o]] = c.objects[s.monad.obj[o]];
            eta[c.objects[o]] = c.morphisms[s.monad.eta[o]];
            mu[c.objects[o]] = c.morphisms[s.monad.mu[o]];
        }
        for (std::size_t m = 0; m < c.morphisms.size(); ++m) mor[c.morphisms[m]] = c.morphisms[s.monad.mor[m]];
        put("set_monads", k, {{"category", s.category}, {"obj", obj}, {"mor", mor}, {"eta", eta}, {"mu", mu}});
    }
    for (const auto& [k, m] : d.matrices) put("matrices", k, to_json(m));
    for (const auto& [k, t] : d.tasks) put("tasks", k, t);
    return j;
}

namespace {

bool flat(const json& j) {
    return std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
}

void write(std::string& out, const json& j, std::size_t indent) {
    const std::string pad(indent + 2, ' ');
    if (j.is_array()) {
        if (j.empty() || flat(j)) {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ", ";
                out += j[i].dump();
            }
            out += ']';
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            write(out, j[i], indent + 2);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(indent, ' ') + ']';
    } else if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [k, v] : j.items()) {
            out += pad + json(k).dump() + ": ";
            write(out, v, indent + 2);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += std::string(indent, ' ') + '}';
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string dump(const json& j) {
    std::string out;
    write(out, j, 0);
    out += '\n';
    return out;
}

std::string dump(const Document& d) { return dump(serialize(d)); }

std::string add(Document& d, const ComonoidPtr& c) {
    return insert(d.comonoids, c, c->name, "C", same_comonoid_ptr);
}

std::string add(Document& d, const Bicomodule& m) {
    add(d, m.left);
    add(d, m.right);
    return insert(d.bicomodules, m, m.name, "M", same_bicomodule);
}

std::string add(Document& d, const CategoryPtr& c) {
    add(d, c->C);
    return insert(d.categories, c, c->name, "category", same_category_ptr);
}

std::string add(Document& d, const FunctorPtr& f) {
    add(d, f->src);
    add(d, f->dst);
    return insert(d.functors, f, f->name, "functor", same_functor_ptr);
}

std::string add(Document& d, const CofunctorPtr& f) {
    add(d, f->src);
    add(d, f->dst);
    return insert(d.cofunctors, f, f->name, "cofunctor", same_cofunctor_ptr);
}

std::string add(Document& d, const AlgebraPtr& a) { return insert(d.algebras, a, a->name, "algebra", same_algebra); }

std::string add(Document& d, const Coring& c) {
    add(d, c.base);
    return insert(d.corings, c, c.name, "coring", same_coring_val);
}

std::string add(Document& d, const FiniteCategory& c) {
    return insert(d.finite_categories, c, c.name, "category", same_finite);
}

void add(Document& d, const std::string& name, const NatTrans& a) {
    add(d, a.source);
    add(d, a.target);
    d.naturals.insert_or_assign(name, a);
}

void add(Document& d, const std::string& name, const Cotrans& a) {
    add(d, a.source);
    add(d, a.target);
    d.cotransformations.insert_or_assign(name, a);
}

void add(Document& d, const std::string& name, const Monad& m) {
    add(d, m.t);
    d.monads.insert_or_assign(name, m);
}

void add(Document& d, const std::string& name, const Comonad& g) {
    add(d, g.g);
    d.comonads.insert_or_assign(name, g);
}

void add(Document& d, const std::string& name, const Opmonad& t) {
    add(d, t.t);
    d.opmonads.insert_or_assign(name, t);
}

void add(Document& d, const std::string& name, const Adjunction& a) {
    add(d, a.l);
    add(d, a.r);
    d.adjunctions.insert_or_assign(name, a);
}

void add(Document& d, const std::string& name, const std::string& monad, const TAlgebra& a) {
    add(d, a.y);
    d.talgebras.insert_or_assign(name, TAlgebraDef{monad, a});
}

void add(Document& d, const std::string& name, const SweedlerPtr& sw) {
    add(d, sw->a);
    add(d, sw->b);
    d.sweedlers.insert_or_assign(name, sw);
}

void add(Document& d, const std::string& name, const SweedlerMonadData& data) {
    if (!find_key(d.sweedlers, data.sw, "", same_sweedler)) add(d, name + "_sweedler", data.sw);
    d.sweedler_data.insert_or_assign(name, data);
}

void add(Document& d, const std::string& name, const TwistingDatum& td) {
    add(d, td.c);
    add(d, td.d);
    d.twisting.insert_or_assign(name, td);
}

void add(Document& d, const std::string& name, const HopfGaloisInstance& hg) {
    add(d, hg.h);
    add(d, hg.a);
    d.hopf_galois.insert_or_assign(name, hg);
}

void add(Document& d, const std::string& name, const std::string& category, const SetMonad& t) {
    d.set_monads.insert_or_assign(name, SetMonadDef{category, t});
}

json report_json(const Report& r) {
    json checks = json::array();
    for (const Check& c : r.checks()) {
        json x{{"law", c.law}, {"anchor", c.anchor}, {"pass", c.pass}};
        if (!c.note.empty()) x["note"] = c.note;
        if (c.witness) x["witness"] = *c.witness;
        checks.push_back(std::move(x));
    }
    return {{"subject", r.subject()}, {"verdict", r.ok() ? "pass" : "fail"}, {"checks", checks}};
}

}  // namespace icat::io
