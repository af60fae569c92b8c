#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "icat/cofun.hpp"
#include "icat/coring.hpp"
#include "icat/intcat.hpp"
#include "icat/kleisli.hpp"
#include "icat/oracle.hpp"

namespace icat::io {

using json = nlohmann::json;

/// "Q", "Fp:5" or "F5".
Field parse_field(const std::string& text);

struct TAlgebraDef {
    std::string monad;
    TAlgebra algebra;
};

struct SetMonadDef {
    std::string category;
    SetMonad monad;
};

/// A parsed document. Definitions are keyed by name and refer to each other
/// by key; parsing resolves every reference to a shared value.
struct Document {
    Field field;
    std::map<std::string, ComonoidPtr> comonoids;
    std::map<std::string, Bicomodule> bicomodules;
    std::map<std::string, CategoryPtr> categories;
    std::map<std::string, FunctorPtr> functors;
    std::map<std::string, CofunctorPtr> cofunctors;
    std::map<std::string, NatTrans> naturals;
    std::map<std::string, Cotrans> cotransformations;
    std::map<std::string, Monad> monads;
    std::map<std::string, Comonad> comonads;
    std::map<std::string, Opmonad> opmonads;
    std::map<std::string, Adjunction> adjunctions;
    std::map<std::string, TAlgebraDef> talgebras;
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, Bimodule> bimodules;
    std::map<std::string, Coring> corings;
    std::map<std::string, SweedlerPtr> sweedlers;
    std::map<std::string, SweedlerMonadData> sweedler_data;
    std::map<std::string, TwistingDatum> twisting;
    std::map<std::string, HopfGaloisInstance> hopf_galois;
    std::map<std::string, FiniteCategory> finite_categories;
    std::map<std::string, SetMonadDef> set_monads;
    std::map<std::string, Matrix> matrices;
    std::map<std::string, json> tasks;
};

/// Throws ParseError (with line and column for malformed text, with the
/// JSON path otherwise), UnresolvedReference, BadScalar, or the shape errors
/// of the constructors. `field` replaces the declared field; `fallback` is
/// used when the document declares none.
Document parse(const std::string& text, std::optional<Field> field = {}, std::optional<Field> fallback = {});
Document load(const std::string& path, std::optional<Field> field = {}, std::optional<Field> fallback = {});

/// Canonical form: sorted keys, scalars as integers or "p/q" strings.
json serialize(const Document& d);
/// serialize(d) as text, one matrix row per line.
std::string dump(const Document& d);
std::string dump(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, Field f);

/// Adds a value and whatever it refers to. Returns the key it is stored
/// under: its own name, or a suffixed name when that key holds something else.
std::string add(Document& d, const ComonoidPtr& c);
std::string add(Document& d, const Bicomodule& m);
std::string add(Document& d, const CategoryPtr& c);
std::string add(Document& d, const FunctorPtr& f);
std::string add(Document& d, const CofunctorPtr& f);
std::string add(Document& d, const AlgebraPtr& a);
std::string add(Document& d, const Coring& c);
std::string add(Document& d, const FiniteCategory& c);
void add(Document& d, const std::string& name, const NatTrans& a);
void add(Document& d, const std::string& name, const Cotrans& a);
void add(Document& d, const std::string& name, const Monad& m);
void add(Document& d, const std::string& name, const Comonad& g);
void add(Document& d, const std::string& name, const Opmonad& t);
void add(Document& d, const std::string& name, const Adjunction& a);
void add(Document& d, const std::string& name, const std::string& monad, const TAlgebra& a);
void add(Document& d, const std::string& name, const SweedlerPtr& sw);
void add(Document& d, const std::string& name, const SweedlerMonadData& data);
void add(Document& d, const std::string& name, const TwistingDatum& td);
void add(Document& d, const std::string& name, const HopfGaloisInstance& hg);
void add(Document& d, const std::string& name, const std::string& category, const SetMonad& t);

json report_json(const Report& r);

}  // namespace icat::io
