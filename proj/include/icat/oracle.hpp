#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "icat/intcat.hpp"
#include "icat/kleisli.hpp"

namespace icat {

/// A category given by tables. comp[g][f] = g o f when dom g = cod f.
struct FiniteCategory {
    std::string name;
    std::vector<std::string> objects;
    std::vector<std::string> morphisms;
    std::vector<std::size_t> dom;
    std::vector<std::size_t> cod;
    std::vector<std::size_t> identity;
    std::vector<std::vector<std::optional<std::size_t>>> comp;

    std::vector<std::size_t> hom(std::size_t a, std::size_t b) const;
};

/// Objects and named generators; composites are looked up in `table`,
/// keyed by (g, f) for g o f. Identities are added as "id_<object>".
FiniteCategory finite_category(std::string name, std::vector<std::string> objects,
                               std::vector<std::tuple<std::string, std::size_t, std::size_t>> arrows,
                               const std::vector<std::tuple<std::string, std::string, std::string>>& table);
/// The poset 0 <= 1 <= ... <= n-1.
FiniteCategory chain_category(std::size_t n);
FiniteCategory discrete_category(std::size_t n);
/// Z/n as a one-object category.
FiniteCategory cyclic_group_category(std::size_t n);

Report verify_finite_category(const FiniteCategory& c);

/// T on objects and morphisms, eta[a]: a -> Ta, mu[a]: TTa -> Ta.
struct SetMonad {
    std::vector<std::size_t> obj;
    std::vector<std::size_t> mor;
    std::vector<std::size_t> eta;
    std::vector<std::size_t> mu;
};

Report verify_set_monad(const FiniteCategory& c, const SetMonad& t);
SetMonad identity_set_monad(const FiniteCategory& c);
/// Every monad on c, by exhaustive search.
std::vector<SetMonad> enumerate_set_monads(const FiniteCategory& c);

/// hom(a, b) = hom_c(a, Tb), g . f = mu T(g) f. Throws LawViolation on bad input.
FiniteCategory classical_kleisli(const FiniteCategory& c, const SetMonad& t);

/// Grouplike coalgebra on the objects, A spanned by the morphisms with
/// lambda(f) = cod f (x) f and rho(f) = f (x) dom f.
CategoryPtr linearize(const FiniteCategory& c);
Monad linearize_monad(const FiniteCategory& c, const SetMonad& t);

/// Matches objects by index and searches morphism bijections within each
/// (dom, cod) class. Throws Mismatch naming the first differing entry.
Report compare(const InternalCategory& internal, const FiniteCategory& classical);

}  // namespace icat
