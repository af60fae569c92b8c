#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "icat/matrix.hpp"
#include "icat/report.hpp"
#include "icat/space.hpp"

namespace icat {

/// Finite-dimensional coalgebra: delta is dim^2 x dim, counit is 1 x dim.
struct Comonoid {
    std::string name;
    Matrix delta;
    Matrix counit;

    std::size_t dim() const { return counit.cols(); }
    Field field() const { return counit.field(); }
};

using ComonoidPtr = std::shared_ptr<const Comonoid>;

ComonoidPtr make_comonoid(Matrix delta, Matrix counit, std::string name = {});
/// The ground field as a comonoid.
ComonoidPtr unit_comonoid(Field f = {});
/// Linearisation of an n-point set: every basis vector grouplike.
ComonoidPtr grouplike_comonoid(std::size_t n, Field f = {}, std::string name = {});
/// The same coalgebra with the tensor factors of delta swapped.
ComonoidPtr coopposite(const Comonoid& c);

/// Identical structure matrices; names are ignored.
bool same_comonoid(const Comonoid& a, const Comonoid& b);
void require_same_comonoid(const Comonoid& a, const Comonoid& b, const std::string& where);

/// C-D-bicomodule: lambda is (dim C * dim M) x dim M, rho is (dim M * dim D) x dim M.
struct Bicomodule {
    std::string name;
    ComonoidPtr left;
    ComonoidPtr right;
    Matrix lambda;
    Matrix rho;

    std::size_t dim() const { return lambda.cols(); }
    Field field() const { return lambda.field(); }
};

/// C as a C-C-bicomodule with both coactions Delta.
Bicomodule regular(const ComonoidPtr& c);

/// Mirror image: a D^cop-C^cop-bicomodule with the factors of each coaction swapped.
Bicomodule mirror(const Bicomodule& m, const ComonoidPtr& left_cop, const ComonoidPtr& right_cop);

Report verify_comonoid(const Comonoid& c);
Report verify_bicomodule(const Bicomodule& m);

/// Checks Delta_D f = (f (x) f) Delta_C and e_D f = e_C.
Report verify_comonoid_map(const Matrix& f, const Comonoid& src, const Comonoid& dst);
bool is_comonoid_map(const Matrix& f, const Comonoid& src, const Comonoid& dst);

/// Records left and right colinearity of f: m -> n under `prefix`.
void check_bicolinear(Report& r, const std::string& prefix, const Matrix& f, const Bicomodule& m,
                      const Bicomodule& n);
bool is_bicolinear(const Matrix& f, const Bicomodule& m, const Bicomodule& n);
/// Basis of the space of bicolinear maps m -> n.
std::vector<Matrix> bicolinear_basis(const Bicomodule& m, const Bicomodule& n);
/// Basis of the subspace of span(basis) on which the linear map `defect` vanishes.
std::vector<Matrix> restrict_basis(const std::vector<Matrix>& basis, const std::function<Matrix(const Matrix&)>& defect);
/// Linear combination sum c_i basis_i.
Matrix combine(const std::vector<Matrix>& basis, const std::vector<Scalar>& coeffs);

/// Left coaction replaced by (f (x) M) lambda for a comonoid map f: left -> dst.
Bicomodule induce_left(const Matrix& f, const ComonoidPtr& dst, const Bicomodule& a);
/// Right coaction replaced by (M (x) f) rho for a comonoid map f: right -> dst.
Bicomodule induce_right(const Bicomodule& a, const Matrix& f, const ComonoidPtr& dst);

/// n-fold left coaction M -> C^{(x)n} (x) M.
Matrix iterate_coaction(const Bicomodule& m, std::size_t n);
/// n-fold right coaction M -> M (x) D^{(x)n}.
Matrix iterate_coaction_right(const Bicomodule& m, std::size_t n);
/// n-fold comultiplication C -> C^{(x)(n+1)}.
Matrix iterate_comult(const Comonoid& c, std::size_t n);

/// The cotensor product of a chain M1 [] M2 [] ... [] Mk inside M1 (x) ... (x) Mk.
/// Bracketing does not matter: the subspace is cut out by the adjacent
/// equaliser conditions.
Space cotensor_space(const std::vector<const Bicomodule*>& chain);

struct Cotensor {
    std::vector<Bicomodule> factors;
    Space space;        // atoms are the factor dimensions; space.incl is the inclusion
    Bicomodule result;  // induced coactions on the canonical basis
};

Cotensor cotensor(const Bicomodule& m, const Bicomodule& n);
Cotensor cotensor(const std::vector<Bicomodule>& chain);

/// The unique h with incl_dst h = (f (x) g) incl_src.
Matrix cotensor_map(const Matrix& f, const Matrix& g, const Cotensor& src, const Cotensor& dst);

/// Coordinates of lambda in C [] M (an isomorphism M -> C [] M) and of rho in M [] D.
Matrix left_unitor(const Bicomodule& m, const Cotensor& cm);
Matrix right_unitor(const Bicomodule& m, const Cotensor& md);

}  // namespace icat
