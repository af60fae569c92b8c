#pragma once

#include <vector>

#include "icat/matrix.hpp"

namespace icat {

/// A subspace of a tensor product of "atoms" (carrier spaces), held by a
/// basis in reduced column echelon form. The basis is canonical for the
/// subspace, so two routes to the same cotensor agree entrywise.
struct Space {
    std::vector<std::size_t> atoms;
    Matrix incl;                      // ambient x dim
    std::vector<std::size_t> pivots;  // incl restricted to these rows is the identity
    bool full = false;

    /// The whole tensor product of the atoms.
    static Space whole(std::vector<std::size_t> atoms, Field f);
    /// Canonical basis of the span of the given ambient vectors.
    static Space span(std::vector<std::size_t> atoms, const Matrix& vectors);

    std::size_t dim() const { return incl.cols(); }
    std::size_t ambient() const { return incl.rows(); }
    Field field() const { return incl.field(); }

    /// Coordinates of ambient vectors; throws NoFactorization when a vector
    /// lies outside the subspace.
    Matrix coords(const Matrix& vectors) const;
    bool contains(const Matrix& vectors) const;

    /// This space tensored with a full atom on the right (or left).
    Space tensor_right(std::size_t atom) const;
    Space tensor_left(std::size_t atom) const;
};

std::size_t product(const std::vector<std::size_t>& dims, std::size_t begin, std::size_t end);
std::size_t product(const std::vector<std::size_t>& dims);

/// A linear map between two spaces, on their canonical bases.
struct LinMap {
    Matrix map;  // cod.dim() x dom.dim()
    Space dom;
    Space cod;
};

/// Images of a set of vectors pushed through a composite of maps acting on
/// blocks of tensor factors. Every stage is computed in the ambient tensor
/// product of atoms; maps defined on a cotensor subspace first check that
/// the block they act on lies in that subspace.
class Flow {
public:
    explicit Flow(const Space& start);
    Flow(Matrix vectors, std::vector<std::size_t> atoms);

    /// Applies f to the single atom at pos. The output atom list defaults to
    /// one atom of dimension f.rows().
    Flow& apply(std::size_t pos, const Matrix& f, std::vector<std::size_t> out = {});
    /// Applies f to the dom.atoms.size() atoms starting at pos.
    Flow& apply(std::size_t pos, const LinMap& f);
    /// Applies a plain map on `count` consecutive atoms (a full tensor block).
    Flow& apply_span(std::size_t pos, std::size_t count, const Matrix& f, std::vector<std::size_t> out);
    /// Applies a functional (1 x dim) to the atom at pos, removing it.
    Flow& drop(std::size_t pos, const Matrix& functional) { return apply_span(pos, 1, functional, {}); }
    /// Inserts the vector `column` as a new atom before pos.
    Flow& insert(std::size_t pos, const Matrix& column) { return apply_span(pos, 0, column, {column.rows()}); }

    const Matrix& vectors() const { return v_; }
    const std::vector<std::size_t>& atoms() const { return atoms_; }
    Matrix into(const Space& target) const;

private:
    Matrix v_;
    std::vector<std::size_t> atoms_;
};

}  // namespace icat
