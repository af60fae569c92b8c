#include "icat/space.hpp"

#include "icat/kernels.hpp"
#include "icat/linalg.hpp"

namespace icat {

std::size_t product(const std::vector<std::size_t>& dims, std::size_t begin, std::size_t end) {
    std::size_t p = 1;
    for (std::size_t i = begin; i < end; ++i) p *= dims[i];
    return p;
}

std::size_t product(const std::vector<std::size_t>& dims) { return product(dims, 0, dims.size()); }

Space Space::whole(std::vector<std::size_t> atoms, Field f) {
    Space s;
    const std::size_t n = product(atoms);
    s.atoms = std::move(atoms);
    s.incl = Matrix::identity(n, f);
    s.pivots.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.pivots[i] = i;
    s.full = true;
    return s;
}

Space Space::span(std::vector<std::size_t> atoms, const Matrix& vectors) {
    if (vectors.rows() != product(atoms)) throw Error(ErrorKind::ShapeMismatch, "span: ambient dimension");
    Space s;
    s.atoms = std::move(atoms);
    s.incl = vectors.cols() ? column_echelon(vectors) : Matrix(vectors.rows(), 0, vectors.field());
    for (std::size_t j = 0; j < s.incl.cols(); ++j)
        for (std::size_t i = 0; i < s.incl.rows(); ++i)
            if (!s.incl(i, j).is_zero()) {
                s.pivots.push_back(i);
                break;
            }
    s.full = s.incl.cols() == s.incl.rows();
    return s;
}

Matrix Space::coords(const Matrix& vectors) const {
    if (vectors.rows() != ambient())
        throw Error(ErrorKind::ShapeMismatch, "coords: " + std::to_string(vectors.rows()) + " rows, ambient " +
                                                  std::to_string(ambient()));
    if (full) return vectors;
    Matrix g = vectors.select_rows(pivots);
    if (!(incl * g == vectors)) throw Error(ErrorKind::NoFactorization, "vectors leave the subspace");
    return g;
}

bool Space::contains(const Matrix& vectors) const {
    try {
        coords(vectors);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Space Space::tensor_right(std::size_t atom) const {
    Space s;
    s.atoms = atoms;
    s.atoms.push_back(atom);
    s.incl = tensor(incl, Matrix::identity(atom, field()));
    for (auto p : pivots)
        for (std::size_t d = 0; d < atom; ++d) s.pivots.push_back(p * atom + d);
    s.full = full;
    return s;
}

Space Space::tensor_left(std::size_t atom) const {
    Space s;
    s.atoms = atoms;
    s.atoms.insert(s.atoms.begin(), atom);
    s.incl = tensor(Matrix::identity(atom, field()), incl);
    for (std::size_t d = 0; d < atom; ++d)
        for (auto p : pivots) s.pivots.push_back(d * ambient() + p);
    s.full = full;
    return s;
}

Flow::Flow(const Space& start) : v_(start.incl), atoms_(start.atoms) {}

Flow::Flow(Matrix vectors, std::vector<std::size_t> atoms) : v_(std::move(vectors)), atoms_(std::move(atoms)) {
    if (v_.rows() != product(atoms_)) throw Error(ErrorKind::ShapeMismatch, "flow: atoms do not match vectors");
}

Flow& Flow::apply(std::size_t pos, const Matrix& f, std::vector<std::size_t> out) {
    if (out.empty()) out.push_back(f.rows());
    return apply_span(pos, 1, f, std::move(out));
}

Flow& Flow::apply_span(std::size_t pos, std::size_t count, const Matrix& f, std::vector<std::size_t> out) {
    if (pos + count > atoms_.size()) throw Error(ErrorKind::ShapeMismatch, "flow: block out of range");
    if (product(atoms_, pos, pos + count) != f.cols())
        throw Error(ErrorKind::ShapeMismatch, "flow: map with " + std::to_string(f.cols()) +
                                                  " columns applied to block of dimension " +
                                                  std::to_string(product(atoms_, pos, pos + count)));
    if (product(out) != f.rows()) throw Error(ErrorKind::ShapeMismatch, "flow: output atoms");
    const std::size_t left = product(atoms_, 0, pos);
    const std::size_t right = product(atoms_, pos + count, atoms_.size());
    v_ = kernels::apply_block(v_, left, f, right);
    atoms_.erase(atoms_.begin() + static_cast<long>(pos), atoms_.begin() + static_cast<long>(pos + count));
    atoms_.insert(atoms_.begin() + static_cast<long>(pos), out.begin(), out.end());
    return *this;
}

Flow& Flow::apply(std::size_t pos, const LinMap& f) {
    const std::size_t count = f.dom.atoms.size();
    if (pos + count > atoms_.size()) throw Error(ErrorKind::ShapeMismatch, "flow: block out of range");
    for (std::size_t i = 0; i < count; ++i)
        if (atoms_[pos + i] != f.dom.atoms[i]) throw Error(ErrorKind::ShapeMismatch, "flow: atom dimensions differ");
    const std::size_t left = product(atoms_, 0, pos);
    const std::size_t right = product(atoms_, pos + count, atoms_.size());
    Matrix coords;
    if (f.dom.full) {
        coords = v_;
    } else {
        // Selection of pivot rows is a left inverse of the inclusion; the
        // round trip detects blocks outside the domain subspace.
        Matrix sel(f.dom.dim(), f.dom.ambient(), v_.field());
        for (std::size_t j = 0; j < f.dom.dim(); ++j) sel(j, f.dom.pivots[j]) = Scalar(1, v_.field());
        coords = kernels::apply_block(v_, left, sel, right);
        if (!(kernels::apply_block(coords, left, f.dom.incl, right) == v_))
            throw Error(ErrorKind::NoFactorization, "flow: block leaves the domain of the applied map");
    }
    Matrix ext = f.cod.full ? f.map : f.cod.incl * f.map;
    v_ = kernels::apply_block(coords, left, ext, right);
    atoms_.erase(atoms_.begin() + static_cast<long>(pos), atoms_.begin() + static_cast<long>(pos + count));
    atoms_.insert(atoms_.begin() + static_cast<long>(pos), f.cod.atoms.begin(), f.cod.atoms.end());
    return *this;
}

Matrix Flow::into(const Space& target) const {
    if (target.atoms != atoms_) {
        if (product(target.atoms) != product(atoms_))
            throw Error(ErrorKind::ShapeMismatch, "flow: target space has a different ambient");
    }
    return target.coords(v_);
}

}  // namespace icat
