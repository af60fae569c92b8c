#include "icat/bicomod.hpp"

#include "icat/kernels.hpp"
#include "icat/linalg.hpp"

namespace icat {

namespace {

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw Error(ErrorKind::ShapeMismatch, what + " is " + dims(m) + ", expected " + std::to_string(rows) + "x" +
                                                  std::to_string(cols));
}

}  // namespace

ComonoidPtr make_comonoid(Matrix delta, Matrix counit, std::string name) {
    const std::size_t n = counit.cols();
    require_shape(counit, 1, n, "counit");
    require_shape(delta, n * n, n, "comultiplication");
    return std::make_shared<const Comonoid>(Comonoid{std::move(name), std::move(delta), std::move(counit)});
}

ComonoidPtr unit_comonoid(Field f) { return grouplike_comonoid(1, f, "k"); }

ComonoidPtr grouplike_comonoid(std::size_t n, Field f, std::string name) {
    Matrix delta(n * n, n, f);
    Matrix counit(1, n, f);
    for (std::size_t i = 0; i < n; ++i) {
        delta.set(i * n + i, i, 1);
        counit.set(0, i, 1);
    }
    return make_comonoid(std::move(delta), std::move(counit), std::move(name));
}

ComonoidPtr coopposite(const Comonoid& c) {
    return make_comonoid(Matrix::swap(c.dim(), c.dim(), c.field()) * c.delta, c.counit,
                         c.name.empty() ? std::string() : c.name + "^cop");
}

bool same_comonoid(const Comonoid& a, const Comonoid& b) {
    return &a == &b || (a.delta == b.delta && a.counit == b.counit);
}

void require_same_comonoid(const Comonoid& a, const Comonoid& b, const std::string& where) {
    if (!same_comonoid(a, b))
        throw Error(ErrorKind::ComonoidMismatch,
                    where + ": comonoids " + (a.name.empty() ? "?" : a.name) + " and " + (b.name.empty() ? "?" : b.name) +
                        " differ");
}

Bicomodule regular(const ComonoidPtr& c) { return Bicomodule{c->name, c, c, c->delta, c->delta}; }

Bicomodule mirror(const Bicomodule& m, const ComonoidPtr& left_cop, const ComonoidPtr& right_cop) {
    const Field f = m.field();
    Bicomodule r;
    r.name = m.name.empty() ? std::string() : m.name + "^mirror";
    r.left = left_cop;
    r.right = right_cop;
    r.lambda = Matrix::swap(m.dim(), m.right->dim(), f) * m.rho;
    r.rho = Matrix::swap(m.left->dim(), m.dim(), f) * m.lambda;
    return r;
}

Report verify_comonoid(const Comonoid& c) {
    const std::size_t n = c.dim();
    require_shape(c.counit, 1, n, "counit");
    require_shape(c.delta, n * n, n, "comultiplication");
    Report r("comonoid " + c.name);
    const Matrix id = Matrix::identity(n, c.field());
    const Matrix dd = kernels::apply_block(c.delta, 1, c.delta, n);
    r.equal("coassociativity", "(D (x) C) D = (C (x) D) D", dd, kernels::apply_block(c.delta, n, c.delta, 1), &id);
    r.equal("left counit", "(e (x) C) D = C", kernels::apply_block(c.delta, 1, c.counit, n), id, &id);
    r.equal("right counit", "(C (x) e) D = C", kernels::apply_block(c.delta, n, c.counit, 1), id, &id);
    return r;
}

Report verify_bicomodule(const Bicomodule& m) {
    const std::size_t n = m.dim();
    const std::size_t c = m.left->dim();
    const std::size_t d = m.right->dim();
    require_shape(m.lambda, c * n, n, "left coaction");
    require_shape(m.rho, n * d, n, "right coaction");
    Report r("bicomodule " + m.name);
    const Matrix id = Matrix::identity(n, m.field());
    r.equal("left coassociativity", "(D (x) M) l = (C (x) l) l", kernels::apply_block(m.lambda, 1, m.left->delta, n),
            kernels::apply_block(m.lambda, c, m.lambda, 1), &id);
    r.equal("left counit", "(e (x) M) l = M", kernels::apply_block(m.lambda, 1, m.left->counit, n), id, &id);
    r.equal("right coassociativity", "(M (x) D) r = (r (x) D) r", kernels::apply_block(m.rho, n, m.right->delta, 1),
            kernels::apply_block(m.rho, 1, m.rho, d), &id);
    r.equal("right counit", "(M (x) e) r = M", kernels::apply_block(m.rho, n, m.right->counit, 1), id, &id);
    r.equal("coactions commute", "(C (x) r) l = (l (x) D) r", kernels::apply_block(m.lambda, c, m.rho, 1),
            kernels::apply_block(m.rho, 1, m.lambda, d), &id);
    return r;
}

Report verify_comonoid_map(const Matrix& f, const Comonoid& src, const Comonoid& dst) {
    require_shape(f, dst.dim(), src.dim(), "comonoid map");
    Report r("comonoid map");
    const Matrix id = Matrix::identity(src.dim(), src.field());
    r.equal("comultiplicative", "D f = (f (x) f) D", dst.delta * f, tensor(f, f) * src.delta, &id);
    r.equal("counital", "e f = e", dst.counit * f, src.counit, &id);
    return r;
}

bool is_comonoid_map(const Matrix& f, const Comonoid& src, const Comonoid& dst) {
    return verify_comonoid_map(f, src, dst).ok();
}

void check_bicolinear(Report& r, const std::string& prefix, const Matrix& f, const Bicomodule& m,
                      const Bicomodule& n) {
    require_shape(f, n.dim(), m.dim(), prefix);
    require_same_comonoid(*m.left, *n.left, prefix);
    require_same_comonoid(*m.right, *n.right, prefix);
    const Matrix id = Matrix::identity(m.dim(), m.field());
    r.equal(prefix + " left colinear", "l f = (C (x) f) l", n.lambda * f,
            kernels::apply_block(m.lambda, m.left->dim(), f, 1), &id);
    r.equal(prefix + " right colinear", "r f = (f (x) D) r", n.rho * f,
            kernels::apply_block(m.rho, 1, f, m.right->dim()), &id);
}

bool is_bicolinear(const Matrix& f, const Bicomodule& m, const Bicomodule& n) {
    Report r;
    check_bicolinear(r, "map", f, m, n);
    return r.ok();
}

std::vector<Matrix> bicolinear_basis(const Bicomodule& m, const Bicomodule& n) {
    require_same_comonoid(*m.left, *n.left, "bicolinear_basis");
    require_same_comonoid(*m.right, *n.right, "bicolinear_basis");
    const Field fld = m.field();
    const std::size_t rows = n.dim(), cols = m.dim();
    const std::size_t c = m.left->dim(), d = m.right->dim();
    // Column k of the constraint matrix is the defect of the elementary map E_k.
    const std::size_t defect = (c + d) * rows * cols;
    Matrix cons(defect, rows * cols, fld);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Matrix e(rows, cols, fld);
            e.set(i, j, 1);
            Matrix l = n.lambda * e - kernels::apply_block(m.lambda, c, e, 1);
            Matrix r = n.rho * e - kernels::apply_block(m.rho, 1, e, d);
            std::size_t at = 0;
            for (const Matrix* part : {&l, &r})
                for (const auto& x : part->data()) cons(at++, i * cols + j) = x;
        }
    const Matrix ker = kernel_basis(cons);
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        Matrix f(rows, cols, fld);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) f(i, j) = ker(i * cols + j, k);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Matrix> restrict_basis(const std::vector<Matrix>& basis,
                                   const std::function<Matrix(const Matrix&)>& defect) {
    if (basis.empty()) return {};
    std::vector<Matrix> defects;
    for (const auto& b : basis) defects.push_back(defect(b));
    const std::size_t len = defects[0].rows() * defects[0].cols();
    Matrix cons(len, basis.size(), basis[0].field());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t i = 0; i < len; ++i) cons(i, k) = defects[k].data()[i];
    const Matrix ker = kernel_basis(cons);
    std::vector<Matrix> out;
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < basis.size(); ++k) c.push_back(ker(k, j));
        out.push_back(combine(basis, c));
    }
    return out;
}

Matrix combine(const std::vector<Matrix>& basis, const std::vector<Scalar>& coeffs) {
    if (basis.empty() || basis.size() != coeffs.size()) throw Error(ErrorKind::ShapeMismatch, "combine");
    Matrix out(basis[0].rows(), basis[0].cols(), basis[0].field());
    for (std::size_t i = 0; i < basis.size(); ++i) out += basis[i] * coeffs[i];
    return out;
}

Bicomodule induce_left(const Matrix& f, const ComonoidPtr& dst, const Bicomodule& a) {
    if (!is_comonoid_map(f, *a.left, *dst)) throw Error(ErrorKind::NotComonoidMap, "induce_left");
    Bicomodule r = a;
    r.left = dst;
    r.lambda = kernels::apply_block(a.lambda, 1, f, a.dim());
    return r;
}

Bicomodule induce_right(const Bicomodule& a, const Matrix& f, const ComonoidPtr& dst) {
    if (!is_comonoid_map(f, *a.right, *dst)) throw Error(ErrorKind::NotComonoidMap, "induce_right");
    Bicomodule r = a;
    r.right = dst;
    r.rho = kernels::apply_block(a.rho, a.dim(), f, 1);
    return r;
}

Matrix iterate_coaction(const Bicomodule& m, std::size_t n) {
    if (n == 0) return Matrix::identity(m.dim(), m.field());
    Matrix out = m.lambda;
    for (std::size_t k = 1; k < n; ++k) out = kernels::apply_block(m.lambda, m.left->dim(), out, 1);
    return out;
}

Matrix iterate_coaction_right(const Bicomodule& m, std::size_t n) {
    if (n == 0) return Matrix::identity(m.dim(), m.field());
    Matrix out = m.rho;
    for (std::size_t k = 1; k < n; ++k) out = kernels::apply_block(m.rho, 1, out, m.right->dim());
    return out;
}

Matrix iterate_comult(const Comonoid& c, std::size_t n) {
    Matrix out = Matrix::identity(c.dim(), c.field());
    std::size_t tail = 1;
    for (std::size_t k = 0; k < n; ++k) {
        out = kernels::apply_block(out, 1, c.delta, tail);
        tail *= c.dim();
    }
    return out;
}

Space cotensor_space(const std::vector<const Bicomodule*>& chain) {
    if (chain.empty()) throw Error(ErrorKind::ShapeMismatch, "empty cotensor chain");
    const Field f = chain[0]->field();
    Space s = Space::whole({chain[0]->dim()}, f);
    for (std::size_t k = 1; k < chain.size(); ++k) {
        const Bicomodule& prev = *chain[k - 1];
        const Bicomodule& next = *chain[k];
        require_same_comonoid(*prev.right, *next.left, "cotensor");
        const std::size_t pre = s.ambient() / prev.dim();
        const Space grown = s.tensor_right(next.dim());
        // (rho (x) N) - (M (x) lambda) on the grown space, in ambient coordinates.
        Matrix cond = kernels::apply_block(grown.incl, pre, prev.rho, next.dim());
        cond -= kernels::apply_block(grown.incl, pre * prev.dim(), next.lambda, 1);
        const Matrix ker = kernel_basis(cond);
        std::vector<std::size_t> atoms = s.atoms;
        atoms.push_back(next.dim());
        s = Space::span(std::move(atoms), grown.incl * ker);
    }
    return s;
}

Cotensor cotensor(const Bicomodule& m, const Bicomodule& n) { return cotensor(std::vector<Bicomodule>{m, n}); }

Cotensor cotensor(const std::vector<Bicomodule>& chain) {
    std::vector<const Bicomodule*> ptrs;
    for (const auto& b : chain) ptrs.push_back(&b);
    Cotensor out{chain, cotensor_space(ptrs), {}};
    const Space& s = out.space;
    const Bicomodule& first = chain.front();
    const Bicomodule& last = chain.back();
    const std::size_t rest = s.ambient() / first.dim();
    const std::size_t pre = s.ambient() / last.dim();
    std::string name;
    for (const auto& b : chain) name += (name.empty() ? "" : "[]") + b.name;
    out.result.name = name;
    out.result.left = first.left;
    out.result.right = last.right;
    out.result.lambda = s.tensor_left(first.left->dim()).coords(kernels::apply_block(s.incl, 1, first.lambda, rest));
    out.result.rho = s.tensor_right(last.right->dim()).coords(kernels::apply_block(s.incl, pre, last.rho, 1));
    return out;
}

Matrix cotensor_map(const Matrix& f, const Matrix& g, const Cotensor& src, const Cotensor& dst) {
    if (src.factors.size() != 2 || dst.factors.size() != 2)
        throw Error(ErrorKind::ShapeMismatch, "cotensor_map takes binary cotensors");
    Flow flow(src.space);
    flow.apply(0, f).apply(1, g);
    return flow.into(dst.space);
}

Matrix left_unitor(const Bicomodule& m, const Cotensor& cm) { return cm.space.coords(m.lambda); }

Matrix right_unitor(const Bicomodule& m, const Cotensor& md) { return md.space.coords(m.rho); }

}  // namespace icat
