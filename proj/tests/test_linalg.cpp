#include <random>

#include <doctest.h>

#include "icat/kernels.hpp"
#include "icat/linalg.hpp"

using namespace icat;

namespace {

Matrix random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols, Field f = {}) {
    std::uniform_int_distribution<long> val(-3, 3);
    std::uniform_int_distribution<int> zero(0, 2);
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (zero(gen)) m(i, j) = Scalar(val(gen), f);
    return m;
}

// Independent echelon oracle: Gauss-Jordan written on plain mpq_class rows.
std::vector<std::vector<mpq_class>> oracle_rref(std::vector<std::vector<mpq_class>> a) {
    std::size_t r = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        mpq_class lead = a[r][c];
        for (auto& x : a[r]) x /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            mpq_class k = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= k * a[r][j];
        }
        ++r;
    }
    return a;
}

}  // namespace

TEST_CASE("scalars are exact and canonical") {
    CHECK(Scalar::parse("2/4").str() == "1/2");
    CHECK(Scalar::parse("-3/6").str() == "-1/2");
    CHECK_THROWS_AS(Scalar::parse("x"), Error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
    const Field f5 = Field::prime(5);
    CHECK(Scalar::parse("-1", f5).str() == "4");
    CHECK(Scalar::parse("1/2", f5).str() == "3");
    CHECK((Scalar(3, f5) * Scalar(2, f5)).str() == "1");
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK_THROWS_AS(Scalar(0).inverse(), Error);
    CHECK_THROWS_AS(Scalar(1) + Scalar(1, f5), Error);
}

TEST_CASE("kernel basis examples") {
    CHECK(kernel_basis(Matrix{{1, 1}}) == Matrix{{1}, {-1}});
    const Matrix k = kernel_basis(Matrix::identity(2));
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 0);

    const Matrix f{{1, 2, 3}, {2, 4, 6}};
    const Matrix b = kernel_basis(f);
    CHECK(b.rows() == 3);
    CHECK(b.cols() == 2);
    CHECK((f * b).is_zero());
    // The canonical basis is the reduced column echelon form of the kernel,
    // which the oracle reproduces from the transposed spanning set.
    std::vector<std::vector<mpq_class>> rows{{-2, 1, 0}, {-3, 0, 1}};
    auto e = oracle_rref(rows);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < 3; ++i) CHECK(b(i, j).value() == e[j][i]);
}

TEST_CASE("cokernel projection examples") {
    CHECK(cokernel_projection(Matrix{{1}, {-1}}) == Matrix{{1, 1}});
    const Matrix p = cokernel_projection(Matrix::identity(3));
    CHECK(p.rows() == 0);
    CHECK(p.cols() == 3);
    std::mt19937 gen(11);
    for (int t = 0; t < 30; ++t) {
        const Matrix f = random_matrix(gen, 1 + t % 6, 1 + (t * 7) % 5);
        const Matrix q = cokernel_projection(f);
        CHECK((q * f).is_zero());
        CHECK(rank(q) == q.rows());
        CHECK(q.rows() == f.rows() - rank(f));
    }
}

TEST_CASE("factor_left examples") {
    const Matrix iota{{1}, {-1}};
    CHECK(factor_left(Matrix::identity(2), Matrix{{3, 4}, {5, 6}}) == Matrix{{3, 4}, {5, 6}});
    CHECK(factor_left(iota, Matrix{{2}, {-2}}) == Matrix{{2}});
    CHECK_THROWS_WITH_AS(factor_left(iota, Matrix{{1}, {1}}), doctest::Contains("NoFactorization"), Error);
}

TEST_CASE("tensor examples") {
    CHECK(tensor(Matrix{{2}}, Matrix{{3}}) == Matrix{{6}});
    CHECK(tensor(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
    CHECK(tensor(Matrix{{0, 1}, {1, 0}}, Matrix{{1, 1}}) == Matrix{{0, 0, 1, 1}, {1, 1, 0, 0}});
}

TEST_CASE("linear algebra properties on random matrices") {
    std::mt19937 gen(7);
    for (int t = 0; t < 40; ++t) {
        std::uniform_int_distribution<std::size_t> d(1, 8);
        const std::size_t m = d(gen), n = d(gen), p = d(gen);
        const Matrix f = random_matrix(gen, m, n);
        const Matrix g = random_matrix(gen, n, p);
        // rank-nullity
        CHECK(rank(kernel_basis(f)) + rank(f) == n);
        // ker g is contained in ker(f g)
        const Matrix kg = kernel_basis(g);
        const Matrix kfg = kernel_basis(f * g);
        CHECK(solve(kfg, kg).has_value());
        // factor_left(iota, iota) = id
        const Matrix iota = column_echelon(g);
        CHECK(factor_left(iota, iota) == Matrix::identity(iota.cols()));
    }
    for (int t = 0; t < 20; ++t) {
        std::uniform_int_distribution<std::size_t> d(1, 3);
        const std::size_t a = d(gen), b = d(gen), c = d(gen), x = d(gen), y = d(gen), z = d(gen);
        const Matrix f1 = random_matrix(gen, a, b), f2 = random_matrix(gen, b, c);
        const Matrix g1 = random_matrix(gen, x, y), g2 = random_matrix(gen, y, z);
        CHECK(tensor(f1 * f2, g1 * g2) == tensor(f1, g1) * tensor(f2, g2));
    }
}

TEST_CASE("column echelon basis depends only on the subspace") {
    std::mt19937 gen(3);
    for (int t = 0; t < 20; ++t) {
        const Matrix v = random_matrix(gen, 6, 3);
        const Matrix mix = random_matrix(gen, 3, 3);
        if (!is_invertible(mix)) continue;
        CHECK(column_echelon(v) == column_echelon(v * mix));
    }
}

TEST_CASE("inverse and solve over a prime field") {
    const Field f7 = Field::prime(7);
    const Matrix a({{2, 1}, {1, 1}}, f7);
    CHECK(a * inverse(a) == Matrix::identity(2, f7));
    CHECK_THROWS_AS(inverse(Matrix({{1, 2}, {2, 4}}, f7)), Error);
    CHECK(is_invertible(Matrix({{1, 2}, {2, 4}}, Field::prime(3))) == false);
}

TEST_CASE("parallel kernels agree with the serial reference") {
    std::mt19937 gen(5);
    for (std::size_t n : {3u, 17u, 40u}) {
        const Matrix a = random_matrix(gen, n, n + 1);
        const Matrix b = random_matrix(gen, n + 1, n);
        CHECK(kernels::multiply(a, b) == kernels::multiply_serial(a, b));
        const Matrix v = random_matrix(gen, 3 * 4 * n, 2 * n);
        const Matrix f = random_matrix(gen, 5, 4);
        CHECK(kernels::apply_block(v, 3, f, n) == kernels::apply_block_serial(v, 3, f, n));
        // apply_block agrees with the materialised Kronecker product
        const Matrix big = tensor({Matrix::identity(3), f, Matrix::identity(n)});
        CHECK(kernels::apply_block(v, 3, f, n) == big * v);
    }
}
