#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "ncsym/lincomb.hpp"
#include "ncsym/matrix.hpp"

using namespace ncsym;

namespace {

using IntComb = LinComb<int>;

// Laplace expansion along the first row; quadratic-time elimination in the
// library is checked against this exponential but unmistakable definition.
template <class S>
S cofactor_det(const Matrix<S>& m) {
    const int n = m.rows();
    if (n == 0) return S(1);
    if (n == 1) return m(0, 0);
    S det(0);
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Matrix<S> minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        const S term = m(0, j) * cofactor_det(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

Matrix<Integer> random_int_matrix(int n, std::mt19937& gen) {
    std::uniform_int_distribution<int> d(-6, 6);
    Matrix<Integer> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = d(gen);
    return m;
}

} // namespace

TEST_CASE("linear combinations drop zero terms") {
    const IntComb x(7, Rational(2, 3));
    CHECK(x.term_count() == 1);
    CHECK(x.coefficient(7) == Rational(2, 3));
    CHECK(x.coefficient(8) == 0);
    CHECK((x - x).is_zero());
    CHECK((x + (-x)) == IntComb::zero());
    CHECK(IntComb(5, 0).is_zero());

    IntComb y = x;
    y *= 0;
    CHECK(y.is_zero());

    IntComb z;
    z.add_term(1, Rational(1, 2));
    z.add_term(1, Rational(1, 2));
    CHECK(z.coefficient(1) == 1);
    z.add_term(1, -1);
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
}

TEST_CASE("linear combination arithmetic") {
    IntComb a(1);
    a.add_term(2, Rational(3));
    const IntComb b(2, Rational(-3));
    const IntComb sum = a + b;
    CHECK(sum == IntComb(1));
    CHECK((Rational(2) * a).coefficient(2) == 6);
    CHECK((-a).coefficient(1) == -1);
    IntComb c = a;
    c -= a;
    CHECK(c.is_zero());
}

TEST_CASE("tensor of combinations multiplies coefficients pairwise") {
    IntComb a(1, Rational(1, 2));
    a.add_term(2, 1);
    const LinComb<std::string> b("u", 3);
    const auto t = tensor(a, b);
    CHECK(t.term_count() == 2);
    CHECK(t.coefficient({1, "u"}) == Rational(3, 2));
    CHECK(t.coefficient({2, "u"}) == 3);
    CHECK(tensor(IntComb{}, b).is_zero());
}

TEST_CASE("linear and bilinear extension") {
    const auto doubler = [](int k) { return IntComb(k, 2); };
    IntComb x(1, Rational(1, 2));
    x.add_term(3, -1);
    const IntComb y = linear_extend(doubler, x);
    CHECK(y.coefficient(1) == 1);
    CHECK(y.coefficient(3) == -2);

    const auto adder = [](int k, int l) { return IntComb(k + l); };
    IntComb u(1);
    u.add_term(2, 1);
    const IntComb v(10, Rational(1, 3));
    const IntComb w = bilinear_extend(adder, u, v);
    CHECK(w.coefficient(11) == Rational(1, 3));
    CHECK(w.coefficient(12) == Rational(1, 3));
    CHECK(bilinear_extend(adder, u, IntComb{}).is_zero());
}

TEST_CASE("matrix basics") {
    Matrix<Integer> m(2, 3);
    m(0, 0) = 1;
    m(1, 2) = 5;
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.transpose()(2, 1) == 5);
    CHECK(m.transpose().transpose() == m);

    const auto id = Matrix<Integer>::identity(3);
    Matrix<Integer> a(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = i * 3 + j + 1;
    CHECK(a * id == a);
    CHECK(id * a == a);
    CHECK_THROWS_AS(a * m, std::invalid_argument);

    Matrix<Integer> b(3, 2);
    b(0, 0) = 1;
    b(1, 1) = 1;
    b(2, 0) = 2;
    const Matrix<Integer> p = a * b;
    CHECK(p(0, 0) == 1 * 1 + 3 * 2);
    CHECK(p(2, 1) == 8);
}

TEST_CASE("exact determinants over the integers") {
    Matrix<Integer> m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 2;
    CHECK(det_exact(m) == 1);
    CHECK(det_exact(Matrix<Integer>::identity(4)) == 1);
    CHECK(det_exact(Matrix<Integer>(3, 3)) == 0);
    CHECK(det_exact(Matrix<Integer>(0, 0)) == 1);
    CHECK_THROWS_AS(det_exact(Matrix<Integer>(2, 3)), std::invalid_argument);

    // Pivoting path: leading zero forces a row swap and a sign flip.
    Matrix<Integer> s(2, 2);
    s(0, 1) = 1;
    s(1, 0) = 1;
    CHECK(det_exact(s) == -1);

    std::mt19937 gen(1729);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 5;
        const Matrix<Integer> r = random_int_matrix(n, gen);
        CHECK(det_exact(r) == cofactor_det(r));
    }
}

TEST_CASE("exact determinants over the rationals") {
    Matrix<Rational> m(2, 2);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(1, 3);
    m(1, 0) = Rational(1, 4);
    m(1, 1) = Rational(1, 5);
    CHECK(det_exact(m) == Rational(1, 60));

    std::mt19937 gen(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 4;
        const Matrix<Integer> r = random_int_matrix(n, gen);
        Matrix<Rational> q(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q(i, j) = Rational(r(i, j), i + 2);
        CHECK(det_exact(q) == cofactor_det(q));
    }
}

TEST_CASE("row reduction, rank, and kernels") {
    Matrix<Rational> m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(0, 2) = 3;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(1, 2) = 6;
    CHECK(rank(m) == 1);
    Matrix<Rational> copy = m;
    CHECK(rref(copy) == std::vector<int>{0});
    CHECK(copy(0, 1) == 2);
    CHECK(copy(1, 0) == 0);

    CHECK(rank(Matrix<Rational>::identity(4)) == 4);
    CHECK(kernel_basis(Matrix<Rational>::identity(3)).empty());

    const auto kz = kernel_basis(Matrix<Rational>(2, 3));
    REQUIRE(kz.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(kz[i][i] == 1);

    Matrix<Rational> row(1, 2);
    row(0, 0) = 1;
    row(0, 1) = 1;
    const auto kr = kernel_basis(row);
    REQUIRE(kr.size() == 1);
    CHECK(kr[0][0] == -kr[0][1]);
    CHECK(kr[0][1] == 1);
}

TEST_CASE("kernel vectors annihilate and count the nullity") {
    std::mt19937 gen(555);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const int rows = 1 + trial % 5;
        const int cols = 1 + (trial / 2) % 6;
        Matrix<Rational> m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = d(gen);
        const auto basis = kernel_basis(m);
        CHECK(static_cast<int>(basis.size()) == cols - rank(m));
        for (const auto& v : basis)
            for (int i = 0; i < rows; ++i) {
                Rational dot = 0;
                for (int j = 0; j < cols; ++j) dot += m(i, j) * v[j];
                CHECK(dot == 0);
            }
    }
}
