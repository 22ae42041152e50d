#include "doctest.h"
#include "test_util.hpp"

#include "symsemi/errors.hpp"
#include "symsemi/qlinalg.hpp"

using namespace symsemi;
namespace ql = symsemi::qlinalg;

namespace {

// Fraction-free Gaussian elimination on an integer copy of m.
std::size_t bareiss_rank(const SparseMat& m) {
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(c));
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class l = 1;
        for (const auto& e : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.val.den().get_mpz_t());
        for (const auto& e : m.row(i)) a[i][e.col] = e.val.num() * (l / e.val.den());
    }
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t p = rank;
        while (p < r && a[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < r; ++i) {
            for (std::size_t j = col + 1; j < c; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

// Dense Gauss-Jordan null space, written independently of qlinalg.
std::vector<std::vector<Rational>> dense_null_space(const SparseMat& m) {
    auto a = m.to_dense();
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<int> pivot_of_col(c, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t p = row;
        while (p < r && a[p][col].is_zero()) ++p;
        if (p == r) continue;
        std::swap(a[p], a[row]);
        const Rational inv = a[row][col].inverse();
        for (auto& x : a[row]) x *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j < c; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_of_col[col] = static_cast<int>(row++);
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < c; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        std::vector<Rational> v(c);
        v[f] = 1;
        for (std::size_t j = 0; j < c; ++j)
            if (pivot_of_col[j] >= 0) v[j] = -a[pivot_of_col[j]][f];
        basis.push_back(v);
    }
    return basis;
}

} // namespace

TEST_CASE("rref of small matrices") {
    auto r = ql::rref(SparseMat::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

    auto z = ql::rref(SparseMat::from_dense({{0, 1}, {0, 0}}, 2));
    CHECK(z.rank == 1);
    CHECK(z.pivots == std::vector<std::size_t>{1});
}

TEST_CASE("rref is reduced and idempotent") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const SparseMat m = testutil::random_matrix(5, 7, rng);
        const auto r = ql::rref(m);
        CHECK(ql::rref(r.reduced).reduced == r.reduced);
        for (std::size_t i = 0; i < r.rank; ++i) {
            CHECK(r.reduced.at(i, r.pivots[i]) == Rational(1));
            for (std::size_t k = 0; k < r.reduced.rows(); ++k)
                if (k != i) CHECK(r.reduced.at(k, r.pivots[i]).is_zero());
        }
    }
}

TEST_CASE("rank matches fraction-free elimination") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const SparseMat m = testutil::random_matrix(5, 7, rng, 0.4);
        CHECK(ql::rank(m) == bareiss_rank(m));
        CHECK(ql::rref(m).rank == bareiss_rank(m));
    }
}

TEST_CASE("rank of transpose on 200 random matrices") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> sz(1, 20);
    for (int t = 0; t < 200; ++t) {
        const SparseMat m = testutil::random_matrix(sz(rng), sz(rng), rng, 0.2);
        REQUIRE(ql::rank(m) == ql::rank(m.transpose()));
    }
}

TEST_CASE("kernel basis") {
    CHECK(ql::kernel_basis(SparseMat::identity(2)).cols() == 0);

    const SparseMat k = ql::kernel_basis(SparseMat::from_dense({{1, 1}}, 2));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == -k.at(1, 0));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const SparseMat m = testutil::random_matrix(4, 3, rng, 0.9) * testutil::random_matrix(3, 6, rng, 0.9);
        const std::size_t r = ql::rank(m);
        const SparseMat kb = ql::kernel_basis(m);
        CHECK(kb.cols() == 6 - r);
        CHECK((m * kb).is_zero_matrix());
        CHECK(ql::rank(kb) == kb.cols());

        // same span as the oracle basis
        const auto oracle = dense_null_space(m);
        REQUIRE(oracle.size() == kb.cols());
        SparseMat both(6, kb.cols() + oracle.size());
        both.place(kb, 0, 0);
        for (std::size_t j = 0; j < oracle.size(); ++j)
            for (std::size_t i = 0; i < 6; ++i) both.set(i, kb.cols() + j, oracle[j][i]);
        CHECK(ql::rank(both) == kb.cols());
    }
}

TEST_CASE("skew kernel parity") {
    auto a = ql::skew_kernel_parity(SparseMat::from_dense({{0, 1}, {-1, 0}}, 2));
    CHECK(a.ker_dim == 0);
    CHECK(a.parity == 0);

    auto b = ql::skew_kernel_parity(SparseMat::from_dense({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}, 3));
    CHECK(b.ker_dim == 1);
    CHECK(b.parity == 1);

    CHECK_THROWS_AS(ql::skew_kernel_parity(SparseMat::from_dense({{0, 1}, {1, 0}}, 2)), NotSkewSymmetric);
    CHECK_THROWS_AS(ql::skew_kernel_parity(SparseMat(2, 3)), NotSkewSymmetric);

    // B^t J B with J two symplectic blocks and B a random 4x6 of full rank: rank 4
    SparseMat j(4, 4);
    j.set(0, 1, 1);
    j.set(1, 0, -1);
    j.set(2, 3, 1);
    j.set(3, 2, -1);
    std::mt19937_64 rng(8);
    int built = 0;
    while (built < 10) {
        const SparseMat bm = testutil::random_matrix(4, 6, rng, 0.7);
        if (ql::rank(bm) != 4) continue;
        ++built;
        const auto p = ql::skew_kernel_parity(bm.transpose() * j * bm);
        CHECK(p.ker_dim == 2);
        CHECK(p.parity == 0);
    }
}

TEST_CASE("determinant, solve, inverse") {
    const SparseMat m = SparseMat::from_dense({{2, 1}, {1, 1}}, 2);
    CHECK(ql::determinant(m) == Rational(1));
    const SparseMat inv = ql::inverse(m);
    CHECK(m * inv == SparseMat::identity(2));
    auto x = ql::solve(m, {Rational(3), Rational(2)});
    REQUIRE(x);
    CHECK((*x)[0] == Rational(1));
    CHECK((*x)[1] == Rational(1));
    CHECK_THROWS_AS(ql::inverse(SparseMat::from_dense({{1, 2}, {2, 4}}, 2)), Singular);
    CHECK_FALSE(ql::solve(SparseMat::from_dense({{1, 2}, {2, 4}}, 2), {Rational(1), Rational(1)}));
}

TEST_CASE("characteristic polynomial") {
    // [[2,1],[1,2]] -> x^2 - 4x + 3
    auto p = ql::charpoly(SparseMat::from_dense({{2, 1}, {1, 2}}, 2));
    REQUIRE(p.size() == 3);
    CHECK(p[0] == Rational(3));
    CHECK(p[1] == Rational(-4));
    CHECK(p[2] == Rational(1));

    // upper triangular block structure: eigenvalues on the diagonal
    std::mt19937_64 rng(1);
    SparseMat t = testutil::random_matrix(6, 6, rng, 0.6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < i; ++j) t.set(i, j, 0);
    for (std::size_t i = 0; i < 6; ++i) t.set(i, i, Rational(static_cast<long>(i) + 1));
    ql::Poly expect{Rational(1)};
    for (long i = 1; i <= 6; ++i) expect = ql::poly_mul(expect, {Rational(-i), Rational(1)});
    CHECK(ql::charpoly(t) == expect);

    // det(xI - M) at x = 0 is det(-M)
    const SparseMat m = testutil::random_matrix(5, 5, rng, 0.7);
    CHECK(ql::charpoly(m)[0] == -ql::determinant(m));
}

TEST_CASE("positive semidefinite test") {
    using qlinalg::is_positive_semidefinite;
    CHECK(is_positive_semidefinite(SparseMat::identity(3)));
    CHECK(is_positive_semidefinite(SparseMat(2, 2)));
    CHECK_FALSE(is_positive_semidefinite(SparseMat::from_dense({{0, 1}, {1, 0}}, 2)));
    CHECK_FALSE(is_positive_semidefinite(SparseMat::from_dense({{1, 0}, {0, -1}}, 2)));
    CHECK(is_positive_semidefinite(SparseMat::from_dense({{1, 1}, {1, 1}}, 2)));
    CHECK_FALSE(is_positive_semidefinite(SparseMat::from_dense({{1, 2}, {2, 1}}, 2)));
    CHECK_THROWS_AS((void)is_positive_semidefinite(SparseMat::from_dense({{1, 2}, {0, 1}}, 2)), ShapeMismatch);

    // B^t B is PSD; B^t B - I has a negative eigenvalue when B has a nontrivial kernel
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const std::size_t r = 1 + t % 4, c = 2 + t % 5;
        const SparseMat b = testutil::random_matrix(r, c, rng, 0.6);
        const SparseMat g = b.transpose() * b;
        CHECK(is_positive_semidefinite(g));
        if (r < c) CHECK_FALSE(is_positive_semidefinite(g - SparseMat::identity(c) * Rational(1, 1000)));
    }
}
