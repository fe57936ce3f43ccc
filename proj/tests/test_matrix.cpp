#include "bdg/errors.hpp"
#include "bdg/matrix.hpp"

#include <doctest.h>

#include <cstddef>
#include <random>
#include <vector>

using bdg::Int;
using bdg::IntMatrix;
using bdg::Rat;

namespace {

Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m[0][0];
    }
    Int sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) {
            continue;
        }
        IntMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) {
                    row.push_back(m[r][c]);
                }
            }
            minor.push_back(std::move(row));
        }
        const Int term = m[0][j] * cofactor_det(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

IntMatrix random_symmetric(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            m[i][j] = dist(rng);
            m[j][i] = m[i][j];
        }
    }
    return m;
}

// A^T A + I is positive definite for any integer A.
IntMatrix gram_plus_identity(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix a(n, std::vector<Int>(n, 0));
    for (auto& row : a) {
        for (auto& x : row) {
            x = dist(rng);
        }
    }
    IntMatrix b(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                b[i][j] += a[k][i] * a[k][j];
            }
        }
        b[i][i] += 1;
    }
    return b;
}

} // namespace

TEST_CASE("determinant of small fixed matrices") {
    CHECK(bdg::determinant({}) == 1);
    CHECK(bdg::determinant({{Int(5)}}) == 5);
    CHECK(bdg::determinant({{Int(1), Int(2)}, {Int(3), Int(4)}}) == -2);
    CHECK(bdg::determinant({{Int(2), Int(-1), Int(0)},
                            {Int(-1), Int(2), Int(-1)},
                            {Int(0), Int(-1), Int(2)}}) == 4);
    // Singular: repeated rows.
    CHECK(bdg::determinant({{Int(1), Int(2)}, {Int(1), Int(2)}}) == 0);
    // A zero pivot that needs a row swap.
    CHECK(bdg::determinant({{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
    std::mt19937 rng(7101);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
        const IntMatrix m = random_symmetric(rng, n, -6, 6);
        CAPTURE(trial);
        REQUIRE(bdg::determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant is multiplied by -1 under a row swap") {
    std::mt19937 rng(7102);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m = random_symmetric(rng, 4, -5, 5);
        const Int before = bdg::determinant(m);
        std::swap(m[0], m[2]);
        REQUIRE(bdg::determinant(m) == -before);
    }
}

TEST_CASE("positive definiteness of Gram matrices") {
    std::mt19937 rng(7103);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        IntMatrix pd = gram_plus_identity(rng, n, -3, 3);
        CAPTURE(trial);
        REQUIRE(bdg::is_positive_definite(pd));
        for (auto& row : pd) {
            for (auto& x : row) {
                x = -x;
            }
        }
        REQUIRE_FALSE(bdg::is_positive_definite(pd));
    }
}

TEST_CASE("positive definiteness rejects semidefinite and indefinite matrices") {
    CHECK(bdg::is_positive_definite({}));
    CHECK(bdg::is_positive_definite({{Int(1)}}));
    CHECK_FALSE(bdg::is_positive_definite({{Int(0)}}));
    // Semidefinite: rank one.
    CHECK_FALSE(bdg::is_positive_definite({{Int(1), Int(1)}, {Int(1), Int(1)}}));
    // Indefinite despite positive diagonal.
    CHECK_FALSE(bdg::is_positive_definite({{Int(1), Int(3)}, {Int(3), Int(1)}}));
    // Definite but with an off-diagonal larger than the diagonal.
    CHECK(bdg::is_positive_definite({{Int(5), Int(4)}, {Int(4), Int(5)}}));
}

TEST_CASE("solve_linear reproduces the right-hand side") {
    std::mt19937 rng(7104);
    std::uniform_int_distribution<int> rhs_dist(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        const IntMatrix a = gram_plus_identity(rng, n, -3, 3);
        std::vector<Int> rhs(n);
        for (auto& x : rhs) {
            x = rhs_dist(rng);
        }
        const std::vector<Rat> x = bdg::solve_linear(a, rhs);
        REQUIRE(x.size() == n);
        for (std::size_t i = 0; i < n; ++i) {
            Rat acc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                acc += Rat(a[i][j]) * x[j];
            }
            CAPTURE(trial);
            REQUIRE(acc == Rat(rhs[i]));
        }
    }
}

TEST_CASE("solve_linear rejects singular systems") {
    const IntMatrix singular = {{Int(1), Int(2)}, {Int(2), Int(4)}};
    CHECK_THROWS_AS(bdg::solve_linear(singular, {Int(1), Int(1)}),
                    bdg::InputError);
}
