#include "bdg/matrix.hpp"

#include "bdg/errors.hpp"

#include <cstddef>
#include <utility>

namespace bdg {

Int determinant(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == k) {
                return 0;
            }
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool is_positive_definite(IntMatrix a) {
    const std::size_t n = a.size();
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) {
            return false;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return true;
}

std::vector<Rat> solve_linear(const IntMatrix& a, const std::vector<Int>& rhs) {
    const std::size_t n = a.size();
    if (rhs.size() != n) {
        throw InputError("right-hand side size does not match the matrix");
    }
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) {
            throw InputError("matrix is not square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = Rat(a[i][j]);
        }
        m[i][n] = Rat(rhs[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw InputError("singular matrix");
        }
        std::swap(m[k], m[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) {
                continue;
            }
            const Rat factor = m[i][k] / m[k][k];
            for (std::size_t j = k; j <= n; ++j) {
                m[i][j] -= factor * m[k][j];
            }
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = m[i][n] / m[i][i];
    }
    return x;
}

} // namespace bdg
