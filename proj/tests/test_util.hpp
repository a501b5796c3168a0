// Shared generators for property tests.

#ifndef TORICSEC_TEST_UTIL_HPP
#define TORICSEC_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "toricsec/zlinalg.hpp"

namespace toricsec::testing {

/// Random unimodular matrix built from elementary row operations, a
/// permutation and sign flips.
inline IntMat random_unimodular(std::size_t n, std::mt19937& rng, int steps = 8)
{
    IntMat m = IntMat::identity(n);
    if (n == 0)
        return m;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (int s = 0; s < steps && n > 1; ++s) {
        std::size_t a = idx(rng), b = idx(rng);
        if (a != b)
            m.add_row_multiple(a, b, Integer(mult(rng)));
    }
    for (std::size_t i = n; i > 1; --i) {
        std::uniform_int_distribution<std::size_t> j(0, i - 1);
        m.swap_rows(i - 1, j(rng));
    }
    std::bernoulli_distribution flip(0.3);
    for (std::size_t i = 0; i < n; ++i)
        if (flip(rng))
            m.negate_row(i);
    return m;
}

inline AffineUnimodularMap random_affine(std::size_t n, std::mt19937& rng)
{
    std::uniform_int_distribution<int> shift(-5, 5);
    IntVec t(n);
    for (auto& x : t)
        x = shift(rng);
    return AffineUnimodularMap(random_unimodular(n, rng), t);
}

inline IntMat random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng, int bound = 6)
{
    std::uniform_int_distribution<int> e(-bound, bound);
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = e(rng);
    return m;
}

}  // namespace toricsec::testing

#endif
