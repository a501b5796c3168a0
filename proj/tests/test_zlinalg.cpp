#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "toricsec/zlinalg.hpp"

using namespace toricsec;
using toricsec::testing::random_matrix;
using toricsec::testing::random_unimodular;

namespace {

bool is_row_hnf(const IntMat& h)
{
    std::size_t last_pivot_col = 0;
    bool have_pivot = false;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t j = 0;
        while (j < h.cols() && h(i, j) == 0)
            ++j;
        if (j == h.cols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row || (have_pivot && j <= last_pivot_col))
            return false;
        if (h(i, j) <= 0)
            return false;
        for (std::size_t k = 0; k < i; ++k)
            if (h(k, j) < 0 || h(k, j) >= h(i, j))
                return false;
        last_pivot_col = j;
        have_pivot = true;
    }
    return true;
}

// gcd of all k x k minors of a 2 x 3 matrix, k = 1, 2
Integer gcd_of_2x2_minors(const IntMat& m)
{
    Integer g = 0;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            g = gcd(g, m(0, a) * m(1, b) - m(0, b) * m(1, a));
    return abs(g);
}

}  // namespace

TEST_CASE("primitive_vector")
{
    CHECK(primitive_vector(make_vec({2, 4})) == make_vec({1, 2}));
    CHECK(primitive_vector(make_vec({1, 0, 0})) == make_vec({1, 0, 0}));
    CHECK(primitive_vector(make_vec({-3, 6, 9})) == make_vec({-1, 2, 3}));
    CHECK_THROWS_WITH_AS(primitive_vector(make_vec({0, 0})), "zero vector has no primitive direction",
                         std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(-9, 9), c(1, 12);
    for (int t = 0; t < 200; ++t) {
        IntVec v = make_vec({e(rng), e(rng), e(rng)});
        if (is_zero(v))
            continue;
        Integer k = c(rng);
        CHECK(primitive_vector(k * v) == primitive_vector(v));
        CHECK(content(primitive_vector(v)) == 1);
    }
}

TEST_CASE("is_partial_lattice_basis")
{
    std::vector<IntVec> e12{make_vec({1, 0, 0}), make_vec({0, 1, 0})};
    CHECK(is_partial_lattice_basis(e12, 3));
    std::vector<IntVec> two{make_vec({2, 0})};
    CHECK_FALSE(is_partial_lattice_basis(two, 2));
    // det [[1,1],[1,2]] = 1
    std::vector<IntVec> skew{make_vec({1, 1}), make_vec({1, 2})};
    CHECK(is_partial_lattice_basis(skew, 2));
    std::vector<IntVec> dependent{make_vec({1, 2, 3}), make_vec({2, 4, 6})};
    CHECK_FALSE(is_partial_lattice_basis(dependent, 3));
    std::vector<IntVec> many{make_vec({1, 0}), make_vec({0, 1}), make_vec({1, 1})};
    CHECK_THROWS_WITH_AS(is_partial_lattice_basis(many, 2), "too many vectors", std::invalid_argument);
}

TEST_CASE("partial lattice basis is invariant under unimodular maps")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        IntMat s = random_matrix(2, 4, rng, 3);
        IntMat u = random_unimodular(4, rng);
        std::vector<IntVec> vs{s.row(0), s.row(1)};
        std::vector<IntVec> image{u * s.row(0), u * s.row(1)};
        CHECK(is_partial_lattice_basis(vs, 4) == is_partial_lattice_basis(image, 4));
    }
}

TEST_CASE("hermite_normal_form examples")
{
    auto id = hermite_normal_form(IntMat::identity(3));
    CHECK(id.H == IntMat::identity(3));
    CHECK(id.U == IntMat::identity(3));

    auto diag = hermite_normal_form(IntMat{{2, 0}, {0, 2}});
    CHECK(diag.H == IntMat{{2, 0}, {0, 2}});
    CHECK(diag.U == IntMat::identity(2));

    auto h = hermite_normal_form(IntMat{{1, 2}, {3, 4}});
    CHECK(h.H(0, 0) == 1);
    CHECK(abs(determinant(h.H)) == 2);  // cofactor expansion: 1*4 - 2*3 = -2
    CHECK(h.H == IntMat{{1, 0}, {0, 2}});
}

TEST_CASE("hermite_normal_form properties on random matrices")
{
    std::mt19937 rng(3);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMat m = random_matrix(r, c, rng);
        auto hr = hermite_normal_form(m);
        CHECK(hr.U * m == hr.H);
        CHECK(abs(determinant(hr.U)) == 1);
        CHECK(is_row_hnf(hr.H));
    }
}

TEST_CASE("determinant and rank")
{
    CHECK(determinant(IntMat{{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) == 24);
    CHECK(determinant(IntMat{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMat{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK(rank(IntMat{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);

    // Laplace expansion as the oracle
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        IntMat m = random_matrix(3, 3, rng);
        Integer laplace = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                          m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                          m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        CHECK(determinant(m) == laplace);
    }
}

TEST_CASE("smith invariants against gcd of minors")
{
    auto d = smith_invariants(IntMat{{2, 0}, {0, 3}});
    CHECK(d == std::vector<Integer>{1, 6});
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        IntMat m = random_matrix(2, 3, rng, 5);
        Integer g1 = 0;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                g1 = gcd(g1, m(i, j));
        Integer g2 = gcd_of_2x2_minors(m);
        auto inv = smith_invariants(m);
        REQUIRE(inv.size() == 2);
        CHECK(inv[0] == abs(g1));
        CHECK(inv[0] * inv[1] == g2);
    }
}

TEST_CASE("integer kernel")
{
    std::mt19937 rng(23);
    for (int t = 0; t < 60; ++t) {
        IntMat m = random_matrix(2, 4, rng, 4);
        IntMat k = integer_kernel(m);
        CHECK(k.rows() == 4 - rank(m));
        for (std::size_t i = 0; i < k.rows(); ++i)
            CHECK(is_zero(m * k.row(i)));
        std::vector<IntVec> rows;
        for (std::size_t i = 0; i < k.rows(); ++i)
            rows.push_back(k.row(i));
        CHECK(is_partial_lattice_basis(rows, 4));  // saturated
    }
}

TEST_CASE("affine unimodular maps")
{
    CHECK(apply_map(AffineUnimodularMap::identity(3), make_vec({4, -1, 2})) == make_vec({4, -1, 2}));
    IntVec v = make_vec({3, 7});
    CHECK(is_zero(apply_map(AffineUnimodularMap::translation(Integer(-1) * v), v)));
    std::vector<std::size_t> swap{1, 0};
    CHECK(apply_map(AffineUnimodularMap::permutation(swap), make_vec({1, 2})) == make_vec({2, 1}));
    CHECK_THROWS_AS(AffineUnimodularMap(IntMat{{2, 0}, {0, 1}}, make_vec({0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(apply_map(AffineUnimodularMap::identity(2), make_vec({1, 2, 3})), std::invalid_argument);

    std::mt19937 rng(29);
    for (int t = 0; t < 50; ++t) {
        auto m = toricsec::testing::random_affine(3, rng);
        IntVec p = make_vec({static_cast<long>(rng() % 7) - 3, 2, -1});
        CHECK(m.inverse().apply(m.apply(p)) == p);
        CHECK(m.compose(m.inverse()) == AffineUnimodularMap::identity(3));
    }
}

TEST_CASE("affine lattice chart saturates the hull lattice")
{
    // triangle 2*Delta_2 placed in the plane x + y + z = 2 of Z^3
    std::vector<IntVec> pts{make_vec({2, 0, 0}), make_vec({0, 2, 0}), make_vec({0, 0, 2})};
    AffineLatticeChart chart(pts);
    CHECK(chart.dim() == 2);
    for (const auto& p : pts)
        CHECK(chart.to_ambient(chart.to_local(p)) == p);
    // (1,1,0) is a lattice point of the plane and must get integral coordinates
    IntVec mid = make_vec({1, 1, 0});
    CHECK(chart.to_ambient(chart.to_local(mid)) == mid);
    IntVec a = chart.to_local(pts[0]), b = chart.to_local(pts[1]), c = chart.to_local(pts[2]);
    IntMat e = IntMat::from_rows(std::vector<IntVec>{b - a, c - a}, 2);
    CHECK(abs(determinant(e)) == 4);
}
