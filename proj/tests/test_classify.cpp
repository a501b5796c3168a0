#include <doctest.h>

#include <algorithm>
#include <random>

#include "catalog.hpp"
#include "test_util.hpp"
#include "toricsec/chow.hpp"
#include "toricsec/classify.hpp"
#include "toricsec/errors.hpp"
#include "toricsec/families.hpp"

using namespace toricsec;
using toricsec::testing::catalog;
using toricsec::testing::random_affine;

namespace {

FamilyLabel label(Family f, std::size_t n, long k = 0, std::size_t l = 0)
{
    FamilyLabel out;
    out.family = f;
    out.n = n;
    out.k = k;
    out.l = l;
    return out;
}

LatticePolytope product(std::size_t a, std::size_t b)
{
    std::vector<long> d{1, 1};
    std::vector<std::size_t> dims{a, b};
    return product_of_simplices(d, dims);
}

// every composition of d into n positive parts
void compositions(long d, std::size_t n, std::vector<long>& cur, std::vector<std::vector<long>>& out)
{
    if (n == 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long a = 1; a + static_cast<long>(n) - 1 <= d; ++a) {
        cur.push_back(a);
        compositions(d - a, n - 1, cur, out);
        cur.pop_back();
    }
}

void check_label(const LatticePolytope& p, const FamilyLabel& expected, std::mt19937& rng, int images = 20)
{
    auto got = classify(p);
    CHECK_MESSAGE(got.same_family(expected), to_string(got), " != ", to_string(expected));
    for (int t = 0; t < images; ++t) {
        auto img = transform(p, random_affine(p.dim(), rng));
        auto l = classify(img);
        CHECK_MESSAGE(l.same_family(expected), to_string(l), " != ", to_string(expected));
        if (l.witness) {
            std::vector<IntVec> mapped;
            for (const auto& x : lattice_points(img))
                mapped.push_back(l.witness->apply(x));
            std::sort(mapped.begin(), mapped.end());
            CHECK(mapped == lattice_points(canonical_model(l)));
        } else {
            CHECK(l.family == Family::General);
        }
    }
}

}  // namespace

TEST_CASE("max_length2_vertex")
{
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(max_length2_vertex(simplex(n, 2)).count == n);
    CHECK(max_length2_vertex(product(1, 2)).count == 0);
    CHECK(max_length2_vertex(product(2, 2)).count == 0);
    auto t = truncated_doubled_simplex(4, 1);
    auto best = max_length2_vertex(t);
    CHECK(best.count == 2);
    // 0 and 2e_4 both have two edges of length 2; the lexicographic rule picks 0
    CHECK(best.vertex == IntVec(4));
}

TEST_CASE("classify examples")
{
    CHECK(classify(simplex(3, 2)).same_family(label(Family::DoubledSimplex, 3)));
    CHECK(classify(hexagon()).family == Family::General);
    CHECK(classify(product(1, 2)).same_family(label(Family::ProductOfSimplices, 3, 0, 1)));
    CHECK(classify(product(2, 1)).same_family(label(Family::ProductOfSimplices, 3, 0, 1)));
    CHECK(classify(cube(3)).family == Family::General);
    CHECK(classify(simplex(2, 3)).family == Family::General);
    CHECK(classify(simplex(1)).same_family(label(Family::Simplex, 1)));
    CHECK(classify(simplex(1, 2)).same_family(label(Family::DoubledSimplex, 1)));
    for (long d = 3; d <= 6; ++d)
        CHECK(classify(simplex(1, d)).family == Family::General);

    auto bad = LatticePolytope::from_vertices(std::vector<IntVec>{make_vec({0, 0}), make_vec({2, 0}), make_vec({0, 1})});
    CHECK_THROWS_AS(classify(bad), NotSmoothError);

    auto l = classify(truncated_doubled_simplex(4, 1));
    CHECK(to_string(l) == "truncated(n=4,k=1)");
    CHECK(to_string(classify(product(1, 2))) == "product(n=3,l=1)");
    CHECK(to_string(classify(hexagon())) == "general(n=2)");
    CHECK_FALSE(classify(hexagon()).witness.has_value());
}

TEST_CASE("is_subpolytope_of_doubled_simplex")
{
    for (std::size_t n = 2; n <= 4; ++n)
        for (long k = -1; k <= static_cast<long>(n) - 1; ++k)
            CHECK(is_subpolytope_of_doubled_simplex(truncated_doubled_simplex(n, k)));
    CHECK_FALSE(is_subpolytope_of_doubled_simplex(simplex(2, 3)));
    CHECK_FALSE(is_subpolytope_of_doubled_simplex(simplex(1, 3)));
}

TEST_CASE("classification of the constructed families is AGL invariant")
{
    std::mt19937 rng(53);
    for (std::size_t n = 1; n <= 5; ++n) {
        CAPTURE(n);
        check_label(simplex(n), label(Family::Simplex, n), rng);
        check_label(simplex(n, 2), label(Family::DoubledSimplex, n), rng);
        check_label(truncated_doubled_simplex(n, -1), label(Family::DoubledSimplex, n), rng, 0);
        check_label(truncated_doubled_simplex(n, static_cast<long>(n) - 1), label(Family::Simplex, n), rng, 0);
        for (long k = 0; k + 2 <= static_cast<long>(n); ++k)
            check_label(truncated_doubled_simplex(n, k), label(Family::TruncatedDoubledSimplex, n, k), rng);
        for (std::size_t l = 1; l < n; ++l)
            check_label(product(l, n - l), label(Family::ProductOfSimplices, n, 0, std::min(l, n - l)), rng);
    }
}

TEST_CASE("general polytopes")
{
    std::mt19937 rng(59);
    check_label(hexagon(), label(Family::General, 2), rng);
    check_label(cube(3), label(Family::General, 3), rng);
    check_label(cube(4), label(Family::General, 4), rng, 5);
    check_label(simplex(2, 3), label(Family::General, 2), rng);
    check_label(simplex(3, 3), label(Family::General, 3), rng, 5);
    for (std::size_t n = 1; n <= 4; ++n)
        for (long d = static_cast<long>(n); d <= 8; ++d) {
            std::vector<std::vector<long>> comps;
            std::vector<long> cur;
            compositions(d, n, cur, comps);
            for (const auto& c : comps) {
                CAPTURE(n);
                CAPTURE(d);
                auto p = scroll_polytope(c);
                int images = n <= 3 ? 20 : 3;
                if (d >= static_cast<long>(n) + 2)
                    check_label(p, label(Family::General, n), rng, images);
                else if (n == 1)
                    check_label(p, label(d == 1 ? Family::Simplex : Family::DoubledSimplex, 1), rng, images);
                else if (d == static_cast<long>(n))
                    check_label(p, label(Family::ProductOfSimplices, n, 0, 1), rng, images);
                else
                    check_label(p, label(Family::TruncatedDoubledSimplex, n, static_cast<long>(n) - 2), rng, images);
            }
        }
}

TEST_CASE("debug all-vertices check agrees with the distinguished vertex")
{
    ClassifyOptions debug{true};
    for (const auto& [name, p] : catalog(5)) {
        CAPTURE(name);
        CHECK(classify(p, debug).same_family(classify(p)));
    }
}

TEST_CASE("classification agrees with the double point formula")
{
    for (const auto& [name, p] : catalog(4)) {
        CAPTURE(name);
        Integer rhs = secant_rhs(p);
        if (classify(p).family == Family::General)
            CHECK(rhs > 0);
        else
            CHECK(rhs == 0);
    }
}
