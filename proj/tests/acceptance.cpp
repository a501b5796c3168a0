// Acceptance criteria, one line each. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "test_util.hpp"
#include "toricsec/chow.hpp"
#include "toricsec/classify.hpp"
#include "toricsec/families.hpp"
#include "toricsec/secant.hpp"

using namespace toricsec;

namespace {

// Collects failed sub-checks for one criterion.
class Tally
{
public:
    template <class A, class B>
    void eq(const std::string& what, const A& got, const B& expected)
    {
        ++count_;
        if (got == expected)
            return;
        std::ostringstream ss;
        ss << what << ": got " << got << ", expected " << expected;
        failures_.push_back(ss.str());
    }
    void ok(const std::string& what, bool cond)
    {
        ++count_;
        if (!cond)
            failures_.push_back(what);
    }

    int count() const { return count_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    int count_ = 0;
    std::vector<std::string> failures_;
};

Integer integral(const ChowRing& r, const ChowCycle& c)
{
    Rational q = r.integrate(c);
    return Integer(numerator(q)) / Integer(denominator(q));
}

LatticePolytope product(std::vector<long> d, std::vector<std::size_t> n)
{
    return product_of_simplices(d, n);
}

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

std::vector<std::vector<long>> all_compositions(long d, std::size_t n)
{
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    compositions(d, n, cur, out);
    return out;
}

FamilyLabel label(Family f, std::size_t n, long k = 0, std::size_t l = 0)
{
    FamilyLabel out;
    out.family = f;
    out.n = n;
    out.k = k;
    out.l = l;
    return out;
}

void c1_hexagon(Tally& t)
{
    auto r = analyze(hexagon());
    t.ok("family General", r.family.family == Family::General);
    t.eq("dim_sec", r.dim_sec, 5u);
    t.eq("deg_sec", r.deg_sec, 3);
    t.eq("secant_rhs", secant_rhs(hexagon()), 6);
}

void c2_triple_triangle(Tally& t)
{
    auto p = simplex(2, 3);
    auto r = analyze(p);
    t.eq("dim_sec", r.dim_sec, 5u);
    t.eq("deg_sec", r.deg_sec, 15);
    t.eq("surface formula", surface_secant_degree(p), 15);
    t.eq("secant_rhs / 2", secant_rhs(p) / 2, 15);
}

void c3_cube(Tally& t)
{
    auto p = cube(3);
    t.eq("secant_rhs", secant_rhs(p), 2);
    auto r = analyze(p);
    t.eq("dim_sec", r.dim_sec, 7u);
    t.eq("r", r.r, 7u);
    t.eq("deg_sec", r.deg_sec, 1);
    auto x = toric_variety(p);
    const auto& ring = x.ring;
    auto c1 = ring.chern_class(1);
    t.eq("c1^3", integral(ring, ring.power(c1, 3)), 48);
    t.eq("c1c2", integral(ring, ring.multiply(c1, ring.chern_class(2))), 24);
}

void c4_veronese(Tally& t)
{
    const long expected[] = {0, 0, 3, 10, 35};
    for (std::size_t n = 2; n <= 4; ++n) {
        auto r = analyze(simplex(n, 2));
        t.eq("deg 2D_" + std::to_string(n), r.deg_sec, expected[n]);
        t.eq("dim 2D_" + std::to_string(n), r.dim_sec, 2 * n);
    }
    for (std::size_t n = 1; n <= 4; ++n)
        t.eq("secant_rhs 2D_" + std::to_string(n), secant_rhs(simplex(n, 2)), 0);
}

void c5_segre(Tally& t)
{
    auto r = analyze(product({1, 1}, {2, 2}));
    t.eq("dim D2xD2", r.dim_sec, 7u);
    t.eq("deg D2xD2", r.deg_sec, 3);
    for (std::size_t n = 2; n <= 6; ++n)
        t.eq("deg D1xD" + std::to_string(n - 1), analyze(product({1, 1}, {1, n - 1})).deg_sec, 1);
}

void c6_scrolls(Tally& t)
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (long d = static_cast<long>(n); d <= 8; ++d)
            for (const auto& c : all_compositions(d, n)) {
                Integer rhs = secant_rhs(scroll_polytope(c));
                std::string what = "n=" + std::to_string(n) + " d=" + std::to_string(d);
                if (d >= static_cast<long>(n) + 2) {
                    long nn = static_cast<long>(n);
                    t.eq(what, rhs, Integer(d * d - (2 * nn + 1) * d + nn * (nn + 1)));
                } else {
                    t.eq(what, rhs, 0);
                }
            }
}

void c7_segre_veronese(Tally& t)
{
    struct Case
    {
        std::vector<long> d;
        std::vector<std::size_t> n;
    };
    std::vector<Case> cases{{{3}, {2}}, {{4}, {2}}, {{1, 2}, {1, 1}}, {{2, 2}, {1, 1}}, {{1, 1, 1}, {1, 1, 1}}, {{1, 1, 2}, {1, 1, 1}}};
    for (const auto& c : cases)
        t.eq("case", 2 * segre_veronese_secant_degree(c.d, c.n), secant_rhs(product(c.d, c.n)));
    // d-uple corollary at (d, n) = (3, 2)
    const long d = 3, n = 2;
    Integer sum = 0;
    for (long j = 0; j <= n; ++j) {
        Integer term = pow(Integer(d), static_cast<unsigned>(j)) * binomial(2 * n + 1, j) * binomial(2 * n - j, n - j);
        sum += (n - j) % 2 == 0 ? term : Integer(-term);
    }
    Integer corollary = (pow(Integer(d), static_cast<unsigned>(2 * n)) - sum) / 2;
    t.eq("d-uple corollary", corollary, 15);
    std::vector<long> dv{3};
    std::vector<std::size_t> nv{2};
    t.eq("segre_veronese(3;2)", segre_veronese_secant_degree(dv, nv), corollary);
    t.eq("matches criterion 2", analyze(simplex(2, 3)).deg_sec, corollary);
}

void c8_classification(Tally& t)
{
    std::mt19937 rng(8);
    auto check = [&](const std::string& name, const LatticePolytope& p, const FamilyLabel& expected) {
        t.ok(name, classify(p).same_family(expected));
        for (int i = 0; i < 20; ++i)
            t.ok(name + " image", classify(transform(p, testing::random_affine(p.dim(), rng))).same_family(expected));
    };
    for (std::size_t n = 1; n <= 5; ++n) {
        std::string s = std::to_string(n);
        check("simplex " + s, simplex(n), label(Family::Simplex, n));
        check("doubled " + s, simplex(n, 2), label(Family::DoubledSimplex, n));
        for (long k = 0; k + 2 <= static_cast<long>(n); ++k)
            check("truncated " + s, truncated_doubled_simplex(n, k), label(Family::TruncatedDoubledSimplex, n, k));
        for (std::size_t l = 1; l < n; ++l)
            check("product " + s, product({1, 1}, {l, n - l}), label(Family::ProductOfSimplices, n, 0, std::min(l, n - l)));
    }
    check("hexagon", hexagon(), label(Family::General, 2));
    check("cube", cube(3), label(Family::General, 3));
    check("3D_2", simplex(2, 3), label(Family::General, 2));
    for (std::size_t n = 1; n <= 4; ++n)
        for (long d = static_cast<long>(n) + 2; d <= 8; ++d)
            for (const auto& c : all_compositions(d, n))
                check("scroll", scroll_polytope(c), label(Family::General, n));
}

void c9_properties(Tally& t)
{
    for (const auto& [name, p] : testing::catalog(4)) {
        auto x = toric_variety(p);
        const auto& ring = x.ring;
        const auto n = static_cast<unsigned>(p.dim());
        auto s = stats(p);
        t.eq(name + " H^n", degree_of_embedding(x), normalized_volume(p));
        t.eq(name + " Riemann-Roch", riemann_roch_count(x), Integer(lattice_points(p).size()));
        t.eq(name + " c_n", integral(ring, ring.chern_class(n)), Integer(p.vertices().size()));
        if (n == 2) {
            auto c1 = ring.chern_class(1);
            t.eq(name + " Noether", integral(ring, ring.power(c1, 2)) + integral(ring, ring.chern_class(2)), 12);
        }
        if (n == 3) {
            // interior points from the Ehrhart polynomial at -1
            Rational chi = ring.integrate(ring.multiply(ring.exponential(Rational(-1) * x.hyperplane), ring.todd()));
            t.eq(name + " Ehrhart duality", -chi, Rational(s.interior_points));
        }
        t.ok(name + " c * c^-1", ring.multiply(ring.total_chern(), ring.inverse_total_chern()) == ring.one());
    }
}

void c10_subsets(Tally& t)
{
    std::vector<IntVec> pts;
    for (const auto& x : lattice_points(simplex(2, 3)))
        if (x != make_vec({1, 1}))
            pts.push_back(x);
    auto a = analyze_points(PointConfiguration(pts));
    t.ok("3D_2 minus (1,1): hypothesis", a.hypothesis_ok);
    t.ok("3D_2 minus (1,1): dim 5", a.dim_sec && *a.dim_sec == 5);
    t.ok("3D_2 minus (1,1): divides 15", a.deg_divides && *a.deg_divides == 15);
    auto h = analyze_points(hexagon_points());
    t.ok("outer hexagon: dim 5", h.dim_sec && *h.dim_sec == 5);
    t.ok("outer hexagon: deg 1", h.deg_sec && *h.deg_sec == 1);
    t.ok("outer hexagon: divides 3", h.deg_divides && *h.deg_divides == 3);
}

}  // namespace

int main()
{
    struct Criterion
    {
        const char* name;
        std::function<void(Tally&)> run;
    };
    const std::vector<Criterion> criteria{
        {"hexagon: General, dim 5, deg 3, rhs 6", c1_hexagon},
        {"3D_2: dim 5, deg 15 by both formulas", c2_triple_triangle},
        {"cube: rhs 2, dim 7 = r, deg 1, c1^3 = 48, c1c2 = 24", c3_cube},
        {"Veronese: deg 3, 10, 35 and dim 2n; rhs 0", c4_veronese},
        {"Segre: D2xD2 dim 7 deg 3; D1xD_{n-1} deg 1", c5_segre},
        {"scrolls: rhs d^2-(2n+1)d+n(n+1), zero for d = n, n+1", c6_scrolls},
        {"Segre-Veronese closed form equals rhs/2", c7_segre_veronese},
        {"classification of families under 20 AGL images each", c8_classification},
        {"property suite on the catalog", c9_properties},
        {"subset mode examples", c10_subsets},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        std::string error;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run(t);
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = error.empty() && t.failures().empty() && secs < 10.0;
        failed += pass ? 0 : 1;
        std::printf("%s criterion %2zu: %s [%d checks, %.2f s]\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    t.count(), secs);
        if (!error.empty())
            std::printf("     exception: %s\n", error.c_str());
        for (const auto& f : t.failures())
            std::printf("     %s\n", f.c_str());
        if (secs >= 10.0)
            std::printf("     over the 10 s budget\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
