#include "toricsec/selftest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "toricsec/chow.hpp"
#include "toricsec/classify.hpp"
#include "toricsec/errors.hpp"
#include "toricsec/families.hpp"
#include "toricsec/io.hpp"
#include "toricsec/secant.hpp"

namespace toricsec {

namespace {

class Suite
{
public:
    template <class A, class B>
    void expect(const std::string& name, const A& got, const B& expected)
    {
        bool ok = got == expected;
        std::ostringstream ss;
        if (!ok)
            ss << "got " << got << ", expected " << expected;
        results_.push_back({name, ok, ss.str()});
    }

    void check(const std::string& name, bool ok) { results_.push_back({name, ok, ok ? "" : "condition failed"}); }

    template <class E>
    void expect_throw(const std::string& name, const std::function<void()>& f)
    {
        try {
            f();
        } catch (const E&) {
            results_.push_back({name, true, ""});
            return;
        } catch (const std::exception& e) {
            results_.push_back({name, false, std::string("wrong exception: ") + e.what()});
            return;
        }
        results_.push_back({name, false, "no exception"});
    }

    void guard(const std::string& name, const std::function<void()>& f)
    {
        try {
            f();
        } catch (const std::exception& e) {
            results_.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }

    std::vector<SelfTestResult> take() { return std::move(results_); }

private:
    std::vector<SelfTestResult> results_;
};

std::size_t ray_index(const Fan& f, const IntVec& v)
{
    return static_cast<std::size_t>(std::find(f.rays.begin(), f.rays.end(), v) - f.rays.begin());
}

std::size_t length2_edges(const LatticePolytope& p)
{
    std::size_t c = 0;
    for (const auto& e : p.edges())
        if (edge_length(p, e) == 2)
            ++c;
    return c;
}

bool parallel_long_edges(const LatticePolytope& p)
{
    std::vector<IntVec> dirs;
    for (const auto& e : p.edges())
        if (edge_length(p, e) == 2) {
            auto d = edge_direction(p, e, e.vertex_indices[0]);
            if (std::find_if(d.begin(), d.end(), [](const Integer& x) { return x != 0; })->sign() < 0)
                d = Integer(-1) * d;
            dirs.push_back(d);
        }
    return dirs.size() == 2 && dirs[0] == dirs[1];
}

// AGL equivalence by matching standard positions up to a coordinate permutation.
bool equivalent(const LatticePolytope& p, const LatticePolytope& q)
{
    if (p.dim() != q.dim() || p.vertices().size() != q.vertices().size())
        return false;
    const auto target = lattice_points(standard_position(p, p.vertices().front()).polytope);
    for (const auto& w : q.vertices()) {
        const auto pts = lattice_points(standard_position(q, w).polytope);
        if (pts.size() != target.size())
            return false;
        std::vector<std::size_t> perm(q.dim());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            auto m = AffineUnimodularMap::permutation(perm);
            std::vector<IntVec> img;
            for (const auto& x : pts)
                img.push_back(m.apply(x));
            std::sort(img.begin(), img.end());
            if (img == target)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

LatticePolytope poly(std::initializer_list<std::initializer_list<long>> verts)
{
    std::vector<IntVec> v;
    for (auto row : verts)
        v.push_back(make_vec(row));
    return LatticePolytope::from_vertices(v);
}

PointConfiguration without(const LatticePolytope& p, const IntVec& x)
{
    std::vector<IntVec> pts;
    for (const auto& y : lattice_points(p))
        if (y != x)
            pts.push_back(y);
    return PointConfiguration(pts);
}

void polytope_examples(Suite& s)
{
    auto hex = hexagon();
    s.expect("hexagon: vertices", hex.vertices().size(), 6u);
    s.expect("hexagon: facets", hex.facets().size(), 6u);
    auto pts = lattice_points(hex);
    s.expect("hexagon: lattice points", pts.size(), 7u);
    s.check("hexagon: (1,1) is the interior point", std::find(pts.begin(), pts.end(), make_vec({1, 1})) != pts.end());
    s.expect("hexagon: normalized volume", normalized_volume(hex), 6);

    std::vector<long> d122{1, 2, 2};
    auto p122 = scroll_polytope(d122);
    s.expect("P_{1,2,2}: edges of length 2", length2_edges(p122), 2u);
    s.check("P_{1,2,2}: the length-2 edges are parallel", parallel_long_edges(p122));
    s.expect("P_{1,2,2}: volume d = 5", normalized_volume(p122), 5);
    s.check("P_{1,2,2}: Cayley polytope with fibers along e_1",
            equivalent(p122, poly({{0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {2, 0, 1}, {0, 0, 0}, {2, 0, 0}})));

    bool smooth = true;
    for (std::size_t n = 2; n <= 5; ++n)
        for (long k = 0; k + 2 <= static_cast<long>(n); ++k)
            smooth = smooth && is_smooth(truncated_doubled_simplex(n, k));
    s.check("(2D_n)_k is smooth for n <= 5", smooth);
    smooth = true;
    for (long a = 1; a <= 3; ++a)
        for (long b = a; b <= 3; ++b)
            for (long c = b; c <= 3; ++c) {
                std::vector<long> d{a, b, c};
                smooth = smooth && is_smooth(scroll_polytope(d));
            }
    s.check("scroll polytopes are smooth", smooth);

    bool fans = true;
    for (std::size_t n = 2; n <= 5; ++n)
        for (long k = 0; k + 2 <= static_cast<long>(n); ++k) {
            auto f = normal_fan(truncated_doubled_simplex(n, k));
            IntVec head(n);
            for (long i = 0; i <= k; ++i)
                head[static_cast<std::size_t>(i)] = -1;
            fans = fans && f.rays.size() == n + 2 && ray_index(f, head) < f.rays.size();
        }
    s.check("(2D_n)_k: n+2 rays including -e_1-...-e_{k+1}", fans);

    auto cs = stats(cube(3));
    s.expect("cube: d", cs.volume, 6);
    s.expect("cube: V", cs.vertex_count, 8);
    s.expect("cube: E", cs.edge_points, 8);
    s.expect("cube: I", cs.interior_points, 0);
    s.expect("cube: perimeter", cs.perimeter, 12);
    auto hs = stats(hex);
    s.expect("hexagon: d", hs.volume, 6);
    s.expect("hexagon: B", hs.boundary_points, 6);
    s.expect("hexagon: V", hs.vertex_count, 6);
    s.expect("hexagon: lattice point count", hs.lattice_points, 7);
    auto ts = stats(simplex(2, 3));
    s.expect("3D_2: d", ts.volume, 9);
    s.expect("3D_2: B", ts.boundary_points, 9);
    s.expect("3D_2: V", ts.vertex_count, 3);
    s.expect("3D_2: I", ts.interior_points, 1);

    bool ends = true;
    for (std::size_t n = 1; n <= 5; ++n) {
        ends = ends && lattice_points(truncated_doubled_simplex(n, -1)) == lattice_points(simplex(n, 2));
        ends = ends && lattice_points(truncated_doubled_simplex(n, static_cast<long>(n) - 1)) == lattice_points(simplex(n));
    }
    s.check("(2D_n)_{-1} = 2D_n and (2D_n)_{n-1} = D_n", ends);
}

void chow_examples(Suite& s)
{
    auto cube3 = toric_variety(cube(3));
    const auto& cr = cube3.ring;
    s.expect("cube: c1^3", cr.integrate(cr.power(cr.chern_class(1), 3)), 48);

    auto p2 = toric_variety(simplex(2));
    s.expect("P^2: c2", p2.ring.integrate(p2.ring.chern_class(2)), 3);
    auto c1sq = p2.ring.integrate(p2.ring.power(p2.ring.chern_class(1), 2));
    s.expect("P^2: Noether c1^2 + c2", c1sq + p2.ring.integrate(p2.ring.chern_class(2)), 12);
    s.expect("P^2: todd", p2.ring.integrate(p2.ring.todd()), 1);

    std::vector<long> d112{1, 1, 2};
    for (const auto& [name, p] : std::vector<std::pair<std::string, LatticePolytope>>{
             {"cube", cube(3)}, {"D_3", simplex(3)}, {"2D_3", simplex(3, 2)}, {"P_{1,1,2}", scroll_polytope(d112)},
             {"(2D_3)_1", truncated_doubled_simplex(3, 1)}}) {
        auto x = toric_variety(p);
        const auto& r = x.ring;
        s.expect(name + ": c3 = V", r.integrate(r.chern_class(3)), Rational(p.vertices().size()));
        s.expect(name + ": c1c2", r.integrate(r.multiply(r.chern_class(1), r.chern_class(2))), 24);
        auto inv = r.inverse_total_chern();
        auto c1 = r.chern_class(1), c2 = r.chern_class(2), c3 = r.chern_class(3);
        s.check(name + ": degree-1 part of c^-1 is -c1", inv.part(1) == Rational(-1) * c1);
        s.expect(name + ": degree-3 part of c^-1", r.integrate(inv.part(3)),
                 r.integrate(Rational(2) * r.multiply(c1, c2) - r.power(c1, 3) - c3));
    }

    bool ample = true;
    for (std::size_t n = 2; n <= 5; ++n)
        for (long k = 0; k + 2 <= static_cast<long>(n); ++k) {
            auto t = truncated_doubled_simplex(n, k);
            auto f = normal_fan(t);
            auto d = ample_from_polytope(t);
            IntVec all(n, Integer(-1)), head(n);
            for (long i = 0; i <= k; ++i)
                head[static_cast<std::size_t>(i)] = -1;
            ample = ample && d.coefficients[ray_index(f, all)] == 2 && d.coefficients[ray_index(f, head)] == 1;
            for (std::size_t i = 0; i < n; ++i) {
                IntVec e(n);
                e[i] = 1;
                ample = ample && d.coefficients[ray_index(f, e)] == 0;
            }
        }
    s.check("(2D_n)_k: D = 2D_0 + D_{n+1}", ample);

    auto hex = hexagon();
    s.expect("hexagon: divisor coefficients", ample_from_polytope(hex).coefficients.size(), 6u);
    s.expect("hexagon: H^2", degree_of_embedding(hex), 6);
    s.expect("hexagon: rhs", secant_rhs(hex), 6);
    s.expect("hexagon: Riemann-Roch", riemann_roch_count(hex), 7);
    s.expect("cube: rhs", secant_rhs(cube(3)), 2);
}

void classify_examples(Suite& s)
{
    s.check("hexagon: General", classify(hexagon()).family == Family::General);
    std::vector<long> d11{1, 1};
    std::vector<std::size_t> n12{1, 2};
    auto prod = classify(product_of_simplices(d11, n12));
    s.check("D_1 x D_2: product(l=1)", prod.family == Family::ProductOfSimplices && prod.n == 3 && prod.l == 1);
    s.check("cube: General", classify(cube(3)).family == Family::General);

    bool inside = true;
    for (std::size_t n = 2; n <= 5; ++n)
        for (long k = 0; k + 2 <= static_cast<long>(n); ++k)
            inside = inside && is_subpolytope_of_doubled_simplex(truncated_doubled_simplex(n, k));
    s.check("(2D_n)_k lies in 2D_n", inside);
    s.check("3D_2 does not lie in 2D_2", !is_subpolytope_of_doubled_simplex(simplex(2, 3)));
    bool outside = true;
    for (long d = 3; d <= 6; ++d)
        outside = outside && !is_subpolytope_of_doubled_simplex(simplex(1, d));
    s.check("dD_1 (d >= 3) is General", outside);
}

void secant_examples(Suite& s)
{
    s.expect("veronese degree n=2", veronese_secant_degree(2), 3);
    s.expect("veronese degree n=3", veronese_secant_degree(3), 10);
    s.expect("(2D_3)_1 degree", truncated_secant_degree(3, 1), 1);
    bool fills = true;
    for (std::size_t n = 2; n <= 8; ++n)
        fills = fills && product_secant_degree(1, n) == 1;
    s.check("D_1 x D_{n-1} degree 1", fills);
    s.expect("scroll rhs n=3 d=3", scroll_secant_rhs(3, 3), 0);

    s.expect("3D_2: double point degree", surface_secant_degree(simplex(2, 3)), 15);
    s.expect("hexagon: double point degree", surface_secant_degree(hexagon()), 3);
    s.expect("cube: double point degree", threefold_secant_degree(cube(3)), 1);
    s.expect_throw<HypothesisError>("2D_3: threefold formula rejected", [] { threefold_secant_degree(simplex(3, 2)); });

    auto hex = analyze(hexagon());
    s.check("analyze hexagon: General", hex.family.family == Family::General);
    s.expect("analyze hexagon: dim_sec", hex.dim_sec, 5u);
    s.expect("analyze hexagon: deg_sec", hex.deg_sec, 3);
    s.check("analyze hexagon: unique secant line", hex.secant_lines == SecantLines::Unique);

    auto v = analyze(simplex(2, 2));
    s.expect("analyze 2D_2: dim_sec", v.dim_sec, 4u);
    s.expect("analyze 2D_2: deg_sec", v.deg_sec, 3);
    s.check("analyze 2D_2: infinitely many secant lines", v.secant_lines == SecantLines::Infinite);

    auto d2 = analyze(simplex(2));
    s.expect("analyze D_2: dim_sec", d2.dim_sec, 2u);
    s.expect("analyze D_2: deg_sec", d2.deg_sec, 1);

    auto c = analyze(cube(3));
    s.expect("analyze cube: dim_sec", c.dim_sec, 7u);
    s.expect("analyze cube: r", c.r, 7u);
    s.expect("analyze cube: deg_sec", c.deg_sec, 1);
    s.expect("analyze cube: rhs", c.rhs, 2);

    auto a = analyze_points(without(simplex(2, 3), make_vec({1, 1})));
    s.check("3D_2 minus (1,1): hypothesis holds", a.hypothesis_ok);
    s.check("3D_2 minus (1,1): dim_sec 5", a.dim_sec && *a.dim_sec == 5);
    s.check("3D_2 minus (1,1): divides 15", a.deg_divides && *a.deg_divides == 15);

    auto h = analyze_points(hexagon_points());
    s.check("hexagon outer points: dim_sec 5 = s", h.dim_sec && *h.dim_sec == 5 && h.s == 5);
    s.check("hexagon outer points: deg_sec 1", h.deg_sec && *h.deg_sec == 1);
    s.check("hexagon outer points: divides 3", h.deg_divides && *h.deg_divides == 3);

    auto hj = to_json(analyze(hexagon()));
    s.check("analyze hexagon JSON: deg_sec 3", hj["deg_sec"] == 3);
    auto sj = to_json(analyze_points(hexagon_points()));
    s.check("subset hexagon outer JSON", sj["dim_sec"] == 5 && sj["constraint"] == "divides 3" && sj["deg_sec"] == 1);
}

}  // namespace

std::vector<SelfTestResult> run_selftest()
{
    Suite s;
    s.guard("polytope examples", [&] { polytope_examples(s); });
    s.guard("chow examples", [&] { chow_examples(s); });
    s.guard("classification examples", [&] { classify_examples(s); });
    s.guard("secant examples", [&] { secant_examples(s); });
    return s.take();
}

}  // namespace toricsec
