#include "toricsec/secant.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "toricsec/chow.hpp"
#include "toricsec/errors.hpp"

namespace toricsec {

Integer veronese_secant_degree(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("veronese: need n >= 1");
    auto m = static_cast<long>(n);
    return binomial(2 * m - 1, m - 1);
}

Integer truncated_table_sum(std::size_t n, long k)
{
    const auto m = static_cast<long>(n);
    Integer sum = 0;
    for (long i = 1; i <= m - k; ++i)
        for (long j = i + 1; j <= m - k; ++j)
            sum += binomial(m, m - i) * binomial(m - 1, m - j) - binomial(m, m - j) * binomial(m - 1, m - i);
    return sum;
}

Integer truncated_secant_degree(std::size_t n, long k)
{
    if (k < 0 || k > static_cast<long>(n) - 2)
        throw std::invalid_argument("truncated: need 0 <= k <= n-2");
    if (k == static_cast<long>(n) - 2)
        return 1;
    return truncated_table_sum(n, k);
}

Integer product_secant_degree(std::size_t l, std::size_t n)
{
    if (l < 1 || l + 1 > n)
        throw std::invalid_argument("product: need 1 <= l <= n-1");
    const auto a = static_cast<long>(l);
    Rational prod = 1;
    for (long i = 0; i + a + 2 <= static_cast<long>(n); ++i)
        prod *= Rational(binomial(a + 1 + i, 2)) / Rational(binomial(2 + i, 2));
    if (denominator(prod) != 1)
        throw ConsistencyError("product degree is not an integer");
    return numerator(prod);
}

Integer scroll_secant_rhs(std::size_t n, long d)
{
    const auto m = static_cast<long>(n);
    if (n == 0 || d < m)
        throw std::invalid_argument("scroll: need n >= 1 and d >= n");
    Integer dd = d;
    return dd * dd - (2 * m + 1) * dd + m * (m + 1);
}

Integer surface_double_point(const PolytopeStats& s)
{
    return s.volume * s.volume - 10 * s.volume + 5 * s.boundary_points + 2 * s.vertex_count - 12;
}

Integer threefold_double_point(const PolytopeStats& s, const Integer& c1cubed)
{
    return s.volume * s.volume - 21 * s.volume + c1cubed + 8 * s.vertex_count + 14 * s.edge_points -
           84 * s.interior_points - 132;
}

namespace {

Integer half(const Integer& v, const char* what)
{
    if (v % 2 != 0)
        throw ConsistencyError(std::string(what) + " is odd");
    return v / 2;
}

void require_full_secant(const LatticePolytope& p, std::size_t n, const char* message)
{
    if (p.dim() != n)
        throw HypothesisError(message);
    if (classify(p).family != Family::General || lattice_points(p).size() < 2 * n + 2)
        throw HypothesisError(message);
}

Integer c1_cubed(const LatticePolytope& p)
{
    auto x = toric_variety(p);
    Rational v = x.ring.integrate(x.ring.power(x.ring.chern_class(1), 3));
    return numerator(v);
}

Integer multinomial(const std::vector<long>& parts)
{
    Integer r = 1;
    long total = 0;
    for (long p : parts) {
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

}  // namespace

Integer surface_secant_degree(const LatticePolytope& p)
{
    require_full_secant(p, 2, "formula requires dim Sec = 5");
    return half(surface_double_point(stats(p)), "surface double point value");
}

Integer threefold_secant_degree(const LatticePolytope& p)
{
    require_full_secant(p, 3, "formula requires dim Sec = 7");
    return half(threefold_double_point(stats(p), c1_cubed(p)), "threefold double point value");
}

Integer segre_veronese_secant_degree(std::span<const long> d, std::span<const std::size_t> n)
{
    if (d.size() != n.size() || d.empty())
        throw std::invalid_argument("segre-veronese: need matching nonempty lists");
    long dsum = 0;
    long total = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 1 || n[i] < 1)
            throw std::invalid_argument("segre-veronese: need d_i >= 1 and n_i >= 1");
        dsum += d[i];
        total += static_cast<long>(n[i]);
    }
    if (dsum < 3)
        throw HypothesisError("segre-veronese formula requires sum of d_i >= 3");

    const std::size_t k = d.size();
    std::vector<long> ns(n.begin(), n.end());
    Integer deg = multinomial(ns);
    for (std::size_t i = 0; i < k; ++i)
        deg *= pow(Integer(d[i]), static_cast<unsigned>(n[i]));

    // inner[m] = sum over j with |j| = m of (n - j)! prod binom(n_i + j_i, j_i) d_i^(n_i - j_i)
    std::vector<Integer> inner(static_cast<std::size_t>(total) + 1);
    std::vector<long> j(k, 0);
    for (;;) {
        std::vector<long> rest(k);
        Integer term = 1;
        long m = 0;
        for (std::size_t i = 0; i < k; ++i) {
            rest[i] = ns[i] - j[i];
            m += j[i];
            term *= binomial(ns[i] + j[i], j[i]) * pow(Integer(d[i]), static_cast<unsigned>(rest[i]));
        }
        inner[static_cast<std::size_t>(m)] += multinomial(rest) * term;
        std::size_t i = 0;
        while (i < k && j[i] == ns[i])
            j[i++] = 0;
        if (i == k)
            break;
        ++j[i];
    }

    Integer sum = 0;
    for (long l = 0; l <= total; ++l) {
        Integer t = binomial(2 * total + 1, l) * inner[static_cast<std::size_t>(total - l)];
        sum += ((total - l) % 2 == 0) ? t : Integer(-t);
    }
    return half(deg * deg - sum, "segre-veronese double point value");
}

std::string to_string(SecantLines s)
{
    return s == SecantLines::Unique ? "unique" : "infinite";
}

bool SecantReport::consistent() const
{
    return std::all_of(cross_checks.begin(), cross_checks.end(),
                       [](const CrossCheck& c) { return c.passed || c.informational; });
}

bool SubsetReport::consistent() const
{
    return std::all_of(cross_checks.begin(), cross_checks.end(),
                       [](const CrossCheck& c) { return c.passed || c.informational; });
}

bool is_exceptional(const FamilyLabel& label)
{
    const auto n = static_cast<long>(label.n);
    switch (label.family) {
    case Family::DoubledSimplex:
        return n >= 2;
    case Family::TruncatedDoubledSimplex:
        return label.k <= n - 3;
    case Family::ProductOfSimplices:
        return label.l >= 2 && static_cast<long>(label.l) <= n - 2;
    default:
        return false;
    }
}

SecantReport analyze(const LatticePolytope& p, const AnalyzeOptions& options)
{
    SecantReport rep;
    rep.family = classify(p, ClassifyOptions{options.debug_all_vertices});
    const std::size_t n = p.dim();
    const auto pts = lattice_points(p);
    rep.n = n;
    rep.r = pts.size() - 1;

    auto x = toric_variety(p);
    rep.rhs = secant_rhs(x);
    rep.degree = degree_of_embedding(x);

    const auto& f = rep.family;
    switch (f.family) {
    case Family::Simplex:
        rep.dim_sec = n;
        rep.deg_sec = 1;
        break;
    case Family::DoubledSimplex:
        rep.dim_sec = 2 * n;
        rep.deg_sec = veronese_secant_degree(n);
        break;
    case Family::TruncatedDoubledSimplex:
        rep.dim_sec = 2 * n;
        rep.deg_sec = truncated_secant_degree(n, f.k);
        break;
    case Family::ProductOfSimplices:
        rep.dim_sec = 2 * n - 1;
        rep.deg_sec = product_secant_degree(f.l, n);
        break;
    case Family::General:
        rep.dim_sec = 2 * n + 1;
        rep.deg_sec = rep.rhs / 2;
        rep.deg_phi = 2;
        rep.secant_lines = SecantLines::Unique;
        break;
    }
    if (rep.dim_sec >= rep.r) {
        rep.dim_sec = rep.r;
        rep.deg_sec = 1;
    }
    rep.expected_dim = std::min(rep.r, 2 * n + 1);
    rep.has_expected_dim = rep.dim_sec == rep.expected_dim;

    auto check = [&](std::string name, bool passed, std::vector<std::pair<std::string, Integer>> values,
                     bool informational = false) {
        rep.cross_checks.push_back({std::move(name), passed, std::move(values), informational});
    };

    Integer volume = normalized_volume(p);
    check("degree_equals_volume", rep.degree == volume, {{"H^n", rep.degree}, {"volume", volume}});
    Integer rr = riemann_roch_count(x);
    Integer count = static_cast<long>(pts.size());
    check("riemann_roch_equals_lattice_points", rr == count, {{"riemann_roch", rr}, {"lattice_points", count}});
    Integer euler = numerator(x.ring.integrate(x.ring.chern_class(static_cast<unsigned>(n))));
    Integer vertices = static_cast<long>(p.vertices().size());
    check("top_chern_equals_vertices", euler == vertices, {{"c_n", euler}, {"vertices", vertices}});

    bool general = f.family == Family::General;
    check("rhs_matches_family", general ? (rep.rhs > 0 && rep.rhs % 2 == 0) : rep.rhs == 0, {{"rhs", rep.rhs}});
    if (general && rep.dim_sec == rep.r)
        check("fills_ambient_rhs", rep.rhs == 2, {{"rhs", rep.rhs}, {"r", Integer(static_cast<long>(rep.r))}});

    auto s = stats(p);
    if (n == 2) {
        Integer closed = surface_double_point(s);
        check("surface_formula", closed == rep.rhs, {{"closed_form", closed}, {"rhs", rep.rhs}});
    }
    if (n == 3) {
        Integer c1c = numerator(x.ring.integrate(x.ring.power(x.ring.chern_class(1), 3)));
        Integer closed = threefold_double_point(s, c1c);
        check("threefold_formula", closed == rep.rhs, {{"closed_form", closed}, {"rhs", rep.rhs}, {"c1^3", c1c}});
    }
    check("expected_dimension_exceptions", rep.has_expected_dim == !is_exceptional(f),
          {{"dim_sec", Integer(static_cast<long>(rep.dim_sec))},
           {"expected_dim", Integer(static_cast<long>(rep.expected_dim))}});

    if (f.witness) {
        std::vector<IntVec> mapped;
        for (const auto& q : pts)
            mapped.push_back(f.witness->apply(q));
        std::sort(mapped.begin(), mapped.end());
        check("witness_maps_onto_model", mapped == lattice_points(canonical_model(f)), {});
    }
    if (f.family == Family::TruncatedDoubledSimplex && f.k == static_cast<long>(n) - 2) {
        Integer table = truncated_table_sum(n, f.k);
        check("truncated_table_sum", table == rep.deg_sec, {{"table_sum", table}, {"deg_sec", rep.deg_sec}}, true);
    }
    return rep;
}

SubsetReport analyze_points(const PointConfiguration& a, const AnalyzeOptions& options)
{
    auto p = LatticePolytope::from_points(a);
    require_smooth(p);

    std::vector<IntVec> local;
    for (const auto& q : a.points())
        local.push_back(p.embedding() ? p.embedding()->to_local(q) : q);
    std::sort(local.begin(), local.end());

    SubsetReport rep;
    rep.n = p.dim();
    rep.s = a.size() - 1;
    std::set<IntVec> missing;
    for (const auto& v : p.vertices()) {
        if (!std::binary_search(local.begin(), local.end(), v))
            missing.insert(v);
        for (const auto& w : vertex_neighbors(p, v))
            if (!std::binary_search(local.begin(), local.end(), w))
                missing.insert(w);
    }
    for (const auto& m : missing)
        rep.missing.push_back(p.embedding() ? p.embedding()->to_ambient(m) : m);
    rep.hypothesis_ok = missing.empty();
    if (!rep.hypothesis_ok)
        return rep;

    auto full = analyze(p, options);
    const std::size_t n = rep.n;
    rep.dim_sec = std::min(full.dim_sec, rep.s);
    rep.deg_divides = full.deg_sec;
    if (*rep.dim_sec == rep.s)
        rep.deg_sec = 1;
    rep.exceptional = local == lattice_points(p) && is_exceptional(full.family);
    rep.expected_dim_ok = *rep.dim_sec == std::min(rep.s, 2 * n + 1);
    rep.cross_checks.push_back({"dimension_within_ambient",
                                full.dim_sec <= rep.s,
                                {{"dim_sec_P", Integer(static_cast<long>(full.dim_sec))},
                                 {"s", Integer(static_cast<long>(rep.s))}},
                                false});
    rep.cross_checks.push_back({"expected_dimension_exceptions", rep.expected_dim_ok == !rep.exceptional, {}, false});
    rep.polytope = std::move(full);
    return rep;
}

}  // namespace toricsec
