// Double description method on the homogenized cone {(b, a) : b + <a, p> >= 0}.
// Extreme rays of that cone are the facet inequalities of conv(points).

#include <algorithm>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "toricsec/polytope.hpp"

namespace toricsec {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray
{
    IntVec x;
    Bits zeros;  // processed constraints tight at this ray
};

IntVec homogenize(const IntVec& p)
{
    IntVec a;
    a.reserve(p.size() + 1);
    a.emplace_back(1);
    a.insert(a.end(), p.begin(), p.end());
    return a;
}

// Incremental row echelon form over Q used to pick independent rows.
class EchelonBuilder
{
public:
    explicit EchelonBuilder(std::size_t width) : width_(width) {}

    bool try_add(const IntVec& v)
    {
        std::vector<Rational> r(v.begin(), v.end());
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational c = r[pivots_[k]];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j < width_; ++j)
                r[j] -= c * rows_[k][j];
        }
        auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
        if (it == r.end())
            return false;
        std::size_t piv = static_cast<std::size_t>(it - r.begin());
        Rational lead = r[piv];
        for (auto& x : r)
            x /= lead;
        rows_.push_back(std::move(r));
        pivots_.push_back(piv);
        return true;
    }

    std::size_t size() const { return rows_.size(); }

private:
    std::size_t width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

// Columns of the inverse of a square rational-invertible integer matrix,
// each scaled to a primitive integer vector.
std::vector<IntVec> inverse_columns_primitive(const IntMat& b)
{
    const std::size_t n = b.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(b(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw std::logic_error("singular initial basis in hull computation");
        std::swap(a[p], a[c]);
        Rational lead = a[c][c];
        for (auto& x : a[c])
            x /= lead;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    std::vector<IntVec> cols(n, IntVec(n));
    for (std::size_t j = 0; j < n; ++j) {
        Integer l = 1;
        for (std::size_t i = 0; i < n; ++i)
            l = lcm(l, Integer(denominator(a[i][n + j])));
        for (std::size_t i = 0; i < n; ++i)
            cols[j][i] = numerator(a[i][n + j]) * (l / denominator(a[i][n + j]));
        cols[j] = primitive_vector(cols[j]);
    }
    return cols;
}

}  // namespace

std::vector<Facet> hull_facets(std::span<const IntVec> points)
{
    if (points.empty())
        throw std::invalid_argument("hull of an empty point set");
    const std::size_t d = points.front().size();
    const std::size_t width = d + 1;
    const std::size_t m = points.size();

    std::vector<IntVec> rows;
    rows.reserve(m);
    for (const auto& p : points)
        rows.push_back(homogenize(p));

    EchelonBuilder echelon(width);
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < m && basis.size() < width; ++i)
        if (echelon.try_add(rows[i]))
            basis.push_back(i);
    if (basis.size() < width)
        throw std::invalid_argument("point set is not full-dimensional");

    std::vector<IntVec> basis_rows;
    for (std::size_t i : basis)
        basis_rows.push_back(rows[i]);
    std::vector<IntVec> init = inverse_columns_primitive(IntMat::from_rows(basis_rows, width));

    std::vector<Ray> rays;
    for (std::size_t j = 0; j < width; ++j) {
        Ray r{init[j], Bits(m)};
        for (std::size_t i = 0; i < width; ++i)
            if (i != j)
                r.zeros.set(basis[i]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> in_basis(m, false);
    for (std::size_t i : basis)
        in_basis[i] = true;

    for (std::size_t i = 0; i < m; ++i) {
        if (in_basis[i])
            continue;
        std::vector<Integer> s(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            s[r] = dot(rows[i], rays[r].x);
            if (s[r] > 0)
                pos.push_back(r);
            else if (s[r] < 0)
                neg.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (s[r] == 0)
                    rays[r].zeros.set(i);
            continue;
        }
        std::vector<Ray> next;
        for (std::size_t p : pos)
            next.push_back(rays[p]);
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (s[r] == 0) {
                next.push_back(rays[r]);
                next.back().zeros.set(i);
            }
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                Bits common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 1 < width - 1)
                    continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
                    if (t != p && t != q && common.is_subset_of(rays[t].zeros))
                        adjacent = false;
                if (!adjacent)
                    continue;
                IntVec w = s[p] * rays[q].x - s[q] * rays[p].x;
                common.set(i);
                next.push_back(Ray{primitive_vector(w), std::move(common)});
            }
        rays = std::move(next);
    }

    std::vector<Facet> facets;
    facets.reserve(rays.size());
    for (const auto& r : rays) {
        IntVec normal(r.x.begin() + 1, r.x.end());
        Integer g = content(normal);
        if (g == 0 || r.x[0] % g != 0)
            throw std::logic_error("hull produced a non-lattice facet");
        facets.push_back(Facet{primitive_vector(normal), r.x[0] / g});
    }
    std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    });
    return facets;
}

}  // namespace toricsec
