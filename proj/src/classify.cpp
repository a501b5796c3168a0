#include "toricsec/classify.hpp"

#include <algorithm>
#include <numeric>

#include "toricsec/errors.hpp"
#include "toricsec/families.hpp"

namespace toricsec {

std::string family_name(Family f)
{
    switch (f) {
    case Family::Simplex:
        return "simplex";
    case Family::DoubledSimplex:
        return "doubled";
    case Family::TruncatedDoubledSimplex:
        return "truncated";
    case Family::ProductOfSimplices:
        return "product";
    case Family::General:
        return "general";
    }
    return "general";
}

std::string to_string(const FamilyLabel& label)
{
    std::string s = family_name(label.family) + "(n=" + std::to_string(label.n);
    if (label.family == Family::TruncatedDoubledSimplex)
        s += ",k=" + std::to_string(label.k);
    if (label.family == Family::ProductOfSimplices)
        s += ",l=" + std::to_string(label.l);
    return s + ")";
}

LatticePolytope canonical_model(const FamilyLabel& label)
{
    switch (label.family) {
    case Family::Simplex:
        return simplex(label.n);
    case Family::DoubledSimplex:
        return simplex(label.n, 2);
    case Family::TruncatedDoubledSimplex:
        return truncated_doubled_simplex(label.n, label.k);
    case Family::ProductOfSimplices: {
        std::vector<long> d{1, 1};
        std::vector<std::size_t> dims{label.l, label.n - label.l};
        return product_of_simplices(d, dims);
    }
    case Family::General:
        break;
    }
    throw std::invalid_argument("the general family has no canonical model");
}

namespace {

std::size_t length2_count(const LatticePolytope& p, std::size_t vi)
{
    std::size_t c = 0;
    for (const auto& e : p.edges_at(vi))
        if (edge_length(p, e) == 2)
            ++c;
    return c;
}

bool inside_doubled_simplex(const LatticePolytope& q)
{
    for (const auto& v : q.vertices()) {
        Integer s = 0;
        for (const auto& x : v) {
            if (x < 0)
                return false;
            s += x;
        }
        if (s > 2)
            return false;
    }
    return true;
}

std::vector<IntVec> image_of(const std::vector<IntVec>& pts, const AffineUnimodularMap& m)
{
    std::vector<IntVec> out;
    out.reserve(pts.size());
    for (const auto& x : pts)
        out.push_back(m.apply(x));
    std::sort(out.begin(), out.end());
    return out;
}

// perm[i] = position of axes[i] after renumbering, axes listed block by block
std::vector<std::size_t> renumbering(const std::vector<std::size_t>& order)
{
    std::vector<std::size_t> perm(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        perm[order[pos]] = pos;
    return perm;
}

// Blocks of the coordinates at the origin of a polytope in standard
// position: i and j share a block iff e_i + e_j is not a lattice point.
std::vector<std::vector<std::size_t>> product_blocks(std::size_t n, const std::vector<IntVec>& pts)
{
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            IntVec x(n);
            x[i] = 1;
            x[j] = 1;
            if (!std::binary_search(pts.begin(), pts.end(), x))
                parent[find(j)] = find(i);
        }
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return blocks;
}

}  // namespace

Length2Vertex max_length2_vertex(const LatticePolytope& p)
{
    Length2Vertex best{p.vertices().front(), length2_count(p, 0)};
    for (std::size_t i = 1; i < p.vertices().size(); ++i) {
        std::size_t c = length2_count(p, i);
        if (c > best.count)
            best = {p.vertices()[i], c};
    }
    return best;
}

FamilyLabel classify(const LatticePolytope& p, const ClassifyOptions& options)
{
    require_smooth(p);
    const std::size_t n = p.dim();
    const auto best = max_length2_vertex(p);
    const auto sp = standard_position(p, best.vertex);
    const bool fits = inside_doubled_simplex(sp.polytope);

    if (options.debug_all_vertices) {
        for (std::size_t i = 0; i < p.vertices().size(); ++i) {
            const auto& v = p.vertices()[i];
            bool f = inside_doubled_simplex(standard_position(p, v).polytope);
            if (f && !fits)
                throw ConsistencyError("vertex " + to_string(v) + " places P inside 2*Delta_n but the vertex " +
                                       to_string(best.vertex) + " with most length-2 edges does not");
            if (length2_count(p, i) == best.count && f != fits)
                throw ConsistencyError("vertices " + to_string(v) + " and " + to_string(best.vertex) +
                                       " with the same number of length-2 edges disagree on containment");
        }
    }

    FamilyLabel general;
    general.n = n;
    if (!fits)
        return general;

    const LatticePolytope& q = sp.polytope;
    const auto pts = lattice_points(q);
    const auto origin = q.vertex_index(IntVec(n));
    if (!origin)
        throw ConsistencyError("standard position did not place a vertex at the origin");

    std::vector<std::size_t> short_axes, long_axes;
    for (const auto& e : q.edges_at(*origin)) {
        IntVec d = edge_direction(q, e, *origin);
        auto axis = static_cast<std::size_t>(std::find(d.begin(), d.end(), Integer(1)) - d.begin());
        (edge_length(q, e) == 1 ? short_axes : long_axes).push_back(axis);
    }
    std::sort(short_axes.begin(), short_axes.end());
    std::sort(long_axes.begin(), long_axes.end());

    std::vector<FamilyLabel> matches;
    auto try_model = [&](FamilyLabel label, const std::vector<std::size_t>& order) {
        auto perm = renumbering(order);
        auto m = AffineUnimodularMap::permutation(perm);
        if (image_of(pts, m) == lattice_points(canonical_model(label))) {
            label.witness = m.compose(sp.map);
            matches.push_back(std::move(label));
        }
    };

    std::vector<std::size_t> axes = short_axes;
    axes.insert(axes.end(), long_axes.begin(), long_axes.end());
    if (long_axes.empty()) {
        FamilyLabel s;
        s.family = Family::Simplex;
        s.n = n;
        try_model(s, axes);
        auto blocks = product_blocks(n, pts);
        if (blocks.size() == 2) {
            if (blocks[1].size() < blocks[0].size())
                std::swap(blocks[0], blocks[1]);
            FamilyLabel prod;
            prod.family = Family::ProductOfSimplices;
            prod.n = n;
            prod.l = blocks[0].size();
            std::vector<std::size_t> order = blocks[0];
            order.insert(order.end(), blocks[1].begin(), blocks[1].end());
            try_model(prod, order);
        }
    } else if (short_axes.empty()) {
        FamilyLabel d;
        d.family = Family::DoubledSimplex;
        d.n = n;
        try_model(d, axes);
    } else {
        FamilyLabel t;
        t.family = Family::TruncatedDoubledSimplex;
        t.n = n;
        t.k = static_cast<long>(short_axes.size()) - 1;
        try_model(t, axes);
    }

    if (matches.size() != 1)
        throw ConsistencyError("classification exhausted: polytope fits in 2*Delta_n but matched " +
                               std::to_string(matches.size()) + " canonical models");
    return matches.front();
}

bool is_subpolytope_of_doubled_simplex(const LatticePolytope& p)
{
    return classify(p).family != Family::General;
}

}  // namespace toricsec
