#include "toricsec/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "toricsec/errors.hpp"

namespace toricsec {

namespace {

void sort_unique(std::vector<IntVec>& pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

std::size_t affine_rank(const std::vector<IntVec>& pts)
{
    if (pts.size() <= 1)
        return 0;
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.push_back(pts[i] - pts[0]);
    return rank(IntMat::from_rows(diffs, pts[0].size()));
}

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

PointConfiguration::PointConfiguration(std::vector<IntVec> points) : points_(std::move(points))
{
    if (points_.empty())
        throw InputError("empty point set");
    const std::size_t n = points_.front().size();
    for (const auto& p : points_)
        if (p.size() != n)
            throw InputError("points of unequal length");
    sort_unique(points_);
}

bool PointConfiguration::contains(const IntVec& p) const
{
    return std::binary_search(points_.begin(), points_.end(), p);
}

LatticePolytope LatticePolytope::from_vertices(std::span<const IntVec> input)
{
    if (input.empty())
        throw InputError("empty point set");
    std::vector<IntVec> pts(input.begin(), input.end());
    const std::size_t ambient = pts.front().size();
    for (const auto& p : pts)
        if (p.size() != ambient)
            throw InputError("points of unequal length");
    sort_unique(pts);

    LatticePolytope poly;
    AffineLatticeChart chart(pts);
    if (!chart.is_full()) {
        for (auto& p : pts)
            p = chart.to_local(p);
        sort_unique(pts);
        poly.embedding_ = chart;
    }
    poly.dim_ = chart.dim();

    if (poly.dim_ == 0) {
        poly.vertices_ = pts;
        poly.faces_.push_back(Face{{0}, 0});
        return poly;
    }

    poly.facets_ = hull_facets(pts);

    for (const auto& p : pts) {
        std::vector<IntVec> tight;
        for (const auto& f : poly.facets_)
            if (f.slack(p) == 0)
                tight.push_back(f.normal);
        if (!tight.empty() && rank(IntMat::from_rows(tight, poly.dim_)) == poly.dim_)
            poly.vertices_.push_back(p);
    }

    // Face lattice: closure of facet vertex sets under intersection.
    std::set<std::vector<std::size_t>> sets;
    std::vector<std::vector<std::size_t>> frontier;
    for (const auto& f : poly.facets_) {
        std::vector<std::size_t> s;
        for (std::size_t v = 0; v < poly.vertices_.size(); ++v)
            if (f.slack(poly.vertices_[v]) == 0)
                s.push_back(v);
        if (sets.insert(s).second)
            frontier.push_back(s);
    }
    std::vector<std::vector<std::size_t>> facet_sets(sets.begin(), sets.end());
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> fresh;
        for (const auto& a : frontier)
            for (const auto& b : facet_sets) {
                std::vector<std::size_t> c;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
                if (!c.empty() && sets.insert(c).second)
                    fresh.push_back(std::move(c));
            }
        frontier = std::move(fresh);
    }
    std::vector<std::size_t> all(poly.vertices_.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    sets.insert(all);

    for (const auto& s : sets) {
        std::vector<IntVec> vs;
        for (std::size_t i : s)
            vs.push_back(poly.vertices_[i]);
        poly.faces_.push_back(Face{s, affine_rank(vs)});
    }
    std::sort(poly.faces_.begin(), poly.faces_.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertex_indices < b.vertex_indices;
    });
    return poly;
}

std::vector<Face> LatticePolytope::faces_of_dim(std::size_t k) const
{
    std::vector<Face> out;
    for (const auto& f : faces_)
        if (f.dim == k)
            out.push_back(f);
    return out;
}

std::vector<Face> LatticePolytope::edges_at(std::size_t vertex_index) const
{
    std::vector<Face> out;
    for (const auto& f : faces_)
        if (f.dim == 1 && std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(), vertex_index))
            out.push_back(f);
    return out;
}

std::optional<std::size_t> LatticePolytope::vertex_index(const IntVec& v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool LatticePolytope::contains(const IntVec& x) const
{
    if (x.size() != dim_)
        return false;
    if (dim_ == 0)
        return x == vertices_.front();
    return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.slack(x) >= 0; });
}

std::vector<IntVec> lattice_points(const LatticePolytope& p)
{
    const std::size_t n = p.dim();
    if (n == 0)
        return p.vertices();
    IntVec lo = p.vertices().front(), hi = lo;
    for (const auto& v : p.vertices())
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    std::vector<IntVec> out;
    IntVec x = lo;
    for (;;) {
        if (p.contains(x))
            out.push_back(x);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                ++x[i];
                break;
            }
            x[i] = lo[i];
            if (i == 0)
                return out;
        }
    }
}

Integer edge_length(const LatticePolytope& p, const Face& edge)
{
    if (edge.dim != 1 || edge.vertex_indices.size() != 2)
        throw std::invalid_argument("edge_length: face is not an edge");
    const auto& vs = p.vertices();
    return content(vs[edge.vertex_indices[1]] - vs[edge.vertex_indices[0]]);
}

IntVec edge_direction(const LatticePolytope& p, const Face& edge, std::size_t from_vertex)
{
    if (edge.dim != 1 || edge.vertex_indices.size() != 2)
        throw std::invalid_argument("edge_direction: face is not an edge");
    std::size_t a = edge.vertex_indices[0], b = edge.vertex_indices[1];
    if (from_vertex == b)
        std::swap(a, b);
    else if (from_vertex != a)
        throw std::invalid_argument("edge_direction: vertex not on edge");
    return primitive_vector(p.vertices()[b] - p.vertices()[a]);
}

namespace {

class Triangulator
{
public:
    explicit Triangulator(const LatticePolytope& p) : p_(p) {}

    const std::vector<std::vector<std::size_t>>& run(const Face& face)
    {
        auto it = memo_.find(face.vertex_indices);
        if (it != memo_.end())
            return it->second;
        std::vector<std::vector<std::size_t>> out;
        if (face.dim == 0) {
            out.push_back({face.vertex_indices.front()});
        } else {
            // vertices are stored sorted, so the smallest index is the lex-min vertex
            const std::size_t apex = face.vertex_indices.front();
            for (const auto& g : p_.faces()) {
                if (g.dim + 1 != face.dim || !is_subset(g.vertex_indices, face.vertex_indices))
                    continue;
                if (std::binary_search(g.vertex_indices.begin(), g.vertex_indices.end(), apex))
                    continue;
                for (const auto& s : run(g)) {
                    std::vector<std::size_t> simplex{apex};
                    simplex.insert(simplex.end(), s.begin(), s.end());
                    out.push_back(std::move(simplex));
                }
            }
        }
        return memo_.emplace(face.vertex_indices, std::move(out)).first->second;
    }

private:
    const LatticePolytope& p_;
    std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> memo_;
};

}  // namespace

std::vector<std::vector<std::size_t>> pulling_triangulation(const LatticePolytope& p, const Face& face)
{
    Triangulator t(p);
    return t.run(face);
}

Integer face_volume(const LatticePolytope& p, const Face& face)
{
    if (face.dim == 0)
        return 1;
    std::vector<IntVec> vs;
    for (std::size_t i : face.vertex_indices)
        vs.push_back(p.vertices()[i]);
    AffineLatticeChart chart(vs);
    Integer total = 0;
    for (const auto& simplex : pulling_triangulation(p, face)) {
        IntVec base = chart.to_local(p.vertices()[simplex[0]]);
        std::vector<IntVec> edges;
        for (std::size_t k = 1; k < simplex.size(); ++k)
            edges.push_back(chart.to_local(p.vertices()[simplex[k]]) - base);
        total += abs(determinant(IntMat::from_rows(edges, face.dim)));
    }
    return total;
}

Integer normalized_volume(const LatticePolytope& p)
{
    return face_volume(p, p.faces().back());
}

std::vector<IntVec> vertex_edge_directions(const LatticePolytope& p, const IntVec& vertex)
{
    auto vi = p.vertex_index(vertex);
    if (!vi)
        throw std::invalid_argument("not a vertex: " + to_string(vertex));
    std::vector<std::pair<Integer, IntVec>> dirs;
    for (const auto& e : p.edges_at(*vi))
        dirs.emplace_back(edge_length(p, e), edge_direction(p, e, *vi));
    std::sort(dirs.begin(), dirs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return std::lexicographical_compare(a.second.rbegin(), a.second.rend(), b.second.rbegin(), b.second.rend());
    });
    std::vector<IntVec> out;
    for (auto& d : dirs)
        out.push_back(std::move(d.second));
    return out;
}

SmoothnessCheck check_smooth(const LatticePolytope& p)
{
    const std::size_t n = p.dim();
    for (const auto& v : p.vertices()) {
        auto dirs = vertex_edge_directions(p, v);
        if (dirs.size() != n)
            return {false, v,
                    "vertex " + to_string(v) + " lies on " + std::to_string(dirs.size()) + " edges, expected " +
                        std::to_string(n)};
        if (!is_partial_lattice_basis(dirs, n))
            return {false, v, "edge directions at vertex " + to_string(v) + " are not a lattice basis"};
    }
    return {};
}

bool is_smooth(const LatticePolytope& p)
{
    return check_smooth(p).smooth;
}

void require_smooth(const LatticePolytope& p)
{
    auto c = check_smooth(p);
    if (!c)
        throw NotSmoothError("polytope is not smooth: " + c.reason, *c.failing_vertex);
}

LatticePolytope transform(const LatticePolytope& p, const AffineUnimodularMap& m)
{
    std::vector<IntVec> image;
    for (const auto& v : p.vertices())
        image.push_back(m.apply(v));
    return LatticePolytope::from_vertices(image);
}

StandardPosition standard_position(const LatticePolytope& p, const IntVec& vertex)
{
    const std::size_t n = p.dim();
    auto dirs = vertex_edge_directions(p, vertex);
    if (dirs.size() != n || !is_partial_lattice_basis(dirs, n))
        throw NotSmoothError("vertex " + to_string(vertex) + " is not smooth", vertex);
    IntMat linear = unimodular_inverse(IntMat::from_columns(dirs, n));
    IntVec shift = linear * vertex;
    AffineUnimodularMap m(linear, Integer(-1) * shift);
    return {transform(p, m), m};
}

std::vector<IntVec> vertex_neighbors(const LatticePolytope& p, const IntVec& vertex)
{
    std::vector<IntVec> out;
    for (const auto& d : vertex_edge_directions(p, vertex))
        out.push_back(vertex + d);
    return out;
}

Fan normal_fan(const LatticePolytope& p)
{
    Fan fan;
    fan.dim = p.dim();
    for (const auto& f : p.facets())
        fan.rays.push_back(f.normal);
    for (const auto& v : p.vertices()) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 0; i < p.facets().size(); ++i)
            if (p.facets()[i].slack(v) == 0)
                cone.push_back(i);
        fan.max_cones.push_back(std::move(cone));
    }
    return fan;
}

PolytopeStats stats(const LatticePolytope& p)
{
    PolytopeStats s;
    auto pts = lattice_points(p);
    s.lattice_points = pts.size();
    s.vertex_count = p.vertices().size();
    s.volume = normalized_volume(p);

    Integer boundary = 0;
    for (const auto& x : pts)
        if (std::any_of(p.facets().begin(), p.facets().end(), [&](const Facet& f) { return f.slack(x) == 0; }))
            ++boundary;
    s.boundary_points = boundary;
    s.interior_points = s.lattice_points - boundary;

    std::set<IntVec> on_edges;
    Integer perimeter = 0;
    for (const auto& e : p.edges()) {
        Integer len = edge_length(p, e);
        perimeter += len;
        const IntVec& a = p.vertices()[e.vertex_indices[0]];
        IntVec step = edge_direction(p, e, e.vertex_indices[0]);
        IntVec x = a;
        for (Integer j = 0; j <= len; ++j) {
            on_edges.insert(x);
            x = x + step;
        }
    }
    s.edge_points = on_edges.size();
    s.perimeter = perimeter;

    Integer area = 0;
    if (p.dim() > 0)
        for (const auto& f : p.faces_of_dim(p.dim() - 1))
            area += face_volume(p, f);
    s.surface_area = area;
    return s;
}

}  // namespace toricsec
