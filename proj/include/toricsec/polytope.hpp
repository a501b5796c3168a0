// Lattice polytopes: exact hull, face lattice, lattice points, volumes,
// smoothness, standard position and the inner normal fan.

#ifndef TORICSEC_POLYTOPE_HPP
#define TORICSEC_POLYTOPE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricsec/fan.hpp"
#include "toricsec/zlinalg.hpp"

namespace toricsec {

/// Inequality <normal, x> >= -offset, normal primitive and inner-pointing.
struct Facet
{
    IntVec normal;
    Integer offset;

    Integer slack(const IntVec& x) const { return dot(normal, x) + offset; }
    friend bool operator==(const Facet&, const Facet&) = default;
};

struct Face
{
    std::vector<std::size_t> vertex_indices;  // sorted
    std::size_t dim = 0;

    friend bool operator==(const Face&, const Face&) = default;
};

/// A finite set of lattice points, deduplicated and sorted.
class PointConfiguration
{
public:
    explicit PointConfiguration(std::vector<IntVec> points);

    const std::vector<IntVec>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::size_t ambient_dim() const { return points_.front().size(); }
    bool contains(const IntVec& p) const;

private:
    std::vector<IntVec> points_;
};

class LatticePolytope
{
public:
    /// Exact convex hull. Non-extreme points are dropped. A hull that is not
    /// full-dimensional is re-expressed in coordinates of the lattice
    /// aff(P) ∩ Z^n; embedding() maps those coordinates back.
    static LatticePolytope from_vertices(std::span<const IntVec> points);
    static LatticePolytope from_points(const PointConfiguration& pc) { return from_vertices(pc.points()); }

    std::size_t dim() const { return dim_; }
    const std::vector<IntVec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    /// All nonempty faces, P itself included, sorted by (dim, vertex set).
    const std::vector<Face>& faces() const { return faces_; }
    std::vector<Face> faces_of_dim(std::size_t k) const;
    std::vector<Face> edges() const { return faces_of_dim(1); }
    /// Edges through the vertex with the given index.
    std::vector<Face> edges_at(std::size_t vertex_index) const;

    std::optional<std::size_t> vertex_index(const IntVec& v) const;
    bool contains(const IntVec& x) const;

    /// Set when the input was lower-dimensional in its ambient space.
    const std::optional<AffineLatticeChart>& embedding() const { return embedding_; }

private:
    LatticePolytope() = default;

    std::size_t dim_ = 0;
    std::vector<IntVec> vertices_;
    std::vector<Facet> facets_;
    std::vector<Face> faces_;
    std::optional<AffineLatticeChart> embedding_;
};

/// Facet inequalities of the hull of a full-dimensional point set, by the
/// double description method with exact integers.
std::vector<Facet> hull_facets(std::span<const IntVec> points);

/// Lattice points sorted lexicographically (bounding-box scan).
std::vector<IntVec> lattice_points(const LatticePolytope& p);

/// Lattice length of an edge: number of lattice points on it minus one.
Integer edge_length(const LatticePolytope& p, const Face& edge);
IntVec edge_direction(const LatticePolytope& p, const Face& edge, std::size_t from_vertex);

/// Pulling triangulation of a face from its lexicographically smallest vertex,
/// recursively over its facets. Each simplex is a list of vertex indices.
std::vector<std::vector<std::size_t>> pulling_triangulation(const LatticePolytope& p, const Face& face);

/// Normalized volume of a face, measured in the lattice of its affine span
/// (a vertex has volume 1).
Integer face_volume(const LatticePolytope& p, const Face& face);

/// dim! times Euclidean volume; the unit simplex has volume 1.
Integer normalized_volume(const LatticePolytope& p);

struct SmoothnessCheck
{
    bool smooth = true;
    std::optional<IntVec> failing_vertex;
    std::string reason;

    explicit operator bool() const { return smooth; }
};

/// Delzant test: every vertex lies on exactly dim edges whose primitive
/// directions form a lattice basis.
SmoothnessCheck check_smooth(const LatticePolytope& p);
bool is_smooth(const LatticePolytope& p);
/// Throws NotSmoothError naming the failing vertex.
void require_smooth(const LatticePolytope& p);

/// Primitive edge directions at a vertex ordered by edge length, then
/// colexicographically (so e_1, ..., e_n come out in that order).
std::vector<IntVec> vertex_edge_directions(const LatticePolytope& p, const IntVec& vertex);

struct StandardPosition
{
    LatticePolytope polytope;
    AffineUnimodularMap map;
};

/// Moves a smooth vertex to the origin with its edge directions onto
/// e_1..e_n (shorter edges first).
StandardPosition standard_position(const LatticePolytope& p, const IntVec& vertex);

/// vertex + primitive edge direction, for each edge at the vertex.
std::vector<IntVec> vertex_neighbors(const LatticePolytope& p, const IntVec& vertex);

/// Inner normal fan: rays are facet normals (in facet order), one maximal
/// cone per vertex (in vertex order).
Fan normal_fan(const LatticePolytope& p);

/// Image of the polytope under an affine unimodular map.
LatticePolytope transform(const LatticePolytope& p, const AffineUnimodularMap& m);

struct PolytopeStats
{
    Integer volume;            // d
    Integer boundary_points;   // B
    Integer vertex_count;      // V
    Integer edge_points;       // E, vertices included
    Integer interior_points;   // I
    Integer perimeter;         // sum of edge lengths
    Integer surface_area;      // sum of normalized facet volumes
    Integer lattice_points;    // total count
};

PolytopeStats stats(const LatticePolytope& p);

}  // namespace toricsec

#endif
