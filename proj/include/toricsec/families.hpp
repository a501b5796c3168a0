// Named polytopes and point configurations: dilated simplices, truncated
// doubled simplices, products of dilated simplices, Cayley polytopes of
// rational normal scrolls, the hexagon and cubes.

#ifndef TORICSEC_FAMILIES_HPP
#define TORICSEC_FAMILIES_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "toricsec/polytope.hpp"

namespace toricsec {

/// r * Delta_n
LatticePolytope simplex(std::size_t n, long dilation = 1);

/// Hull of the lattice points of 2*Delta_n off the face conv(2e_1..2e_{k+1}),
/// i.e. 2*Delta_n cut by x_1 + ... + x_{k+1} <= 1. k = -1 gives 2*Delta_n and
/// k = n-1 gives Delta_n.
LatticePolytope truncated_doubled_simplex(std::size_t n, long k);

/// d_1 Delta_{n_1} x ... x d_k Delta_{n_k}
LatticePolytope product_of_simplices(std::span<const long> dilations, std::span<const std::size_t> dims);

/// A_{d_1..d_n} = union of {v_i + a e_n : 0 <= a <= d_i} with v_i = e_i (i < n), v_n = 0.
PointConfiguration scroll_configuration(std::span<const long> d);
LatticePolytope scroll_polytope(std::span<const long> d);

/// The six points (0,0),(1,0),(0,1),(2,1),(1,2),(2,2).
PointConfiguration hexagon_points();
LatticePolytope hexagon();

/// The unit cube Delta_1^n.
LatticePolytope cube(std::size_t n);

/// Textual family description, e.g. "truncated:n=4;k=1", "scroll:d=1,2,2",
/// "product:n=1,2;d=1,1", "simplex:n=3;r=2", "cube:n=3", "hexagon",
/// "hexagon-outer", "scroll-points:d=1,3".
struct FamilySpec
{
    std::string family;
    std::map<std::string, std::vector<long>> params;
};

FamilySpec parse_family_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);

using CatalogObject = std::variant<LatticePolytope, PointConfiguration>;

/// Throws std::invalid_argument on unknown families or parameters out of range.
CatalogObject make_family(const FamilySpec& spec);

}  // namespace toricsec

#endif
