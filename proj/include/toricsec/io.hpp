// JSON input and output. Keys come out sorted, integers beyond 2^53 are
// written as decimal strings, and input parsing is strict.

#ifndef TORICSEC_IO_HPP
#define TORICSEC_IO_HPP

#include <map>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "toricsec/chow.hpp"
#include "toricsec/classify.hpp"
#include "toricsec/families.hpp"
#include "toricsec/polytope.hpp"
#include "toricsec/secant.hpp"

namespace toricsec {

using Json = nlohmann::json;

inline constexpr int schema_version = 1;

Json integer_json(const Integer& x);
/// Integers as above; proper fractions as "p/q".
Json rational_json(const Rational& x);
Json vector_json(const IntVec& v);
Json point_list_json(std::span<const IntVec> points);

/// Reads an integer coordinate: a JSON integer or a decimal string.
/// Throws InputError otherwise.
Integer integer_from_json(const Json& j);

/// Coordinates in the ambient lattice of the input (undoing the chart of a
/// lower dimensional polytope).
IntVec ambient_point(const LatticePolytope& p, const IntVec& x);

/// {"schema": 1, "vertices": [...]}
Json polytope_json(const LatticePolytope& p);
/// {"schema": 1, "points": [...]}
Json points_json(const PointConfiguration& a);
Json catalog_json(const CatalogObject& obj);

Json lattice_points_json(const LatticePolytope& p);
Json to_json(const PolytopeStats& s);
Json to_json(const FamilyLabel& label);
Json to_json(const CrossCheck& check);
Json to_json(const SecantReport& report);
Json to_json(const SubsetReport& report);

/// c1^n, rhs, the Todd and Riemann-Roch counts, Euler number and the named
/// intersection numbers; with monomials, every nonzero degree-n monomial too.
Json chow_json(const LatticePolytope& p, bool monomials = false);

/// Strict parse of a polytope or points document. Throws InputError.
CatalogObject parse_input(const std::string& text);
/// A file path, or failing that a family spec such as "truncated:n=4;k=1".
CatalogObject read_input(const std::string& path_or_spec);

/// Pretty printed with a trailing newline.
std::string dump(const Json& j);
/// Aligned "key  value" lines; nested keys joined with '.'.
std::string render_table(const Json& j);

}  // namespace toricsec

#endif
