// Recognition of the smooth subpolytopes of 2*Delta_n up to AGL_n(Z):
// Delta_n, 2*Delta_n, the truncations (2*Delta_n)_k and Delta_l x Delta_{n-l}.

#ifndef TORICSEC_CLASSIFY_HPP
#define TORICSEC_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "toricsec/polytope.hpp"

namespace toricsec {

enum class Family
{
    Simplex,
    DoubledSimplex,
    TruncatedDoubledSimplex,
    ProductOfSimplices,
    General,
};

struct FamilyLabel
{
    Family family = Family::General;
    std::size_t n = 0;
    long k = 0;         // truncated only, 0 <= k <= n-2
    std::size_t l = 0;  // product only, 1 <= l <= n-l
    /// Sends P onto the canonical model. Absent for General.
    std::optional<AffineUnimodularMap> witness;

    /// Label equality without the witness.
    bool same_family(const FamilyLabel& o) const { return family == o.family && n == o.n && k == o.k && l == o.l; }
};

std::string family_name(Family f);
/// e.g. "truncated(n=4,k=1)", "product(1,2)", "general(n=2)"
std::string to_string(const FamilyLabel& label);

/// The polytope in canonical coordinates; throws for General.
LatticePolytope canonical_model(const FamilyLabel& label);

struct Length2Vertex
{
    IntVec vertex;
    std::size_t count = 0;
};

/// Vertex with the most incident edges of length 2, lexicographically first on ties.
Length2Vertex max_length2_vertex(const LatticePolytope& p);

struct ClassifyOptions
{
    /// Repeat the containment test at every vertex and require agreement
    /// with the distinguished one.
    bool debug_all_vertices = false;
};

/// Throws NotSmoothError for non-smooth input and ConsistencyError
/// ("classification exhausted") if Q fits in 2*Delta_n but matches no model.
FamilyLabel classify(const LatticePolytope& p, const ClassifyOptions& options = {});

bool is_subpolytope_of_doubled_simplex(const LatticePolytope& p);

}  // namespace toricsec

#endif
