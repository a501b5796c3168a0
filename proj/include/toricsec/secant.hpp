// Dimension and degree of the secant variety of a smooth projective toric
// variety, from the family table or the double point formula, and the
// corresponding statements for subsets of lattice points.

#ifndef TORICSEC_SECANT_HPP
#define TORICSEC_SECANT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricsec/classify.hpp"
#include "toricsec/polytope.hpp"

namespace toricsec {

/// binom(2n-1, n-1)
Integer veronese_secant_degree(std::size_t n);

/// Table value for (2*Delta_n)_k: 1 when k = n-2 (Sec fills P^{2n}),
/// otherwise truncated_table_sum(n, k).
Integer truncated_secant_degree(std::size_t n, long k);
/// The double sum over 1 <= i < j <= n-k, evaluated as written.
Integer truncated_table_sum(std::size_t n, long k);

/// prod_{0 <= i <= n-l-2} binom(l+1+i, 2) / binom(2+i, 2)
Integer product_secant_degree(std::size_t l, std::size_t n);

/// d^2 - (2n+1) d + n(n+1) for the scroll with d = d_1 + ... + d_n.
Integer scroll_secant_rhs(std::size_t n, long d);

/// d^2 - 10d + 5B + 2V - 12, the double point right-hand side of a smooth polygon.
Integer surface_double_point(const PolytopeStats& s);
/// d^2 - 21d + c1^3 + 8V + 14E - 84I - 132 for a smooth 3-polytope.
Integer threefold_double_point(const PolytopeStats& s, const Integer& c1cubed);

/// Half of the above. Throws HypothesisError ("formula requires dim Sec = 5",
/// resp. 7) unless P is General with r large enough.
Integer surface_secant_degree(const LatticePolytope& p);
Integer threefold_secant_degree(const LatticePolytope& p);

/// Degree of Sec of d_1 Delta_{n_1} x ... x d_k Delta_{n_k} in closed form.
/// Throws HypothesisError if sum d_i < 3.
Integer segre_veronese_secant_degree(std::span<const long> d, std::span<const std::size_t> n);

enum class SecantLines
{
    Unique,
    Infinite,
};

std::string to_string(SecantLines s);

struct CrossCheck
{
    std::string name;
    bool passed = true;
    std::vector<std::pair<std::string, Integer>> values;
    /// Reported but never fatal.
    bool informational = false;
};

struct SecantReport
{
    std::size_t n = 0;
    std::size_t r = 0;
    FamilyLabel family;
    std::size_t dim_sec = 0;
    std::size_t expected_dim = 0;
    bool has_expected_dim = true;
    Integer deg_sec;
    int deg_phi = 0;
    SecantLines secant_lines = SecantLines::Infinite;
    Integer rhs;  // deg Sec * deg phi from the double point formula
    Integer degree;  // deg X_P
    std::vector<CrossCheck> cross_checks;

    /// All non-informational cross-checks passed.
    bool consistent() const;
};

struct AnalyzeOptions
{
    bool debug_all_vertices = false;
};

/// Throws NotSmoothError for non-smooth P.
SecantReport analyze(const LatticePolytope& p, const AnalyzeOptions& options = {});

/// Whether the label is one of the families whose secant variety is
/// deficient: 2*Delta_n (n >= 2), (2*Delta_n)_k (k <= n-3), Delta_l x Delta_{n-l} (2 <= l <= n-2).
bool is_exceptional(const FamilyLabel& label);

struct SubsetReport
{
    std::size_t n = 0;
    std::size_t s = 0;
    bool hypothesis_ok = false;
    std::vector<IntVec> missing;  // vertices or vertex neighbors absent from A
    /// Set only when hypothesis_ok.
    std::optional<std::size_t> dim_sec;
    std::optional<Integer> deg_divides;
    std::optional<Integer> deg_sec;  // known exactly only when Sec fills P^s
    bool expected_dim_ok = false;
    bool exceptional = false;
    std::optional<SecantReport> polytope;
    std::vector<CrossCheck> cross_checks;

    bool consistent() const;
};

/// Throws NotSmoothError if conv(A) is not smooth.
SubsetReport analyze_points(const PointConfiguration& a, const AnalyzeOptions& options = {});

}  // namespace toricsec

#endif
