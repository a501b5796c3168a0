// Intersection theory on the smooth complete toric variety of a fan.
// Classes are polynomials in the boundary divisors D_rho, truncated at the
// fan dimension; integration reduces monomials to orbit closures.

#ifndef TORICSEC_CHOW_HPP
#define TORICSEC_CHOW_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "toricsec/fan.hpp"
#include "toricsec/polytope.hpp"

namespace toricsec {

/// Exponent per ray.
using Monomial = std::vector<unsigned>;

unsigned degree(const Monomial& m);
std::string to_string(const Monomial& m);

class ChowCycle
{
public:
    ChowCycle() = default;
    explicit ChowCycle(std::size_t ray_count) : rays_(ray_count) {}

    static ChowCycle constant(std::size_t ray_count, const Rational& c);
    static ChowCycle divisor(std::size_t ray_count, std::size_t ray);

    std::size_t ray_count() const { return rays_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Homogeneous part of the given total degree.
    ChowCycle part(unsigned deg) const;
    Rational coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    ChowCycle& operator+=(const ChowCycle& o);
    ChowCycle& operator-=(const ChowCycle& o);
    ChowCycle& operator*=(const Rational& c);

    friend ChowCycle operator+(ChowCycle a, const ChowCycle& b) { return a += b; }
    friend ChowCycle operator-(ChowCycle a, const ChowCycle& b) { return a -= b; }
    friend ChowCycle operator*(const Rational& c, ChowCycle a) { return a *= c; }
    friend bool operator==(const ChowCycle&, const ChowCycle&) = default;

private:
    std::size_t rays_ = 0;
    std::map<Monomial, Rational> terms_;
};

/// Chow ring of a smooth complete simplicial fan. Products drop monomials
/// whose support is not a cone and everything above degree dim.
class ChowRing
{
public:
    /// Throws std::invalid_argument if the fan is not smooth and complete.
    explicit ChowRing(Fan fan);

    const Fan& fan() const { return fan_; }
    std::size_t dim() const { return fan_.dim; }
    std::size_t ray_count() const { return fan_.rays.size(); }

    ChowCycle one() const { return ChowCycle::constant(ray_count(), 1); }
    ChowCycle divisor(std::size_t ray) const { return ChowCycle::divisor(ray_count(), ray); }
    ChowCycle linear_combination(std::span<const Integer> coefficients) const;

    /// Whether the rays with the given (sorted, distinct) indices span a cone.
    bool is_cone(std::span<const std::size_t> rays) const;

    ChowCycle multiply(const ChowCycle& a, const ChowCycle& b) const;
    ChowCycle power(const ChowCycle& a, unsigned k) const;
    /// exp(a) for a class without constant term.
    ChowCycle exponential(const ChowCycle& a) const;

    ChowCycle total_chern() const;
    ChowCycle chern_class(unsigned i) const { return total_chern().part(i); }
    ChowCycle inverse_total_chern() const;
    ChowCycle todd() const;

    /// Intersection number of a monomial of degree dim.
    Rational integrate_monomial(const Monomial& m) const;
    /// D_{r_1} * ... * D_{r_n}, multiplied into the fundamental class in the given order.
    Rational integrate_product(std::span<const std::size_t> factors) const;
    /// Integral of the degree-dim part.
    Rational integrate(const ChowCycle& c) const;

private:
    Fan fan_;
    std::vector<std::vector<std::size_t>> cones_;  // sorted max cones
    std::vector<IntMat> dual_bases_;               // row j pairs to 1 with ray cones_[k][j]
};

/// Throws std::invalid_argument describing the first violated condition.
void validate_fan(const Fan& fan);

/// Free forms of the ring operations.
Rational integrate_monomial(const Fan& fan, const Monomial& exponents);
ChowCycle total_chern(const Fan& fan);
ChowCycle inverse_total_chern(const Fan& fan);
ChowCycle todd(const Fan& fan);

/// Exact coefficients of x / (1 - e^{-x}) up to x^k.
std::vector<Rational> todd_series(unsigned k);

/// Support numbers a_rho with P = {m : <m, v_rho> >= -a_rho}, aligned with
/// normal_fan(P).rays.
struct AmpleDivisor
{
    std::vector<Integer> coefficients;
};

AmpleDivisor ample_from_polytope(const LatticePolytope& p);

/// The vertex m_sigma of each maximal cone, solving <m, v_rho> = -a_rho on sigma.
std::vector<IntVec> divisor_vertices(const Fan& fan, const AmpleDivisor& d);
/// Strict convexity of the support function on every pair of maximal cones.
bool is_ample(const Fan& fan, const AmpleDivisor& d);
/// Hull of divisor_vertices; throws HypothesisError unless d is ample.
LatticePolytope polytope_of_divisor(const Fan& fan, const AmpleDivisor& d);

/// Toric data of a smooth polytope: ring of its normal fan and H = sum a_rho D_rho.
struct ToricVariety
{
    ChowRing ring;
    ChowCycle hyperplane;
};

/// Throws NotSmoothError for non-smooth input.
ToricVariety toric_variety(const LatticePolytope& p);
/// Throws HypothesisError unless d is ample.
ToricVariety toric_variety(const Fan& fan, const AmpleDivisor& d);

/// int H^n
Integer degree_of_embedding(const ToricVariety& x);
Integer degree_of_embedding(const LatticePolytope& p);

/// d^2 - sum_{i=0}^{n} binom(2n+1, i) int c(T)^{-1} H^i
Integer secant_rhs(const ToricVariety& x);
Integer secant_rhs(const LatticePolytope& p);

/// int e^H td
Integer riemann_roch_count(const ToricVariety& x);
Integer riemann_roch_count(const LatticePolytope& p);

/// Named intersection numbers for diagnostics: "H^n", "c_i*H^(n-i)",
/// "c1^n", "td", "rhs", and for n = 3 "c1*c2", "c1^2*H", and so on.
std::map<std::string, Rational> intersection_numbers(const ToricVariety& x);
/// Every nonzero degree-n monomial in the D_rho with cone support.
std::map<Monomial, Rational> monomial_table(const ChowRing& ring);

}  // namespace toricsec

#endif
