#include "toricsec/chow.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "toricsec/errors.hpp"

namespace toricsec {

using Cone = std::vector<std::size_t>;

unsigned degree(const Monomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0u);
}

std::string to_string(const Monomial& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "D" + std::to_string(i);
        if (m[i] > 1)
            s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// ChowCycle

ChowCycle ChowCycle::constant(std::size_t ray_count, const Rational& c)
{
    ChowCycle out(ray_count);
    out.add_term(Monomial(ray_count), c);
    return out;
}

ChowCycle ChowCycle::divisor(std::size_t ray_count, std::size_t ray)
{
    if (ray >= ray_count)
        throw std::out_of_range("divisor index out of range");
    Monomial m(ray_count);
    m[ray] = 1;
    ChowCycle out(ray_count);
    out.add_term(m, 1);
    return out;
}

ChowCycle ChowCycle::part(unsigned deg) const
{
    ChowCycle out(rays_);
    for (const auto& [m, c] : terms_)
        if (degree(m) == deg)
            out.terms_.emplace(m, c);
    return out;
}

Rational ChowCycle::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ChowCycle::add_term(const Monomial& m, const Rational& c)
{
    if (m.size() != rays_)
        throw std::invalid_argument("monomial length does not match ray count");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

ChowCycle& ChowCycle::operator+=(const ChowCycle& o)
{
    if (rays_ != o.rays_)
        throw std::invalid_argument("cycles over different fans");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

ChowCycle& ChowCycle::operator-=(const ChowCycle& o)
{
    if (rays_ != o.rays_)
        throw std::invalid_argument("cycles over different fans");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

ChowCycle& ChowCycle::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

// ---------------------------------------------------------------------------
// fan validation

void validate_fan(const Fan& fan)
{
    const std::size_t n = fan.dim;
    if (n == 0)
        throw std::invalid_argument("fan of dimension 0");
    std::set<IntVec> seen;
    for (const auto& r : fan.rays) {
        if (r.size() != n)
            throw std::invalid_argument("ray " + to_string(r) + " has wrong length");
        if (is_zero(r) || content(r) != 1)
            throw std::invalid_argument("ray " + to_string(r) + " is not primitive");
        if (!seen.insert(r).second)
            throw std::invalid_argument("duplicate ray " + to_string(r));
    }
    if (fan.max_cones.empty())
        throw std::invalid_argument("fan has no maximal cones");
    std::set<Cone> cones;
    std::vector<bool> used(fan.rays.size());
    for (const auto& c : fan.max_cones) {
        Cone s = c;
        std::sort(s.begin(), s.end());
        if (s.size() != n || std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("maximal cone is not simplicial of full dimension");
        std::vector<IntVec> gens;
        for (std::size_t r : s) {
            if (r >= fan.rays.size())
                throw std::invalid_argument("cone refers to a missing ray");
            used[r] = true;
            gens.push_back(fan.rays[r]);
        }
        if (abs(determinant(IntMat::from_rows(gens, n))) != 1)
            throw std::invalid_argument("fan is not smooth: a maximal cone is not unimodular");
        if (!cones.insert(s).second)
            throw std::invalid_argument("duplicate maximal cone");
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw std::invalid_argument("a ray lies in no maximal cone");

    // every wall bounds exactly two maximal cones, lying on opposite sides of it
    std::map<Cone, std::vector<std::size_t>> walls;  // wall -> leftover ray of each cone
    for (const auto& s : cones)
        for (std::size_t drop = 0; drop < n; ++drop) {
            Cone w;
            for (std::size_t j = 0; j < n; ++j)
                if (j != drop)
                    w.push_back(s[j]);
            walls[w].push_back(s[drop]);
        }
    for (const auto& [w, opposite] : walls) {
        if (opposite.size() != 2)
            throw std::invalid_argument("fan is not complete: a wall lies in " + std::to_string(opposite.size()) +
                                        " maximal cone(s)");
        auto side = [&](std::size_t r) {
            std::vector<IntVec> gens;
            for (std::size_t x : w)
                gens.push_back(fan.rays[x]);
            gens.push_back(fan.rays[r]);
            return determinant(IntMat::from_rows(gens, n)).sign();
        };
        if (side(opposite[0]) == side(opposite[1]))
            throw std::invalid_argument("fan cones overlap across a wall");
    }
}

// ---------------------------------------------------------------------------
// ChowRing

ChowRing::ChowRing(Fan fan) : fan_(std::move(fan))
{
    validate_fan(fan_);
    const std::size_t n = fan_.dim;
    for (auto c : fan_.max_cones) {
        std::sort(c.begin(), c.end());
        std::vector<IntVec> gens;
        for (std::size_t r : c)
            gens.push_back(fan_.rays[r]);
        // inverse of the row matrix has the dual basis as its columns
        dual_bases_.push_back(unimodular_inverse(IntMat::from_rows(gens, n)).transposed());
        cones_.push_back(std::move(c));
    }
}

ChowCycle ChowRing::linear_combination(std::span<const Integer> coefficients) const
{
    if (coefficients.size() != ray_count())
        throw std::invalid_argument("one coefficient per ray expected");
    ChowCycle out(ray_count());
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        out.add_term(divisor(i).terms().begin()->first, Rational(coefficients[i]));
    return out;
}

bool ChowRing::is_cone(std::span<const std::size_t> rays) const
{
    if (rays.size() > dim())
        return false;
    for (const auto& c : cones_)
        if (std::includes(c.begin(), c.end(), rays.begin(), rays.end()))
            return true;
    return false;
}

namespace {

Cone support(const Monomial& m)
{
    Cone s;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0)
            s.push_back(i);
    return s;
}

Integer to_integer(const Rational& q, const char* what)
{
    if (denominator(q) != 1)
        throw ConsistencyError(std::string(what) + " is not an integer");
    return numerator(q);
}

}  // namespace

ChowCycle ChowRing::multiply(const ChowCycle& a, const ChowCycle& b) const
{
    if (a.ray_count() != ray_count() || b.ray_count() != ray_count())
        throw std::invalid_argument("cycle belongs to a different fan");
    ChowCycle out(ray_count());
    Monomial m(ray_count());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            if (degree(m) > dim() || !is_cone(support(m)))
                continue;
            out.add_term(m, ca * cb);
        }
    return out;
}

ChowCycle ChowRing::power(const ChowCycle& a, unsigned k) const
{
    ChowCycle out = one();
    for (unsigned i = 0; i < k; ++i)
        out = multiply(out, a);
    return out;
}

ChowCycle ChowRing::exponential(const ChowCycle& a) const
{
    if (a.coefficient(Monomial(ray_count())) != 0)
        throw std::invalid_argument("exponential of a class with constant term");
    ChowCycle out = one(), term = one();
    for (unsigned k = 1; k <= dim(); ++k) {
        term = multiply(term, a);
        term *= Rational(1, k);
        out += term;
    }
    return out;
}

ChowCycle ChowRing::total_chern() const
{
    ChowCycle c = one();
    for (std::size_t r = 0; r < ray_count(); ++r)
        c = multiply(c, one() + divisor(r));
    return c;
}

ChowCycle ChowRing::inverse_total_chern() const
{
    ChowCycle minus_s = one() - total_chern();
    ChowCycle out = one(), term = one();
    for (std::size_t k = 1; k <= dim(); ++k) {
        term = multiply(term, minus_s);
        out += term;
    }
    return out;
}

ChowCycle ChowRing::todd() const
{
    auto t = todd_series(static_cast<unsigned>(dim()));
    ChowCycle out = one();
    for (std::size_t r = 0; r < ray_count(); ++r) {
        ChowCycle factor(ray_count());
        Monomial m(ray_count());
        for (unsigned k = 0; k <= dim(); ++k) {
            m[r] = k;
            factor.add_term(m, t[k]);
        }
        out = multiply(out, factor);
    }
    return out;
}

Rational ChowRing::integrate_product(std::span<const std::size_t> factors) const
{
    if (factors.size() != dim())
        throw std::invalid_argument("intersection number needs exactly dim factors");
    std::map<Cone, Rational> state{{Cone{}, Rational(1)}};
    auto push = [&](std::map<Cone, Rational>& next, const Cone& sigma, std::size_t r, const Rational& c) {
        Cone tau = sigma;
        tau.insert(std::lower_bound(tau.begin(), tau.end(), r), r);
        if (!is_cone(tau))
            return;
        auto [it, inserted] = next.emplace(tau, c);
        if (!inserted)
            it->second += c;
    };
    for (std::size_t rho : factors) {
        if (rho >= ray_count())
            throw std::out_of_range("ray index out of range");
        std::map<Cone, Rational> next;
        for (const auto& [sigma, c] : state) {
            if (c == 0)
                continue;
            auto pos = std::lower_bound(sigma.begin(), sigma.end(), rho);
            if (pos == sigma.end() || *pos != rho) {
                push(next, sigma, rho, c);
                continue;
            }
            // D_rho restricted to V(sigma): move it off sigma with div(chi^u)
            std::size_t k = 0;
            while (!std::includes(cones_[k].begin(), cones_[k].end(), sigma.begin(), sigma.end()))
                ++k;
            auto j = static_cast<std::size_t>(std::find(cones_[k].begin(), cones_[k].end(), rho) - cones_[k].begin());
            IntVec u = dual_bases_[k].row(j);
            for (std::size_t r = 0; r < ray_count(); ++r) {
                if (std::binary_search(sigma.begin(), sigma.end(), r))
                    continue;
                Integer pairing = dot(u, fan_.rays[r]);
                if (pairing != 0)
                    push(next, sigma, r, -c * Rational(pairing));
            }
        }
        state = std::move(next);
    }
    Rational total = 0;
    for (const auto& [sigma, c] : state)
        total += c;
    return total;
}

Rational ChowRing::integrate_monomial(const Monomial& m) const
{
    if (m.size() != ray_count())
        throw std::invalid_argument("monomial length does not match ray count");
    if (degree(m) != dim())
        throw std::invalid_argument("monomial degree must equal the fan dimension");
    if (!is_cone(support(m)))
        return 0;
    std::vector<std::size_t> factors;
    for (std::size_t i = 0; i < m.size(); ++i)
        factors.insert(factors.end(), m[i], i);
    return integrate_product(factors);
}

Rational ChowRing::integrate(const ChowCycle& c) const
{
    Rational total = 0;
    for (const auto& [m, v] : c.terms())
        if (degree(m) == dim())
            total += v * integrate_monomial(m);
    return total;
}

Rational integrate_monomial(const Fan& fan, const Monomial& exponents)
{
    return ChowRing(fan).integrate_monomial(exponents);
}

ChowCycle total_chern(const Fan& fan)
{
    return ChowRing(fan).total_chern();
}

ChowCycle inverse_total_chern(const Fan& fan)
{
    return ChowRing(fan).inverse_total_chern();
}

ChowCycle todd(const Fan& fan)
{
    return ChowRing(fan).todd();
}

std::vector<Rational> todd_series(unsigned k)
{
    // Bernoulli numbers with B_1 = +1/2, then divide by j!
    std::vector<Rational> b(k + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= k; ++m) {
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j)
            s += Rational(binomial(m + 1, j)) * b[j];
        b[m] = -s / Rational(m + 1);
    }
    if (k >= 1)
        b[1] = -b[1];
    Integer fact = 1;
    for (unsigned j = 0; j <= k; ++j) {
        if (j > 0)
            fact *= j;
        b[j] /= Rational(fact);
    }
    return b;
}

// ---------------------------------------------------------------------------
// divisors and polytopes

AmpleDivisor ample_from_polytope(const LatticePolytope& p)
{
    AmpleDivisor d;
    for (const auto& f : p.facets())
        d.coefficients.push_back(f.offset);
    return d;
}

std::vector<IntVec> divisor_vertices(const Fan& fan, const AmpleDivisor& d)
{
    if (d.coefficients.size() != fan.rays.size())
        throw std::invalid_argument("one divisor coefficient per ray expected");
    std::vector<IntVec> out;
    for (const auto& cone : fan.max_cones) {
        std::vector<IntVec> gens;
        IntVec rhs;
        for (std::size_t r : cone) {
            gens.push_back(fan.rays[r]);
            rhs.push_back(-d.coefficients[r]);
        }
        out.push_back(unimodular_inverse(IntMat::from_rows(gens, fan.dim)) * rhs);
    }
    return out;
}

bool is_ample(const Fan& fan, const AmpleDivisor& d)
{
    auto ms = divisor_vertices(fan, d);
    for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
        const auto& cone = fan.max_cones[k];
        for (std::size_t r = 0; r < fan.rays.size(); ++r) {
            if (std::find(cone.begin(), cone.end(), r) != cone.end())
                continue;
            if (dot(ms[k], fan.rays[r]) + d.coefficients[r] <= 0)
                return false;
        }
    }
    return true;
}

LatticePolytope polytope_of_divisor(const Fan& fan, const AmpleDivisor& d)
{
    if (!is_ample(fan, d))
        throw HypothesisError("divisor is not ample");
    auto vs = divisor_vertices(fan, d);
    return LatticePolytope::from_vertices(vs);
}

ToricVariety toric_variety(const LatticePolytope& p)
{
    require_smooth(p);
    ChowRing ring(normal_fan(p));
    auto d = ample_from_polytope(p);
    ChowCycle h = ring.linear_combination(d.coefficients);
    return {std::move(ring), std::move(h)};
}

ToricVariety toric_variety(const Fan& fan, const AmpleDivisor& d)
{
    ChowRing ring(fan);
    if (!is_ample(fan, d))
        throw HypothesisError("divisor is not ample; only ample divisors are supported");
    ChowCycle h = ring.linear_combination(d.coefficients);
    return {std::move(ring), std::move(h)};
}

Integer degree_of_embedding(const ToricVariety& x)
{
    auto n = static_cast<unsigned>(x.ring.dim());
    return to_integer(x.ring.integrate(x.ring.power(x.hyperplane, n)), "H^n");
}

Integer degree_of_embedding(const LatticePolytope& p)
{
    return degree_of_embedding(toric_variety(p));
}

Integer secant_rhs(const ToricVariety& x)
{
    const auto n = static_cast<unsigned>(x.ring.dim());
    ChowCycle s = x.ring.inverse_total_chern();
    Rational sum = 0;
    ChowCycle hp = x.ring.one();
    for (unsigned i = 0; i <= n; ++i) {
        sum += Rational(binomial(2 * n + 1, i)) * x.ring.integrate(x.ring.multiply(s, hp));
        if (i < n)
            hp = x.ring.multiply(hp, x.hyperplane);
    }
    Integer d = degree_of_embedding(x);
    return d * d - to_integer(sum, "double point sum");
}

Integer secant_rhs(const LatticePolytope& p)
{
    return secant_rhs(toric_variety(p));
}

Integer riemann_roch_count(const ToricVariety& x)
{
    auto e = x.ring.exponential(x.hyperplane);
    return to_integer(x.ring.integrate(x.ring.multiply(e, x.ring.todd())), "Riemann-Roch count");
}

Integer riemann_roch_count(const LatticePolytope& p)
{
    return riemann_roch_count(toric_variety(p));
}

namespace {

void partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out)
{
    out.push_back(cur);
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

// every exponent vector on f with positive entries summing to total
template <class F>
void compositions(const std::vector<std::size_t>& f, std::size_t i, unsigned total, Monomial& m, F&& visit)
{
    if (i + 1 == f.size()) {
        m[f[i]] = total;
        visit(m);
        return;
    }
    for (unsigned e = 1; e + (f.size() - i - 1) <= total; ++e) {
        m[f[i]] = e;
        compositions(f, i + 1, total - e, m, visit);
    }
}

std::string power_name(const std::string& base, unsigned k)
{
    return k == 1 ? base : base + "^" + std::to_string(k);
}

}  // namespace

std::map<std::string, Rational> intersection_numbers(const ToricVariety& x)
{
    const auto n = static_cast<unsigned>(x.ring.dim());
    const ChowRing& ring = x.ring;
    ChowCycle c = ring.total_chern();
    std::vector<ChowCycle> ci;
    for (unsigned i = 0; i <= n; ++i)
        ci.push_back(c.part(i));
    std::vector<ChowCycle> hp{ring.one()};
    for (unsigned i = 1; i <= n; ++i)
        hp.push_back(ring.multiply(hp.back(), x.hyperplane));

    std::map<std::string, Rational> out;
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(n, n, cur, parts);
    for (auto lambda : parts) {
        std::reverse(lambda.begin(), lambda.end());
        ChowCycle prod = ring.one();
        std::string name;
        unsigned used = 0;
        for (std::size_t i = 0; i < lambda.size();) {
            std::size_t j = i;
            while (j < lambda.size() && lambda[j] == lambda[i])
                ++j;
            name += (name.empty() ? "" : "*") + power_name("c" + std::to_string(lambda[i]), static_cast<unsigned>(j - i));
            for (std::size_t t = i; t < j; ++t) {
                prod = ring.multiply(prod, ci[lambda[t]]);
                used += lambda[t];
            }
            i = j;
        }
        if (used < n) {
            name += (name.empty() ? "" : "*") + power_name("H", n - used);
            prod = ring.multiply(prod, hp[n - used]);
        }
        out[name] = ring.integrate(prod);
    }
    out["td"] = ring.integrate(ring.todd());
    out["chi"] = Rational(riemann_roch_count(x));
    out["rhs"] = Rational(secant_rhs(x));
    return out;
}

std::map<Monomial, Rational> monomial_table(const ChowRing& ring)
{
    const std::size_t n = ring.dim();
    std::set<Cone> faces;
    for (const auto& c : ring.fan().max_cones) {
        Cone s = c;
        std::sort(s.begin(), s.end());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Cone f;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1u << j))
                    f.push_back(s[j]);
            faces.insert(f);
        }
    }
    std::map<Monomial, Rational> out;
    for (const auto& f : faces) {
        Monomial m(ring.ray_count());
        compositions(f, 0, static_cast<unsigned>(n), m, [&](const Monomial& mono) {
            Rational v = ring.integrate_monomial(mono);
            if (v != 0)
                out.emplace(mono, v);
        });
    }
    return out;
}

}  // namespace toricsec
