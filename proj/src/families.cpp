#include "toricsec/families.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace toricsec {

namespace {

IntVec unit(std::size_t n, std::size_t i, long scale = 1)
{
    IntVec v(n);
    v[i] = scale;
    return v;
}

}  // namespace

LatticePolytope simplex(std::size_t n, long dilation)
{
    if (n == 0 || dilation < 1)
        throw std::invalid_argument("simplex: need n >= 1 and dilation >= 1");
    std::vector<IntVec> vs{IntVec(n)};
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(unit(n, i, dilation));
    return LatticePolytope::from_vertices(vs);
}

LatticePolytope truncated_doubled_simplex(std::size_t n, long k)
{
    if (n == 0 || k < -1 || k > static_cast<long>(n) - 1)
        throw std::invalid_argument("truncated: need n >= 1 and -1 <= k <= n-1");
    std::vector<IntVec> pts;
    for (const auto& x : lattice_points(simplex(n, 2))) {
        Integer head = 0;
        for (long i = 0; i <= k; ++i)
            head += x[static_cast<std::size_t>(i)];
        if (head <= 1)
            pts.push_back(x);
    }
    return LatticePolytope::from_vertices(pts);
}

LatticePolytope product_of_simplices(std::span<const long> dilations, std::span<const std::size_t> dims)
{
    if (dilations.size() != dims.size() || dims.empty())
        throw std::invalid_argument("product: need matching nonempty dilation and dimension lists");
    std::size_t n = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1 || dilations[i] < 1)
            throw std::invalid_argument("product: dimensions and dilations must be >= 1");
        n += dims[i];
    }
    std::vector<IntVec> vs{IntVec(n)};
    std::size_t offset = 0;
    for (std::size_t f = 0; f < dims.size(); ++f) {
        std::vector<IntVec> next;
        for (const auto& v : vs) {
            next.push_back(v);
            for (std::size_t j = 0; j < dims[f]; ++j) {
                IntVec w = v;
                w[offset + j] = dilations[f];
                next.push_back(std::move(w));
            }
        }
        vs = std::move(next);
        offset += dims[f];
    }
    return LatticePolytope::from_vertices(vs);
}

PointConfiguration scroll_configuration(std::span<const long> d)
{
    if (d.empty())
        throw std::invalid_argument("scroll: need at least one d_i");
    const std::size_t n = d.size();
    std::vector<IntVec> pts;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] < 1)
            throw std::invalid_argument("scroll: every d_i must be >= 1");
        IntVec base(n);
        if (i + 1 < n)
            base[i] = 1;
        for (long a = 0; a <= d[i]; ++a) {
            IntVec p = base;
            p[n - 1] = a;
            pts.push_back(std::move(p));
        }
    }
    return PointConfiguration(std::move(pts));
}

LatticePolytope scroll_polytope(std::span<const long> d)
{
    return LatticePolytope::from_points(scroll_configuration(d));
}

PointConfiguration hexagon_points()
{
    return PointConfiguration({make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1}), make_vec({2, 1}),
                               make_vec({1, 2}), make_vec({2, 2})});
}

LatticePolytope hexagon()
{
    return LatticePolytope::from_points(hexagon_points());
}

LatticePolytope cube(std::size_t n)
{
    std::vector<long> ones(n, 1);
    std::vector<std::size_t> dims(n, 1);
    return product_of_simplices(ones, dims);
}

// ---------------------------------------------------------------------------

FamilySpec parse_family_spec(const std::string& text)
{
    FamilySpec spec;
    auto colon = text.find(':');
    spec.family = text.substr(0, colon);
    if (spec.family.empty())
        throw std::invalid_argument("empty family name");
    if (colon == std::string::npos)
        return spec;
    std::stringstream groups(text.substr(colon + 1));
    std::string group;
    while (std::getline(groups, group, ';')) {
        auto eq = group.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("malformed family parameter '" + group + "'");
        std::string key = group.substr(0, eq);
        std::vector<long> values;
        std::stringstream items(group.substr(eq + 1));
        std::string item;
        while (std::getline(items, item, ',')) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != item.size())
                throw std::invalid_argument("non-integer family parameter '" + item + "'");
            values.push_back(v);
        }
        if (values.empty())
            throw std::invalid_argument("family parameter '" + key + "' has no value");
        spec.params[key] = std::move(values);
    }
    return spec;
}

std::string to_string(const FamilySpec& spec)
{
    std::string s = spec.family;
    bool first = true;
    for (const auto& [k, vs] : spec.params) {
        s += first ? ":" : ";";
        first = false;
        s += k + "=";
        for (std::size_t i = 0; i < vs.size(); ++i)
            s += (i ? "," : "") + std::to_string(vs[i]);
    }
    return s;
}

namespace {

class ParamReader
{
public:
    explicit ParamReader(const FamilySpec& s) : spec_(s) {}

    long scalar(const std::string& key, std::optional<long> fallback = std::nullopt)
    {
        auto it = spec_.params.find(key);
        used_.push_back(key);
        if (it == spec_.params.end()) {
            if (!fallback)
                throw std::invalid_argument(spec_.family + ": missing parameter '" + key + "'");
            return *fallback;
        }
        if (it->second.size() != 1)
            throw std::invalid_argument(spec_.family + ": parameter '" + key + "' must be a single integer");
        return it->second.front();
    }

    std::vector<long> list(const std::string& key, std::optional<std::vector<long>> fallback = std::nullopt)
    {
        auto it = spec_.params.find(key);
        used_.push_back(key);
        if (it == spec_.params.end()) {
            if (!fallback)
                throw std::invalid_argument(spec_.family + ": missing parameter '" + key + "'");
            return *fallback;
        }
        return it->second;
    }

    void finish() const
    {
        for (const auto& [k, v] : spec_.params)
            if (std::find(used_.begin(), used_.end(), k) == used_.end())
                throw std::invalid_argument(spec_.family + ": unknown parameter '" + k + "'");
    }

private:
    const FamilySpec& spec_;
    std::vector<std::string> used_;
};

std::size_t positive(long v, const char* what)
{
    if (v < 1)
        throw std::invalid_argument(std::string(what) + " must be >= 1");
    return static_cast<std::size_t>(v);
}

}  // namespace

CatalogObject make_family(const FamilySpec& spec)
{
    ParamReader r(spec);
    const std::string& f = spec.family;
    std::optional<CatalogObject> out;
    if (f == "simplex") {
        std::size_t n = positive(r.scalar("n"), "n");
        out = simplex(n, r.scalar("r", 1));
    } else if (f == "doubled") {
        out = simplex(positive(r.scalar("n"), "n"), 2);
    } else if (f == "truncated") {
        out = truncated_doubled_simplex(positive(r.scalar("n"), "n"), r.scalar("k"));
    } else if (f == "product") {
        auto ns = r.list("n");
        auto ds = r.list("d", std::vector<long>(ns.size(), 1));
        std::vector<std::size_t> dims;
        for (long v : ns)
            dims.push_back(positive(v, "n_i"));
        out = product_of_simplices(ds, dims);
    } else if (f == "scroll") {
        out = scroll_polytope(r.list("d"));
    } else if (f == "scroll-points") {
        out = scroll_configuration(r.list("d"));
    } else if (f == "hexagon") {
        out = hexagon();
    } else if (f == "hexagon-outer") {
        out = hexagon_points();
    } else if (f == "cube") {
        out = cube(positive(r.scalar("n"), "n"));
    } else {
        throw std::invalid_argument("unknown family '" + f + "'");
    }
    r.finish();
    return std::move(*out);
}

}  // namespace toricsec
