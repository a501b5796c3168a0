// Catalog of named smooth polytopes used across the property suites.

#ifndef TORICSEC_TEST_CATALOG_HPP
#define TORICSEC_TEST_CATALOG_HPP

#include <string>
#include <vector>

#include "toricsec/families.hpp"

namespace toricsec::testing {

struct Named
{
    std::string name;
    LatticePolytope polytope;
};

inline std::vector<Named> catalog(std::size_t max_n)
{
    std::vector<Named> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        out.push_back({"simplex:n=" + std::to_string(n), simplex(n)});
        out.push_back({"doubled:n=" + std::to_string(n), simplex(n, 2)});
        for (long k = 0; k + 2 <= static_cast<long>(n); ++k)
            out.push_back({"truncated:n=" + std::to_string(n) + ";k=" + std::to_string(k),
                           truncated_doubled_simplex(n, k)});
        for (std::size_t l = 1; l < n; ++l) {
            std::vector<long> d{1, 1};
            std::vector<std::size_t> dims{l, n - l};
            out.push_back({"product:n=" + std::to_string(l) + "," + std::to_string(n - l), product_of_simplices(d, dims)});
        }
    }
    out.push_back({"simplex:n=1;r=3", simplex(1, 3)});
    out.push_back({"simplex:n=1;r=4", simplex(1, 4)});
    out.push_back({"simplex:n=2;r=3", simplex(2, 3)});
    out.push_back({"hexagon", hexagon()});
    if (max_n >= 3) {
        out.push_back({"cube:n=3", cube(3)});
        out.push_back({"simplex:n=3;r=3", simplex(3, 3)});
    }
    std::vector<std::vector<long>> scrolls{{1, 3}, {2, 2}, {1, 4}, {2, 3}, {1, 1, 3}, {1, 2, 2}, {2, 2, 2}};
    if (max_n >= 4)
        scrolls.push_back({1, 1, 1, 3});
    for (const auto& d : scrolls) {
        if (d.size() > max_n)
            continue;
        std::string name = "scroll:d=";
        for (std::size_t i = 0; i < d.size(); ++i)
            name += (i ? "," : "") + std::to_string(d[i]);
        out.push_back({name, scroll_polytope(d)});
    }
    if (max_n >= 3) {
        std::vector<long> dil{2, 1};
        std::vector<std::size_t> dims{1, 2};
        out.push_back({"product:n=1,2;d=2,1", product_of_simplices(dil, dims)});
    }
    return out;
}

}  // namespace toricsec::testing

#endif
