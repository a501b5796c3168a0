#ifndef TORICSEC_FAN_HPP
#define TORICSEC_FAN_HPP

#include <cstddef>
#include <vector>

#include "toricsec/zlinalg.hpp"

namespace toricsec {

/// A simplicial fan given by primitive ray generators and its maximal cones
/// (sorted ray-index lists). Every subset of a maximal cone is a cone.
struct Fan
{
    std::size_t dim = 0;
    std::vector<IntVec> rays;
    std::vector<std::vector<std::size_t>> max_cones;
};

}  // namespace toricsec

#endif
