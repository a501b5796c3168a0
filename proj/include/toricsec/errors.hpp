#ifndef TORICSEC_ERRORS_HPP
#define TORICSEC_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "toricsec/zlinalg.hpp"

namespace toricsec {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad coordinates, empty point sets, bad JSON.
class InputError : public Error
{
public:
    using Error::Error;
};

class NotSmoothError : public Error
{
public:
    NotSmoothError(const std::string& what, IntVec vertex) : Error(what), vertex_(std::move(vertex)) {}
    const IntVec& vertex() const { return vertex_; }

private:
    IntVec vertex_;
};

/// A theorem's hypothesis does not hold for the given input.
class HypothesisError : public Error
{
public:
    using Error::Error;
};

/// Two independent computations disagree. Always a bug.
class ConsistencyError : public Error
{
public:
    using Error::Error;
};

}  // namespace toricsec

#endif
