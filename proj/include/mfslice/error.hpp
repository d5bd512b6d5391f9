#ifndef MFSLICE_ERROR_HPP
#define MFSLICE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mfslice {

/// Unsupported type/rank, bad campaign parameters, malformed CLI input.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Mathematical precondition violated, e.g. a non-regular shift vector.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iterative solver failed to converge within its budget.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction did not; indicates a bug.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mfslice

#endif  // MFSLICE_ERROR_HPP
