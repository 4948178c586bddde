#ifndef OCORR_ERROR_HPP
#define OCORR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ocorr {

/// Thrown when an operation is called outside its documented domain
/// (bad index tuples, parameters out of range, guard violations).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an internal consistency check fails; indicates a bug
/// upstream, not bad user input.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ocorr

#endif
