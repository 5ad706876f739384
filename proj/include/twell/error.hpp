#ifndef TWELL_ERROR_HPP
#define TWELL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace twell {

/// Malformed or invalid input: bad tables, non-cocycles, failed validation.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyError : public std::runtime_error {
public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twell

#endif
