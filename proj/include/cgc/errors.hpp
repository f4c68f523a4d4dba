#pragma once

#include <stdexcept>
#include <string>

namespace cgc {

// Bad caller input: out-of-range vertices, violated preconditions, malformed files.
class InputError : public std::invalid_argument {
  public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size/node budget was exceeded before the computation could start
// (e.g. a generator whose output would be too large, an oracle fed too many vertices).
// Searches that run out of budget mid-flight return an Indeterminate value instead.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A state the underlying proofs rule out. Reaching one means the implementation
// (or its input certificate) is wrong, so it is reported loudly and never swallowed.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cgc
