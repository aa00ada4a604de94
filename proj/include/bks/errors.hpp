#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bks {

// Raised when a reachability or product construction would exceed the
// configured state cap; reported instead of diverging.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace bks
