#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scl {

// Malformed user input (bad word text, bad arguments). CLI exit code 1.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource cap was hit. CLI exit code 2.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical invariant failed to hold. CLI exit code 3.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class CircuitCapExceeded : public ResourceLimit {
public:
    CircuitCapExceeded(std::size_t reached, std::size_t cap)
        : ResourceLimit("circuit cap exceeded: found " + std::to_string(reached) +
                        " circuits with cap " + std::to_string(cap)),
          reached_(reached), cap_(cap) {}

    std::size_t reached() const noexcept { return reached_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t reached_;
    std::size_t cap_;
};

}  // namespace scl
