#pragma once

#include <stdexcept>
#include <string>

namespace linlef {

// Malformed or mathematically invalid input: bad JSON, a failed Jacobi
// check, a map that is not a morphism. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An invariant that must hold for every valid input was violated
// (d∘d ≠ 0, a non-commuting chain map, an image outside the cocycle span).
// The CLI maps these to exit code 3.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace linlef
