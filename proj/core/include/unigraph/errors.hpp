#pragma once

#include <stdexcept>
#include <string>

namespace unigraph {

// Invalid input data: malformed graphs, colorings, covers, parse errors.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a documented exact-computation bound. Thrown instead of
// silently degrading to an approximation.
class SizeBoundError : public std::runtime_error {
public:
    explicit SizeBoundError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace unigraph
