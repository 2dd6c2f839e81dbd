#pragma once

#include <stdexcept>
#include <string>

namespace bei {

// Bad input text (graph files, flag values). Messages name the offending line.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An exact computation was refused because a graded piece or a search space
// exceeds its configured bound. Never a wrong answer, always a loud refusal.
struct SizeGuardError : std::runtime_error {
    explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

struct SearchBoundError : std::runtime_error {
    explicit SearchBoundError(const std::string& what) : std::runtime_error(what) {}
};

struct NotFreeVertexError : std::runtime_error {
    explicit NotFreeVertexError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bei
