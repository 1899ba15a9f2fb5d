#pragma once

#include <stdexcept>
#include <string>

namespace helly {

/// Base class for every error this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInputError : Error {
    EmptyInputError() : Error("empty cell set") {}
};

struct NotConnectedError : Error {
    NotConnectedError() : Error("cell set is not 4-connected") {}
};

struct SizeOutOfRangeError : Error {
    using Error::Error;
};

struct LevelOutOfRangeError : Error {
    using Error::Error;
};

struct IsRectangleError : Error {
    IsRectangleError() : Error("polyomino is a rectangle") {}
};

struct ConstructionFailedError : Error {
    using Error::Error;
};

struct NotASubsetError : Error {
    NotASubsetError() : Error("vertex set is not a subset of the ground set") {}
};

struct ScaleExceededError : Error {
    using Error::Error;
};

/// Text/JSON input problem. `line` is 1-based, 0 when unknown.
struct ParseError : Error {
    int line;
    explicit ParseError(const std::string& what, int line_number = 0)
        : Error(what), line(line_number) {}
};

}  // namespace helly
