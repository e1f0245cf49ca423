#pragma once

#include <stdexcept>

namespace treeinv {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (edge list or graph6 record).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input that is not a tree (cycle, duplicate edge,
/// wrong edge count, self-loop).
class NotATreeError : public Error {
public:
    using Error::Error;
};

/// Fewer than two vertices.
class TooSmallError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a documented size guard for an exponential or
/// format-limited operation.
class TooLargeError : public Error {
public:
    using Error::Error;
};

/// Vertex index or numeric argument outside its admissible range.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Operation on an ordered vertex pair called with u == v.
class SameVertexError : public Error {
public:
    using Error::Error;
};

/// Sign function queried at an even distance, where it is undefined.
class EvenDistanceError : public Error {
public:
    using Error::Error;
};

/// Matrix operands whose shapes do not line up.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

}  // namespace treeinv
