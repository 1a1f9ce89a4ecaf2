#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace origraph {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structural violations found while building a graph.
class GraphError : public Error {
public:
    enum class Kind { LoopArc, OppositeArcs, VertexOutOfRange };

    GraphError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Malformed ODG text; line numbers are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Arguments outside an operation's documented domain (bad girth target,
// order above a search cap, set-size constraints, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace origraph
