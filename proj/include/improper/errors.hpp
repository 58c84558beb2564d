#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace improper {

// Malformed input graph or operation on an out-of-range vertex.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
public:
    ParseError(std::size_t line, const std::string& what)
        : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class NotIntervalGraph : public std::runtime_error {
public:
    explicit NotIntervalGraph(const std::string& reason)
        : std::runtime_error("not an interval graph: " + reason), reason_(reason) {}

    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidRepresentation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when the time budget expires mid-search. best_found is the smallest
// objective over orderings explored so far; it is not a certificate.
class SearchAborted : public std::runtime_error {
public:
    SearchAborted(std::optional<int> best_found, unsigned long long explored)
        : std::runtime_error("time budget exhausted"), best_found(best_found), explored(explored) {}

    std::optional<int> best_found;
    unsigned long long explored;
};

class EmptyForProper : public std::domain_error {
public:
    EmptyForProper() : std::domain_error("impropriety is 0: no basepoint witnesses") {}
};

class ZeroImpropriety : public std::domain_error {
public:
    ZeroImpropriety() : std::domain_error("criticality is undefined for impropriety 0") {}
};

}  // namespace improper
