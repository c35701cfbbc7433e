#pragma once

#include <stdexcept>
#include <string>

namespace kemeny {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The graph is not connected; `unreachable()` names one vertex that cannot
/// be reached from the traversal source.
class DisconnectedGraphError : public Error {
public:
    DisconnectedGraphError(int source, int unreachable)
        : Error("graph is disconnected: vertex " + std::to_string(unreachable) +
                " is unreachable from vertex " + std::to_string(source)),
          unreachable_(unreachable) {}

    int unreachable() const noexcept { return unreachable_; }

private:
    int unreachable_;
};

class InvalidCodeError : public Error {
public:
    using Error::Error;
};

/// An enumeration request exceeded the configured size cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// Two computations that must agree exactly did not. Always an engine bug.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (graph files, tree specs, numbers).
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace kemeny
