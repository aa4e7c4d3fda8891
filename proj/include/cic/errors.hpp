#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace cic {

/// A colorer or constructor was called on an input outside its theorem's hypotheses.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what, std::optional<int> vertex = std::nullopt)
        : std::invalid_argument(what), vertex_(vertex) {}

    /// First offending vertex, when the violation is local to one.
    std::optional<int> vertex() const { return vertex_; }

private:
    std::optional<int> vertex_;
};

/// Raised when an internal invariant of a construction fails. Never recoverable;
/// indicates a bug or a gap between the construction and its proof.
class DefectError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The input lies in a class this library knows about but does not build a colorer for.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cic
