#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace rainbow {

/// Malformed input: bad edge list, bad colouring file, invalid parameters.
/// Carries the zero-based index (entry or line) of the offending item when
/// there is one.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::invalid_argument(what), index_(index) {}

    [[nodiscard]] std::optional<std::size_t> index() const noexcept { return index_; }

private:
    std::optional<std::size_t> index_;
};

/// Well-formed input that violates an algorithm's precondition
/// (disconnected graph, a bridge in a bridgeless-only pipeline, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded (verifier palette, oracle edge count,
/// generator vertex budget, ...).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rainbow
