#pragma once

#include <stdexcept>
#include <string>

namespace oscf {

/// Invalid configuration: bad grid size, malformed config file, mismatched
/// generator/equation. CLI maps this to exit status 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside an operation's mathematical domain (nonzero mean where a
/// mean-zero field is required, non-solenoidal velocity, epsilon <= 0, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Corrupt or truncated checkpoint file. Message names the byte offset.
class CheckpointError : public std::runtime_error {
public:
    explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace oscf
