#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zenith {

/// Precondition violation: an argument is outside its documented domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input data. Carries the source name and 1-based line number
/// (0 when the error is not tied to a specific line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : std::runtime_error(format(source, line, what)),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(const std::string& source, std::size_t line,
                              const std::string& what) {
        if (line == 0) return source + ": " + what;
        return source + ":" + std::to_string(line) + ": " + what;
    }

    std::string source_;
    std::size_t line_;
};

/// Inter-module contract breach (mismatched lengths, broken invariants).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Pipeline failure wrapper: remembers which stage of a scenario run failed.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& cause)
        : std::runtime_error("[" + stage + "] " + cause), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace zenith
