#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasiadj {

// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Germ-file syntax error; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A well-formed germ that violates a precondition (factor not vanishing at the origin, ...).
class GermError : public Error {
public:
    using Error::Error;
};

enum class ResolutionErrorKind { IrrationalCenter, SharedBranch, NonReduced, MultipleBranches };

class ResolutionError : public Error {
public:
    ResolutionError(ResolutionErrorKind kind, const std::string& what, std::string obstruction = {})
        : Error(what), kind_(kind), obstruction_(std::move(obstruction)) {}
    ResolutionErrorKind kind() const noexcept { return kind_; }
    // For IrrationalCenter: the univariate polynomial without rational roots.
    const std::string& obstruction() const noexcept { return obstruction_; }

private:
    ResolutionErrorKind kind_;
    std::string obstruction_;
};

const char* to_string(ResolutionErrorKind kind);

// Graph-file problems. Schema errors carry one message; invariant violations are listed individually.
class GraphError : public Error {
public:
    explicit GraphError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) {
            if (!out.empty()) out += "; ";
            out += s;
        }
        return out;
    }
    std::vector<std::string> violations_;
};

// Requested computation is outside what is implemented for this input (r too large, no trace, ...).
class Unsupported : public Error {
public:
    using Error::Error;
};

// Argument outside an operation's domain (point outside U, wrong length, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace quasiadj
