#pragma once

#include <stdexcept>
#include <string>

namespace gaptensor {

// A precondition or invariant documented in an operation's contract was broken
// by the caller (or by corrupted input data).
class ContractViolation : public std::runtime_error {
public:
    explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

// The operation is well posed but exceeds a configured resource cap
// (scaffold size, tensor size, message-space size, ...). Refusal is a
// first-class outcome, distinct from an error: callers may catch it and
// record the reported requirements.
class Refusal : public std::runtime_error {
public:
    explicit Refusal(const std::string& what) : std::runtime_error(what) {}

    // Optional structured payload describing what would have been needed.
    struct Requirement {
        long long required_r = 0;      // left degree of the missing scaffold
        long long required_s = 0;      // right degree
        long long required_girth = 0;  // 2g
        long long size_floor = 0;      // smallest size considered
        long long size_cap = 0;        // cap that was hit
    };

    Refusal(const std::string& what, Requirement req)
        : std::runtime_error(what), requirement_(req), has_requirement_(true) {}

    bool has_requirement() const { return has_requirement_; }
    const Requirement& requirement() const { return requirement_; }

private:
    Requirement requirement_{};
    bool has_requirement_ = false;
};

// Malformed input text. Carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace gaptensor
