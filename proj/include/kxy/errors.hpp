#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kxy {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two polynomials from different rings were combined.
class RingError : public Error {
public:
    explicit RingError(const std::string& msg) : Error(msg) {}
};

// Syntax error in the expression grammar; `pos` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// A configured resource cap (degree, basis size, reduction steps) was hit.
// Never a wrong verdict: the computation was abandoned, not completed.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// An operation's documented precondition does not hold for the given input.
class PrecondError : public Error {
public:
    explicit PrecondError(const std::string& msg) : Error(msg) {}
};

}  // namespace kxy
