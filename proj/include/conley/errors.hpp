#pragma once

#include <stdexcept>
#include <string>

namespace conley {

/// Shape mismatch in matrix algebra (a contract violation, not a data error).
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Boundary data whose composition fails the boundary-squared-zero law.
/// Carries the degree and the offending cell pair when known.
class NotAComplexError : public std::runtime_error {
public:
    NotAComplexError(int degree, std::string from_cell, std::string to_cell)
        : std::runtime_error("not a chain complex: boundary composition from cell '" + from_cell +
                             "' (dimension " + std::to_string(degree + 1) + ") hits cell '" + to_cell +
                             "' (dimension " + std::to_string(degree - 1) + ") an odd number of times"),
          degree_(degree),
          from_cell_(std::move(from_cell)),
          to_cell_(std::move(to_cell)) {}

    int degree() const { return degree_; }
    const std::string& from_cell() const { return from_cell_; }
    const std::string& to_cell() const { return to_cell_; }

private:
    int degree_;
    std::string from_cell_;
    std::string to_cell_;
};

/// Malformed or inconsistent input file.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

/// Solver refused to search: more free entries than the configured budget.
class VariableBudgetError : public std::runtime_error {
public:
    VariableBudgetError(int count, int limit)
        : std::runtime_error("connection-matrix search has " + std::to_string(count) +
                             " free entries, exceeding the budget of " + std::to_string(limit) +
                             " (raise max_vars to allow this search)"),
          count_(count),
          limit_(limit) {}

    int count() const { return count_; }
    int limit() const { return limit_; }

private:
    int count_;
    int limit_;
};

}  // namespace conley
