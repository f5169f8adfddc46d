#ifndef TRH_ERRORS_HPP
#define TRH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trh {

/// Input text does not follow the matrix/polynomial file format.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line, int column)
        : std::runtime_error(std::move(msg)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A documented precondition of an operation was violated by the caller.
class contract_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An argument is outside the mathematical domain of a formula.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative numerical routine failed to converge or a numeric
/// cross-check failed. Never silent: callers must handle or crash.
class numerical_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A trace search ran past its horizon in a mode where exhaustion is an
/// error rather than a reportable outcome.
class search_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace trh

#endif
