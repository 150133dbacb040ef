// Exception types shared across the library.
#ifndef GOFGAMMA_ERRORS_HPP
#define GOFGAMMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gofgamma {

// Base class for all library-specific failures.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A series failed to reach the requested tolerance within the term budget.
// Carries the partial sum and the number of terms consumed so callers can
// decide whether the partial result is still usable.
class series_error : public error {
public:
    series_error(const std::string& msg, double partial_sum, int terms_used)
        : error(msg), partial_sum_(partial_sum), terms_used_(terms_used) {}
    double partial_sum() const { return partial_sum_; }
    int terms_used() const { return terms_used_; }
private:
    double partial_sum_;
    int terms_used_;
};

// Evaluation was requested too close to a pole of the secular function.
class pole_error : public error {
public:
    using error::error;
};

// Root bracketing failed (no sign change where one was expected).
class bracket_error : public error {
public:
    using error::error;
};

// Dataset parsing failure with 1-based line/column location.
class parse_error : public error {
public:
    parse_error(const std::string& msg, int line, int column)
        : error(msg), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }
private:
    int line_;
    int column_;
};

} // namespace gofgamma

#endif
