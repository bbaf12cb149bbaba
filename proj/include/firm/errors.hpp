#ifndef FIRM_ERRORS_HPP
#define FIRM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace firm {

// Raised when an exact search exceeds its configured node/size budget.
// Distinct from "no witness found": callers must not treat it as a verdict.
class budget_exceeded_error : public std::runtime_error {
public:
    explicit budget_exceeded_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised when two independent certification routes disagree. Never expected;
// it is a hard failure signal, not a recoverable condition.
class route_disagreement_error : public std::logic_error {
public:
    explicit route_disagreement_error(const std::string& what)
        : std::logic_error(what) {}
};

// Raised on malformed .gbm input; carries 1-based line/column.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace firm

#endif
