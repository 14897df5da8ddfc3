#ifndef SLT_ERRORS_HPP
#define SLT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slt {

/// Operands live on ambient spaces of different dimension.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold
/// (lattice not closed, not an ABSL, no rank-one density, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed literal or document; `where` names the offending location.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

} // namespace slt

#endif
