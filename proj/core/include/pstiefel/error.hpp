#ifndef PSTIEFEL_ERROR_HPP
#define PSTIEFEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pstiefel {

/// Raised when caller-supplied parameters violate an operation's precondition.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a mathematical invariant the library relies on does not hold.
/// Seeing one of these means either a bug or a broken assumption.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace pstiefel

#endif // PSTIEFEL_ERROR_HPP
