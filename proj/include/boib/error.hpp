// Error types shared across the library.
//
// Every failure raised by the library derives from boib::Error. The command
// line tool maps the three families below onto its exit codes.

#ifndef BOIB_ERROR_HPP
#define BOIB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boib {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Input data is malformed or violates a structural invariant (exit code 1).
class InputError : public Error
{
public:
    using Error::Error;
};

/// The caller asked for an operation whose hypotheses do not hold (exit code 2).
class PreconditionViolated : public Error
{
public:
    using Error::Error;
};

/// A mathematically unreachable state was reached; always a bug (exit code 3).
class InternalContradiction : public Error
{
public:
    using Error::Error;
};

class BasisTooLarge : public PreconditionViolated
{
public:
    using PreconditionViolated::PreconditionViolated;
};

class ZeroSubspace : public PreconditionViolated
{
public:
    using PreconditionViolated::PreconditionViolated;
};

class NoAdjacentPage : public PreconditionViolated
{
public:
    using PreconditionViolated::PreconditionViolated;
};

class PageWithNonpositiveChibar : public PreconditionViolated
{
public:
    using PreconditionViolated::PreconditionViolated;
};

class NotASubcomplex : public PreconditionViolated
{
public:
    using PreconditionViolated::PreconditionViolated;
};

class UnsatisfiableParams : public PreconditionViolated
{
public:
    using PreconditionViolated::PreconditionViolated;
};

/// A page, binding or annulus id that does not exist in the book.
class UnknownId : public InputError
{
public:
    UnknownId(std::string kind, std::string id)
        : InputError("unknown " + kind + " id '" + id + "'"),
          kind_(std::move(kind)), id_(std::move(id))
    {
    }

    const std::string& kind() const noexcept { return kind_; }
    const std::string& id() const noexcept { return id_; }

private:
    std::string kind_;
    std::string id_;
};

class InvalidBook : public InputError
{
public:
    using InputError::InputError;
};

/// Document text could not be parsed; line is 1-based.
class SyntaxError : public InputError
{
public:
    SyntaxError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace boib

#endif // BOIB_ERROR_HPP
