#pragma once

#include <stdexcept>
#include <string>

namespace supertube {

// Base of every error the toolkit raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

// Rational reconstruction found no fraction within the degree bounds.
class NotRationalError : public Error {
public:
    using Error::Error;
};

// An inverse, Berezinian or density does not exist at the given input.
class SingularError : public Error {
public:
    using Error::Error;
};

// An identity that must hold exactly (or to tolerance) was violated.
class IdentityViolation : public Error {
public:
    using Error::Error;
};

// Work estimate exceeds the configured evaluation budget.
class BudgetError : public Error {
public:
    BudgetError(const std::string& what, unsigned long long required)
        : Error(what), required_(required) {}
    unsigned long long required() const { return required_; }

private:
    unsigned long long required_;
};

// Malformed input document.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace supertube
