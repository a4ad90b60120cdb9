#pragma once

#include <stdexcept>
#include <string>

namespace susy {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation point outside the open domain of a family.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Coupling constants missing, misnamed or outside their validity range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Level index beyond the number of bound states.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Coupling map precondition violated (no real branch continuous from s=0).
class BranchError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class SingularJacobianError : public Error {
public:
    using Error::Error;
};

/// Non-finite value produced while sampling a potential.
class EvaluationError : public Error {
public:
    using Error::Error;
};

class IllConditionedError : public Error {
public:
    using Error::Error;
};

/// Rational function evaluated too close to a denominator root.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A computed quantity failed its algebraic consistency check.
class DefectError : public Error {
public:
    using Error::Error;
};

}  // namespace susy
