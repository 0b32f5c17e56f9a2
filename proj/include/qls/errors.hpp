#pragma once

#include <stdexcept>

namespace qls {

/// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments, malformed inputs, broken preconditions.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A pivot or eigenvalue is numerically zero.
class SingularMatrixError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A rotation constant outside the arcsin domain.
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Instance outside the supported class (e.g. non-representable eigenvalues).
class UnsupportedInstanceError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Requested size exceeds what the operation supports.
class ResourceError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Postselecting an outcome whose probability is numerically zero.
class ImpossibleOutcomeError : public Error {
public:
    using Error::Error;
};

/// A register that was assumed to be a product factor is entangled.
class NotProductStateError : public Error {
public:
    using Error::Error;
};

}  // namespace qls
