#pragma once

#include <stdexcept>
#include <string>

namespace fahp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed arguments to an otherwise well-defined operation.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Input outside the mathematical domain of a function (e.g. non-positive ratio).
class DomainError : public Error {
public:
    using Error::Error;
};

class LookupError : public Error {
public:
    using Error::Error;
};

// Structural problems in a hierarchy, study document or CSV file.
class ValidationError : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    using Error::Error;
};

// A statistic that is undefined for the given data (e.g. zero variance).
class StatisticError : public Error {
public:
    using Error::Error;
};

class CompositionError : public Error {
public:
    using Error::Error;
};

} // namespace fahp
