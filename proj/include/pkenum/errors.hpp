#pragma once

#include <stdexcept>
#include <string>

namespace pkenum {

// Base for every error this library raises. Each subclass maps to one CLI
// exit code (see cli.hpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Out-of-range arguments (k < 2, lambda_min < 1, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// Valid arguments outside a formula's proven scope, e.g. the lambda = 4
// inclusion-exclusion with k <= 3. The message names the oracle alternative.
class UnsupportedParameter : public Error {
public:
    using Error::Error;
};

// Series/function evaluated outside its domain (zero constant term on
// division, negative radicand, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    using Error::Error;
};

class PrecisionError : public Error {
public:
    using Error::Error;
};

class CacheError : public Error {
public:
    using Error::Error;
};

}  // namespace pkenum
