#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbsql {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Input file is syntactically readable but violates the expected format.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Schema integrity violation (dangling key index, bad reference, ...).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Identifier could not be resolved against a schema.
class ResolutionError : public Error {
public:
    explicit ResolutionError(const std::string& what, std::string identifier = {})
        : Error(what), identifier(std::move(identifier)) {}
    std::string identifier;
};

/// Unqualified identifier matched more than one candidate column.
class AmbiguityError : public ResolutionError {
public:
    using ResolutionError::ResolutionError;
};

/// Foreign-key chain loops back on itself.
class CycleError : public SchemaError {
public:
    using SchemaError::SchemaError;
};

/// Lexing failed; offset is the byte position of the offending character.
class LexError : public Error {
public:
    LexError(const std::string& what, std::size_t offset) : Error(what), offset(offset) {}
    std::size_t offset;
};

/// Invalid pipeline or CLI configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// SQLite-level failure.
class DbError : public Error {
public:
    using Error::Error;
};

/// Query exceeded its execution deadline.
class DbTimeoutError : public DbError {
public:
    using DbError::DbError;
};

} // namespace nbsql
