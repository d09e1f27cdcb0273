#pragma once

#include <stdexcept>
#include <string>

namespace lexevo {

/// Base class for all lexevo errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data (bad JSON line, bad qrels row, invalid UTF-8, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Filesystem failures: missing paths, unreadable or unwritable files.
class IoError : public Error {
public:
    using Error::Error;
};

/// Violated preconditions and invalid configurations. The CLI maps these
/// to exit code 2; everything else exits 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Scoring requested against an index with zero documents.
class EmptyCorpusError : public ValidationError {
public:
    EmptyCorpusError() : ValidationError("cannot score against an empty corpus (N=0)") {}
};

} // namespace lexevo
