#pragma once

#include <stdexcept>
#include <string>

namespace calgrid {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input (dates, numbers, locale files). Messages carry the
// offending row or line number where one exists.
class ParseError : public Error {
public:
    using Error::Error;
};

// A required column is absent or an input table is unusable.
class SchemaError : public Error {
public:
    using Error::Error;
};

// More months than the requested nrow x ncol grid can hold.
class CapacityError : public Error {
public:
    using Error::Error;
};

// A scaling group contains no usable values.
class EmptyDomainError : public Error {
public:
    using Error::Error;
};

// Unknown locale id or unreadable locale file.
class LocaleError : public Error {
public:
    using Error::Error;
};

// Filesystem failures on read or write.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace calgrid
