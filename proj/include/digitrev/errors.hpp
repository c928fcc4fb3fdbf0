#pragma once

#include <stdexcept>
#include <string>

namespace digitrev {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A length is not an exact power of the requested radix.
class NotAPowerOfRadix : public Error {
public:
    using Error::Error;
};

class RadixTooSmall : public Error {
public:
    using Error::Error;
};

/// A length, index or offset does not fit the native index type.
class IndexOverflow : public Error {
public:
    using Error::Error;
};

/// A caller-side precondition that is not covered by a more specific error.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class EmptySignal : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class ConfigInvalid : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace digitrev
