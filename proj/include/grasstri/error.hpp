#pragma once

#include <stdexcept>
#include <string>

namespace grasstri {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Gram-Schmidt met a residual below tolerance; the caller should resample.
class LinearDependence : public Error {
public:
    using Error::Error;
};

class NotUnit : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class InvalidProportions : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class EmptyCloud : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class CountTooLarge : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class TooFewLandmarks : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A simplex's facet is absent from the filtration (or appears after it).
class MissingFace : public Error {
public:
    using Error::Error;
};

/// The simplex count exceeded the configured cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace grasstri
