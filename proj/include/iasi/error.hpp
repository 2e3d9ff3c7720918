#pragma once

#include <stdexcept>
#include <string>

namespace iasi {

// Root of every error the library reports. Operational errors only; a
// labeling that fails a classification is a result, not an error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidLabelError : public Error {
public:
    using Error::Error;
};

// Raised instead of wrapping when a sum or a constructed value exceeds the
// element width.
class OverflowError : public Error {
public:
    using Error::Error;
};

class GraphError : public Error {
public:
    using Error::Error;
};

class LabelingError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace iasi
