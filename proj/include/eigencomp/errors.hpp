#pragma once

#include <stdexcept>
#include <string>

namespace eigencomp {

/// Malformed or out-of-domain arguments (duplicate entries, bad text, illegal marks).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force computation was asked to run beyond its configured size limit.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A pattern census matched none of the known reference sequences.
class ClassificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace eigencomp
