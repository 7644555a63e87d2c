#pragma once

#include <stdexcept>
#include <string>

namespace convodna {

// Error taxonomy mirrored by the CLI exit codes: usage errors are the
// argument parser's business (exit 2); these two cover everything below it.

// Malformed external input: bad characters, bad file syntax, shape mismatches.
// CLI exit code 3.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally valid input outside an operation's mathematical domain:
// parameter ranges, unsupported rates, guard limits. CLI exit code 4.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace convodna
