#pragma once

#include <stdexcept>
#include <string>

namespace cmser {

// Shape or dimension disagreement between operands.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed file container (bad magic, corrupt layout).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Container version not supported by this build.
struct VersionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File ends before the declared payload does.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad labels, counts, or other value-level input problems.
struct DataError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Training aborted (non-finite loss and similar).
struct TrainingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cmser
