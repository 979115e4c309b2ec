#pragma once

#include <stdexcept>
#include <string>

namespace satgc {

// Invalid run configuration or misuse of an API (bad flag values, fully
// masked softmax rows, backward on a non-scalar, ...). CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (parse failures, NaN cells,
// degenerate metric labels). CLI exit code 3.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric breakdown at runtime: divergence, non-finite gradients,
// unstabilizable generator graphs. CLI exit code 4.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatch between operands; message names both shapes.
struct ShapeError : ConfigError {
    using ConfigError::ConfigError;
};

}  // namespace satgc
