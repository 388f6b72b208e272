#pragma once

#include <stdexcept>
#include <string>

namespace dctx {

/// Input file exists but its structure is wrong (missing column, bad magic).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input content violates a documented invariant (duplicate timestamps, ...).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Trajectory too short to process after cleaning.
struct DegenerateTrajectoryError : DataError {
  using DataError::DataError;
};

/// Bad configuration value (non-positive step, invalid grid, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Model file is not in the expected binary format.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Model file was written by a newer schema than this build supports.
struct VersionError : FormatError {
  using FormatError::FormatError;
};

/// Model construction failed (e.g. empty corpus).
struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested segmentation cannot satisfy its length constraints.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A driving state has no transitions at any coarsening level.
struct UnknownStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dctx
