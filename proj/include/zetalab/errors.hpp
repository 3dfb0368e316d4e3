#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

/// Base class of every error raised by the library.
class ZetaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented evaluation domain.
class DomainError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// Evaluation point closer to a zero than the configured guard distance.
class NearZeroError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// Continuous-argument tracking could not certify the branch of log zeta.
class BranchTrackError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// The zero count of a scanned range could not be certified.
class CertificationError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// A query needs zeros outside the range in which the catalog is complete.
class UncertifiedRangeError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// Zeros supplied out of order or with conflicting duplicate ordinates.
class OrderingError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// Malformed zero cache file or parameter string.
class FormatError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// A hypothesis of a theorem or lemma does not hold for the given inputs.
class HypothesisError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// A function spec fails its required monotonicity on the test grid.
class MonotonicityError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

}  // namespace zetalab
