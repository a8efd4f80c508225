#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tsclust {

/// Base class for all tsclust errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two series (or a series and a prototype) have different lengths.
class LengthMismatchError : public Error {
public:
  using Error::Error;
};

/// A series has zero population variance and cannot be normalized or
/// compared under Pearson distance.
class ConstantSeriesError : public Error {
public:
  explicit ConstantSeriesError(const std::string& msg,
                               std::vector<std::size_t> rows = {})
      : Error(msg), rows_(std::move(rows)) {}

  /// Offending row indices (empty when raised for a single free series).
  const std::vector<std::size_t>& rows() const noexcept { return rows_; }

private:
  std::vector<std::size_t> rows_;
};

/// Every row of a dataset was dropped or none were supplied.
class EmptyDatasetError : public Error {
public:
  using Error::Error;
};

/// A row claimed to be normalized does not satisfy the convention it declares.
class NotNormalizedError : public Error {
public:
  using Error::Error;
};

/// An operation received a dataset under the wrong normalization convention.
class ConventionMismatchError : public Error {
public:
  using Error::Error;
};

/// Requested more clusters than data objects.
class KTooLargeError : public Error {
public:
  using Error::Error;
};

/// Explicit initial prototypes do not match the requested k or series length.
class ExplicitShapeMismatchError : public Error {
public:
  using Error::Error;
};

/// A cluster's member sum cancels to (numerically) zero and could not be
/// repaired.
class ZeroNormPrototypeError : public Error {
public:
  using Error::Error;
};

/// Two membership vectors cover a different number of objects.
class SizeMismatchError : public Error {
public:
  using Error::Error;
};

/// A summary was requested over an empty value list.
class EmptyListError : public Error {
public:
  using Error::Error;
};

/// Text input could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line)
      : Error(msg), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_ = 0;
};

/// Both prototypes correlate equally with the reference template, so the
/// "increasing" cluster cannot be identified.
class AmbiguousClusterIdentityError : public Error {
public:
  using Error::Error;
};

/// Filesystem failure, reported with path context.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace tsclust
