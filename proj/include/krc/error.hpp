#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace krc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NegativeEntry : public Error {
 public:
  using Error::Error;
};

/// Raised when some monotone staircase through the grid sums past the level.
/// The offending staircase is reported as (p, q) cells from (1, r) to (r, n).
class PathSumExceeded : public Error {
 public:
  PathSumExceeded(const std::string& what, std::vector<std::pair<int, int>> witness, int sum)
      : Error(what), witness_(std::move(witness)), sum_(sum) {}

  const std::vector<std::pair<int, int>>& witness() const noexcept { return witness_; }
  int sum() const noexcept { return sum_; }

 private:
  std::vector<std::pair<int, int>> witness_;
  int sum_;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotHighestWeight : public Error {
 public:
  using Error::Error;
};

class OracleFailure : public Error {
 public:
  using Error::Error;
};

class InconsistentRecursion : public Error {
 public:
  using Error::Error;
};

class LevelMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace krc
