#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace krank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotAGroup : public Error {
public:
  using Error::Error;
};

class OrderBound : public Error {
public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
public:
  using Error::Error;
};

class NotInjective : public Error {
public:
  using Error::Error;
};

/// rank K_{-1}(Z[H]) was requested for a group whose datum was never supplied.
class MissingKMinus1Datum : public Error {
public:
  explicit MissingKMinus1Datum(std::string group_label)
      : Error("missing rank K_{-1} datum for group '" + group_label +
              "'; supply it with a \"rank_minus1\" field"),
        group_(std::move(group_label)) {}

  const std::string& group() const noexcept { return group_; }

private:
  std::string group_;
};

class ChainComplexViolation : public Error {
public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
public:
  using Error::Error;
};

class ModelMismatch : public Error {
public:
  using Error::Error;
};

class RankOutOfBounds : public Error {
public:
  using Error::Error;
};

class SchemaError : public Error {
public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

class ParameterOutOfRange : public Error {
public:
  using Error::Error;
};

} // namespace krank
