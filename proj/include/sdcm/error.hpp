#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdcm {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroSeries : public Error {
 public:
  DivisionByZeroSeries() : Error("division by the zero series") {}
};

class NonNegativityViolation : public Error {
 public:
  using Error::Error;
};

/// Raised when a coefficient requested as an integer is a proper fraction.
class NonIntegralCoefficient : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
      : Error(make_message(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string make_message(std::size_t offset, const std::vector<std::string>& expected,
                                  const std::string& found) {
    std::string msg = "parse error at offset " + std::to_string(offset) + ": found " + found;
    if (!expected.empty()) {
      msg += ", expected one of {";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += ", ";
        msg += expected[i];
      }
      msg += "}";
    }
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Structural problems in a model document (unknown ids, duplicates, bad JSON shape).
class ModelError : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  NotComparable(const std::string& small, const std::string& large)
      : Error("classes are not comparable: " + small + " is not below " + large) {}
};

class InvalidRoute : public Error {
 public:
  using Error::Error;
};

class AmbiguousComparison : public Error {
 public:
  using Error::Error;
};

class NoDualizing : public Error {
 public:
  using Error::Error;
};

class NotClosedUnderDuality : public Error {
 public:
  explicit NotClosedUnderDuality(std::string orphan)
      : Error("model is not closed under duality: no dual for class " + orphan), orphan_(std::move(orphan)) {}
  const std::string& orphan() const noexcept { return orphan_; }

 private:
  std::string orphan_;
};

class MapNotOrderPreserving : public Error {
 public:
  using Error::Error;
};

}  // namespace sdcm
