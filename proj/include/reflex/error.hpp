#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reflex {

// Base class for every error raised by the library. Unknown verdicts are
// values, not errors; exceptions signal misuse or malformed input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class DuplicateIndex : public Error {
 public:
  using Error::Error;
};

class OutOfGenerators : public Error {
 public:
  using Error::Error;
};

class IndeterminatePresent : public Error {
 public:
  using Error::Error;
};

class ForeignElement : public Error {
 public:
  using Error::Error;
};

class UnmappedElement : public Error {
 public:
  using Error::Error;
};

class UnassignedIndeterminate : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

class UnknownModel : public Error {
 public:
  using Error::Error;
};

class InvalidNode : public Error {
 public:
  InvalidNode(std::string path, std::string reason)
      : Error("invalid node at " + path + ": " + reason),
        path_(std::move(path)),
        reason_(std::move(reason)) {}
  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

}  // namespace reflex
