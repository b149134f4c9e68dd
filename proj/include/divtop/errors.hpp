#pragma once

#include <stdexcept>
#include <string>

namespace divtop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An enumeration-backed operation was asked for more than its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotInSharp : public Error {
 public:
  using Error::Error;
};

class InvalidPair : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class UnknownTheorem : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& token, const std::string& why)
      : Error("bad token '" + token + "': " + why), token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

}  // namespace divtop
