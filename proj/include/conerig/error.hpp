#pragma once

#include <stdexcept>
#include <string>

namespace conerig {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class CurvatureMismatch : public Error {
public:
  CurvatureMismatch() : Error("curvature mismatch") {}
};

class NotSemisimple : public Error {
public:
  using Error::Error;
};

class Degenerate : public Error {
public:
  using Error::Error;
};

class GroupMembershipError : public Error {
public:
  GroupMembershipError(const std::string& what, double defect)
      : Error(what), defect_(defect) {}
  double defect() const { return defect_; }

private:
  double defect_;
};

class UnknownGenerator : public Error {
public:
  UnknownGenerator(char c, std::size_t pos)
      : Error(std::string("unknown generator '") + c + "' at position " + std::to_string(pos)),
        letter_(c), position_(pos) {}
  char letter() const { return letter_; }
  std::size_t position() const { return position_; }

private:
  char letter_;
  std::size_t position_;
};

class InvalidRepresentation : public Error {
public:
  InvalidRepresentation(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

// Raised when singular values sit too close to the rank threshold to certify an integer.
class IllConditioned : public Error {
public:
  IllConditioned(const std::string& what, double gap_ratio)
      : Error(what), gap_ratio_(gap_ratio) {}
  double gap_ratio() const { return gap_ratio_; }

private:
  double gap_ratio_;
};

class SchemaError : public Error {
public:
  SchemaError(const std::string& pointer, const std::string& what)
      : Error(pointer + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

private:
  std::string pointer_;
};

class SerializationError : public Error {
public:
  using Error::Error;
};

}  // namespace conerig
