#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hullpeel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coincident points or an exactly collinear triple reached a strict predicate.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class TooFewPoints : public Error {
 public:
  explicit TooFewPoints(std::size_t have, std::size_t need = 3)
      : Error("too few points: have " + std::to_string(have) + ", need " + std::to_string(need)) {}
};

class PointInsideHull : public Error {
 public:
  PointInsideHull() : Error("query point is not strictly outside the hull") {}
};

class UnknownPoint : public Error {
 public:
  explicit UnknownPoint(std::size_t id) : Error("unknown or dead point id " + std::to_string(id)) {}
};

class CoordinateRange : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  InstanceTooLarge(double combinations, double limit)
      : Error("instance too large: C(n,k) = " + std::to_string(combinations) + " exceeds " +
              std::to_string(limit)),
        combinations_(combinations) {}
  double combinations() const { return combinations_; }

 private:
  double combinations_;
};

class EmptyQueue : public Error {
 public:
  EmptyQueue() : Error("peel requested but no hull vertex is queued") {}
};

// Internal consistency check failed inside the peeling engine.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hullpeel
