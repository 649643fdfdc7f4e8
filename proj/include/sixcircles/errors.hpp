#pragma once

#include <stdexcept>
#include <string>

namespace sixcircles {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateTriangle : public GeometryError {
 public:
  DegenerateTriangle() : GeometryError("degenerate triangle (zero area)") {}
};

class ParallelLines : public GeometryError {
 public:
  ParallelLines() : GeometryError("lines are parallel") {}
};

class CenterNotInterior : public GeometryError {
 public:
  explicit CenterNotInterior(const std::string& center)
      : GeometryError(center + " is not strictly inside the triangle") {}
};

class InvalidSides : public GeometryError {
 public:
  InvalidSides() : GeometryError("side lengths violate the strict triangle inequality") {}
};

class ConstraintViolated : public GeometryError {
 public:
  explicit ConstraintViolated(const std::string& constraint)
      : GeometryError("triangle constraint violated: " + constraint) {}
};

class ConstructionFailed : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class PrecisionUnsupported : public std::invalid_argument {
 public:
  explicit PrecisionUnsupported(int w)
      : std::invalid_argument("unsupported mantissa width " + std::to_string(w) +
                              " (supported: 53, 113, 150, 300)") {}
};

/// Sampler or scan specification that cannot be satisfied.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoPermutationFound : public std::runtime_error {
 public:
  explicit NoPermutationFound(const std::string& id)
      : std::runtime_error("no index relabeling satisfies " + id) {}
};

}  // namespace sixcircles
