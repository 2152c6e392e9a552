#pragma once

#include <stdexcept>
#include <string>

namespace gft {

struct DivisionByNonUnit : std::runtime_error {
  explicit DivisionByNonUnit(const std::string& what) : std::runtime_error(what) {}
};

struct NotUnit : std::runtime_error {
  explicit NotUnit(const std::string& what) : std::runtime_error(what) {}
};

struct OutsideDisk : std::runtime_error {
  explicit OutsideDisk(const std::string& what) : std::runtime_error(what) {}
};

struct BadParameter : std::runtime_error {
  explicit BadParameter(const std::string& what) : std::runtime_error(what) {}
};

struct CriticalPoint : std::runtime_error {
  explicit CriticalPoint(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroOfG : std::runtime_error {
  explicit ZeroOfG(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureNoConverge : std::runtime_error {
  QuadratureNoConverge(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error(achieved) {}
  double achieved_error;
};

struct NoPositiveRoot : std::runtime_error {
  explicit NoPositiveRoot(const std::string& what) : std::runtime_error(what) {}
};

struct EvaluationFailure : std::runtime_error {
  EvaluationFailure(const std::string& what, double theta)
      : std::runtime_error(what), theta(theta) {}
  double theta;
};

}  // namespace gft
