#pragma once

#include <stdexcept>
#include <string>

namespace rpgauss {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Series too short, constant, or otherwise unusable for a test statistic.
class DegenerateSeriesError : public std::runtime_error {
 public:
  explicit DegenerateSeriesError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine produced a value that its contract rules out.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rpgauss
