#pragma once

#include <string>
#include <vector>

namespace boundgen {

struct InequalityCheck {
  std::string name;
  std::string instance;
  std::string lhs;
  std::string relation;  // "<=", ">=", "==", ">"
  std::string rhs;
  bool holds = false;
};

struct InequalityReport {
  std::string suite;
  std::vector<InequalityCheck> checks;
  bool all_hold() const;
};

// "small": quotient, extension, product, splitting, ball-image, Lipschitz,
// ball-multiplicativity, norm axioms and class-size checks on groups of order <= 168.
InequalityReport check_inequalities(const std::string& suite = "small", int threads = 1);

}  // namespace boundgen
