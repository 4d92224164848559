#ifndef CFSENSE_ERRORS_HPP
#define CFSENSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cfsense {

/// Invalid scene/solver configuration (bad field values, infeasible budgets).
class ConfigurationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Geometry for which a closed form is undefined (zero range, axis-aligned AP, ...).
class SingularGeometryError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Fisher information too ill-conditioned to invert.
class SingularFimError : public std::runtime_error {
  public:
    SingularFimError(const std::string& what, double condition_number)
        : std::runtime_error(what), condition_number_(condition_number) {}

    double condition_number() const { return condition_number_; }

  private:
    double condition_number_;
};

}  // namespace cfsense

#endif
