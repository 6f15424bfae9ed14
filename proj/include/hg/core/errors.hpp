#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "hg/core/check_report.hpp"

namespace hg {

// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad index, empty set where a nonempty one is required, size mismatch.
class domain_error : public error {
 public:
  using error::error;
};

// Structure fails an axiom or a construction precondition. Carries the
// report whose first violation is the minimal witness.
class validation_error : public error {
 public:
  validation_error(std::string what, CheckReport report)
      : error(std::move(what)), report_(std::move(report)) {}

  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

// Input lies outside the hypotheses under which a construction is defined
// (e.g. cokernel of a non-full morphism).
class unsupported_error : public error {
 public:
  using error::error;
};

}  // namespace hg
