#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hg {

/// One failed instance of a checked property. `tag` names the property
/// (an axiom number such as "iii", or a checker-specific label) and
/// `witness` holds the indices that exhibit the failure.
struct Violation {
  std::string tag;
  std::vector<std::size_t> witness;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Verdict of a verifier. Violations are kept in the order they were found;
/// every verifier scans its quantifiers lexicographically, so the first entry
/// per tag is the lexicographically minimal witness.
struct CheckReport {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return passed(); }

  void fail(std::string tag, std::vector<std::size_t> witness,
            std::string detail = {}) {
    violations.push_back({std::move(tag), std::move(witness), std::move(detail)});
  }

  void merge(const CheckReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }

  const Violation* first() const noexcept {
    return violations.empty() ? nullptr : &violations.front();
  }

  std::string summary() const {
    if (passed()) return "pass";
    std::ostringstream os;
    const auto& v = violations.front();
    os << "fail [" << v.tag << "] (";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      os << (i ? "," : "") << v.witness[i];
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
    if (violations.size() > 1)
      os << " and " << violations.size() - 1 << " more";
    return os.str();
  }
};

}  // namespace hg
