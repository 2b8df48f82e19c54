#pragma once

#include <stdexcept>
#include <string>

namespace virmod {

// Invalid input: non-coprime models, out-of-range labels, mismatched
// conductors, incongruent series offsets.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An internal identity that must hold for any correct convention failed
// (orbit invariance of S, integrality of a catalog row, Verlinde integrality).
class ConventionError : public std::logic_error {
 public:
  explicit ConventionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace virmod
