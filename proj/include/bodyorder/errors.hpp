#pragma once

#include <stdexcept>
#include <string>

namespace bodyorder {

/// Failure rooted in the geometric configuration of the input rather than in
/// malformed data (e.g. contacts for which a predicate is undefined).
class geometry_error : public std::runtime_error {
 public:
  explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

/// Two bodies touch without overlapping interiors, a boundary point of the
/// joint hull belongs to more than one body, or three bodies admit a common
/// supporting line. Predicates whose answers are undefined under such
/// contacts throw this instead of tie-breaking.
class tangency_error : public geometry_error {
 public:
  explicit tangency_error(const std::string& what) : geometry_error(what) {}
};

/// An exact enumeration would exceed its documented size bound.
class size_limit_error : public std::runtime_error {
 public:
  explicit size_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Rejection sampling ran out of attempts.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bodyorder
