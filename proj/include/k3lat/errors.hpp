#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace k3lat {

/// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, non-symmetric Gram, odd diagonal, det 0, shape mismatch.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but violates an operation's precondition.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured budget; never a silent truncation.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotPrimitive : public PreconditionFailed {
 public:
  NotPrimitive(const std::string& content)
      : PreconditionFailed("vector is not primitive (content " + content + ")"), content_(content) {}
  const std::string& content() const { return content_; }

 private:
  std::string content_;
};

/// A subgroup handed to the overlattice construction is not isotropic.
class NotIsotropic : public PreconditionFailed {
 public:
  NotIsotropic(std::string element, std::string q_value)
      : PreconditionFailed("subgroup is not isotropic: element " + element + " has q = " + q_value),
        element_(std::move(element)),
        q_value_(std::move(q_value)) {}
  const std::string& element() const { return element_; }
  const std::string& q_value() const { return q_value_; }

 private:
  std::string element_;
  std::string q_value_;
};

}  // namespace k3lat
