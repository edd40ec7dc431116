#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pielift {

/// One violated invariant. `kind` is a short stable tag, `message` names the
/// offending ids.
struct Diagnostic {
  std::string kind;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline void add(Diagnostics& d, std::string kind, std::string message) {
  d.push_back(Diagnostic{std::move(kind), std::move(message)});
}

std::string to_string(const Diagnostics& d);

/// Thrown when a value is built from data that fails validation.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Diagnostics d);
  const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

 private:
  Diagnostics diagnostics_;
};

}  // namespace pielift
