#ifndef DUALCX_ERRORS_HPP
#define DUALCX_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dualcx {

/// Domain error with a stable machine-readable name (e.g. "NotFree",
/// "FacetMismatch").  The CLI surfaces `name()` verbatim, so names are part
/// of the external interface and must not be reworded casually.
class Error : public std::runtime_error {
 public:
  Error(std::string name, std::string message,
        std::optional<std::size_t> step = std::nullopt)
      : std::runtime_error(step ? name + "[" + std::to_string(*step) + "]: " + message
                                : name + ": " + message),
        name_(std::move(name)),
        step_(step) {}

  const std::string& name() const { return name_; }

  /// Set for NotFreeAtStep: zero-based index of the failing pair.
  std::optional<std::size_t> step() const { return step_; }

 private:
  std::string name_;
  std::optional<std::size_t> step_;
};

[[noreturn]] inline void fail(std::string name, std::string message) {
  throw Error(std::move(name), std::move(message));
}

[[noreturn]] inline void fail_at_step(std::size_t step, std::string message) {
  throw Error("NotFreeAtStep", std::move(message), step);
}

}  // namespace dualcx

#endif
