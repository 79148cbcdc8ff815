#pragma once

#include <stdexcept>
#include <string>

namespace linquo {

enum class errc {
  invalid_input,
  dimension_mismatch,
  out_of_budget,
  unsupported,
  not_in_ideal,
  invariant_violation,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

inline void require(bool condition, errc code, const std::string& message) {
  if (!condition) fail(code, message);
}

} // namespace linquo
