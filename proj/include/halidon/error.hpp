#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halidon {

enum class Errc {
  invalid_argument,
  not_unit,
  not_halidon,
  even_modulus,
  mismatched_ring,
  not_idempotent_spectrum,
  too_large,
  reconstruction_mismatch,
  order_not_invertible,
  invalid_table,
  not_projection,
  not_invertible,
};

std::string_view to_string(Errc code) noexcept;

/// Domain error raised by every library operation. The code identifies the
/// failure class; what() carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace halidon
