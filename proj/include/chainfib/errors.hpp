#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace chainfib {

enum class errc {
  outside_cone,
  not_primitive,
  parity,
  negative_genus,
  domain,
  excluded_residue,
  overflow,
  non_convergence,
  non_hyperbolic_surface,
  invalid_input,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
  error(errc code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

}  // namespace chainfib
