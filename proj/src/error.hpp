#ifndef PCHAIN_ERROR_HPP
#define PCHAIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pchain {

enum class errc {
  no_identity,
  not_closed,
  not_associative,
  no_inverse,
  cap_exceeded,
  degree_mismatch,
  unknown_spec,
  parameter_out_of_range,
  not_prime,
  not_contained,
  not_normal,
  not_a_subgroup_of_quotient,
  not_p_power,
  next_power_does_not_divide,
  base_order_mismatch,
  chain_not_supported,
  prime_does_not_divide_order,
  order_does_not_divide,
  parse_error,
  io_error,
  invalid_argument,
};

/// Stable identifier used in CLI diagnostics, e.g. "ChainNotSupported".
const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace pchain

#endif
