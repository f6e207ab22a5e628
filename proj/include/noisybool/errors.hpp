#pragma once

#include <stdexcept>
#include <string>

namespace noisybool {

// Machine-parsable error codes. The CLI prints them as "error:<name>: <message>".
enum class errc {
  duplicate_element,
  element_out_of_range,
  dimension_too_large,
  size_out_of_range,
  coordinate_out_of_range,
  empty_zero_set,
  length_mismatch,
  probability_out_of_range,
  codeword_out_of_range,
  step_out_of_domain,
  degenerate_size,
  spectrum_sum_mismatch,
  index_order_violation,
  domain_violation,
  overflow,
  parameter_too_large,
  instance_too_large,
  grid_too_coarse,
  invalid_grid,
  invalid_argument,
  parse_error,
  io_failure,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace noisybool
