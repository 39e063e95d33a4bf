#ifndef SESAM_ERROR_HPP
#define SESAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sesam {

enum class errc {
  none = 0,
  config,
  io,
  parse,
  sectionize_failure,
  empty_input,
  unknown_word,
  missing_label,
  invalid_count,
  all_zero,
  empty_profile,
  no_match,
  insufficient_training,
  dimension_mismatch,
  capacity_violation,
  degenerate_data,
  infeasible_capacities,
  too_large,
  coverage_mismatch,
  no_dev_data,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

// Process exit buckets: 0 ok, 2 config error, 3 data error, 4 infeasible.
inline int status_of(errc code) noexcept {
  switch (code) {
    case errc::none:
      return 0;
    case errc::config:
    case errc::no_dev_data:
    case errc::too_large:
      return 2;
    case errc::infeasible_capacities:
    case errc::capacity_violation:
      return 4;
    default:
      return 3;
  }
}

}  // namespace sesam

#endif
