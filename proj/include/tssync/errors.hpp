#ifndef TSSYNC_ERRORS_HPP
#define TSSYNC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tssync {

// Every failure the library can raise, so callers (and tests) can match on
// the kind rather than on message text.
enum class Errc {
  not_in_time_scale,
  unbounded,
  empty_horizon,
  step_too_coarse,
  nodes_not_on_grid,
  not_regressive,
  nonpositive_step,
  dimension_mismatch,
  out_of_history_range,
  history_underflow,
  delay_not_on_grid,
  delay_not_resolvable,
  delay_alignment,
  singular_weight,
  precondition,
  mismatched_provenance,
  config_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tssync

#endif
