#pragma once
#include <stdexcept>
#include <string>

namespace wildtorus {

enum class Errc {
  window_too_small,
  radius_too_small,
  empty_region,
  not_unimodular,
  same_point_on_torus,
  certificate_failure,
  no_channel,
  clearance_exhausted,
  not_simply_connected,
  solver_failure,
  outside_disk,
  point_location_failure,
  no_far_points,
  empty_input,
  bad_config,
  io_error,
  bad_argument,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace wildtorus
