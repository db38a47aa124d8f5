#pragma once
#include <stdexcept>
#include <string>

namespace trx {

enum class errc {
  bad_format,
  non_planar_rotation,
  disconnected,
  bad_outer_hint,
  bad_label_order,
  non_triangular_inner_face,
  not_quad_outer,
  separating_triangle,
  not_right_cycle,
  not_left_cycle,
  stuck,
  not_minimal,
  no_orientation,
  invalid_structure,
  invalid_tree,
  cap_exceeded,
};

const char* errc_name(errc c);

// All recoverable failures surface as trx::Error carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

} // namespace trx
