#pragma once

#include <stdexcept>
#include <string>

namespace localelab {

enum class Errc {
  not_a_partial_order,
  not_a_lattice,
  not_distributive,
  cycle_in_covers,
  size_cap_exceeded,
  mixed_frames,
  not_a_sublocale,
  not_a_sublocale_of,
  not_closed,
  not_dense,
  not_contained,
  not_a_frame_hom,
  not_a_topology,
  not_t0,
  unknown_check,
  bad_input,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg);
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

}  // namespace localelab
