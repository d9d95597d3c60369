#include "localelab/error.hpp"

namespace localelab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_a_partial_order: return "NotAPartialOrder";
    case Errc::not_a_lattice: return "NotALattice";
    case Errc::not_distributive: return "NotDistributive";
    case Errc::cycle_in_covers: return "CycleInCovers";
    case Errc::size_cap_exceeded: return "SizeCapExceeded";
    case Errc::mixed_frames: return "MixedFrames";
    case Errc::not_a_sublocale: return "NotASublocale";
    case Errc::not_a_sublocale_of: return "NotASublocaleOf";
    case Errc::not_closed: return "NotClosed";
    case Errc::not_dense: return "NotDense";
    case Errc::not_contained: return "NotContained";
    case Errc::not_a_frame_hom: return "NotAFrameHom";
    case Errc::not_a_topology: return "NotATopology";
    case Errc::not_t0: return "NotT0";
    case Errc::unknown_check: return "UnknownCheck";
    case Errc::bad_input: return "BadInput";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace localelab
