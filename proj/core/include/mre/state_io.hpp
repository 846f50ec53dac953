#ifndef MRE_STATE_IO_HPP
#define MRE_STATE_IO_HPP

#include <optional>
#include <string>

#include "mre/states.hpp"

namespace mre {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state read from disk: either {"pure": [[re,im] x 4]} or
/// {"matrix": 4x4 array of [re,im] pairs}. The density matrix is always
/// populated; `pure` is kept when the file supplied amplitudes.
struct StateFile {
  std::optional<PureState> pure;
  DensityMatrix rho;
};

/// Throws parse_error on malformed input and validation_error on states
/// that fail the density-matrix checks.
StateFile parse_state_json(const std::string& text);
StateFile load_state_file(const std::string& path);

}  // namespace mre

#endif
