#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cteleport/state.hpp"

namespace cteleport {

// Malformed or non-normalized state data. what() is prefixed with
// "<source>:<line>: " whenever a line can be named.
class StateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stored data may be off-norm by rounding, not by more.
inline constexpr double kIngestNormTolerance = 1e-6;

// Two accepted forms, told apart by the first non-blank character:
//
//   JSON:  {"num_qubits": n, "amplitudes": [[re, im], ...]}  (2^n entries)
//   text:  one "bitstring re im" line per nonzero amplitude; blank lines and
//          lines starting with '#' are ignored.
PureState parse_state(std::string_view text, std::string_view source = "<input>");
PureState read_state_file(const std::filesystem::path& path);

// A catalog name if it is one, otherwise a file path.
PureState load_state(std::string_view name_or_path);

// Throws StateFormatError when |sum |a|^2 - 1| exceeds kIngestNormTolerance.
void require_normalized(std::span<const Amplitude> amplitudes, std::string_view what);

}  // namespace cteleport
