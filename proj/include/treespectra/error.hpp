#pragma once

#include <stdexcept>
#include <string>

namespace treespectra {

/// Error kinds surfaced by the library. Names follow the operation contracts.
enum class Errc {
  // tree construction / generators
  disconnected_input,
  cycle_detected,
  bad_label,
  wrong_edge_count,
  size_too_small,
  bad_prufer_seq,
  cap_exceeded,
  no_internal_vertex,
  // bases
  f_is_an_edge,
  distance_too_small,
  no_non_edge_exists,
  bad_choice,
  pair_not_found,
  // linear algebra
  not_square,
  not_symmetric,
  singular,
  singular_block,
  not_equitable,
  // polynomials
  division_by_zero_poly,
  inexact_division,
  // analysis
  bad_params,
  empty_window,
  precondition_unmet,
  out_of_validity_range,
  // scans & embedding
  range_error,
  length_mismatch,
  // cli / io
  io_error,
  bad_config,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace treespectra
