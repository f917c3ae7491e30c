#include "treespectra/error.hpp"

namespace treespectra {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::disconnected_input: return "DisconnectedInput";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::bad_label: return "BadLabel";
    case Errc::wrong_edge_count: return "WrongEdgeCount";
    case Errc::size_too_small: return "SizeTooSmall";
    case Errc::bad_prufer_seq: return "BadPruferSeq";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::no_internal_vertex: return "NoInternalVertex";
    case Errc::f_is_an_edge: return "FIsAnEdge";
    case Errc::distance_too_small: return "DistanceTooSmall";
    case Errc::no_non_edge_exists: return "NoNonEdgeExists";
    case Errc::bad_choice: return "BadChoice";
    case Errc::pair_not_found: return "PairNotFound";
    case Errc::not_square: return "NotSquare";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::singular: return "Singular";
    case Errc::singular_block: return "SingularBlock";
    case Errc::not_equitable: return "NotEquitable";
    case Errc::division_by_zero_poly: return "DivisionByZeroPoly";
    case Errc::inexact_division: return "InexactDivision";
    case Errc::bad_params: return "BadParams";
    case Errc::empty_window: return "EmptyWindow";
    case Errc::precondition_unmet: return "PreconditionUnmet";
    case Errc::out_of_validity_range: return "OutOfValidityRange";
    case Errc::range_error: return "RangeError";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::io_error: return "IOError";
    case Errc::bad_config: return "BadConfig";
  }
  return "UnknownError";
}

}  // namespace treespectra
