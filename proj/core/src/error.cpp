#include "etchvm/error.hpp"

namespace etchvm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::missing_file: return "missing_file";
    case ErrorCode::missing_column: return "missing_column";
    case ErrorCode::non_numeric_cell: return "non_numeric_cell";
    case ErrorCode::non_monotone_time: return "non_monotone_time";
    case ErrorCode::malformed_row: return "malformed_row";
    case ErrorCode::segment_overlap: return "segment_overlap";
    case ErrorCode::cycle_index_gap: return "cycle_index_gap";
    case ErrorCode::invalid_range: return "invalid_range";
    case ErrorCode::empty_segmentation: return "empty_segmentation";
    case ErrorCode::duplicate_image: return "duplicate_image";
    case ErrorCode::non_finite_value: return "non_finite_value";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::invalid_config: return "invalid_config";
    case ErrorCode::insufficient_samples: return "insufficient_samples";
    case ErrorCode::insufficient_cycles: return "insufficient_cycles";
    case ErrorCode::missing_step: return "missing_step";
    case ErrorCode::invalid_step_kind: return "invalid_step_kind";
    case ErrorCode::missing_metrology: return "missing_metrology";
    case ErrorCode::missing_target: return "missing_target";
    case ErrorCode::empty_dataset: return "empty_dataset";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::singular_covariance: return "singular_covariance";
    case ErrorCode::unknown_wafer: return "unknown_wafer";
    case ErrorCode::divergence: return "divergence";
    case ErrorCode::malformed_model: return "malformed_model";
    case ErrorCode::model_dim_mismatch: return "model_dim_mismatch";
    case ErrorCode::empty_input: return "empty_input";
    case ErrorCode::too_few_wafers: return "too_few_wafers";
    case ErrorCode::empty_grid: return "empty_grid";
    case ErrorCode::invalid_budget: return "invalid_budget";
    case ErrorCode::leakage: return "leakage";
    case ErrorCode::infeasible_config: return "infeasible_config";
  }
  return "error";
}

}  // namespace etchvm
