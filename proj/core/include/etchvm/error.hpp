#pragma once

#include <stdexcept>
#include <string>

namespace etchvm {

enum class ErrorCode {
  // ingest
  missing_file,
  missing_column,
  non_numeric_cell,
  non_monotone_time,
  malformed_row,
  segment_overlap,
  cycle_index_gap,
  invalid_range,
  empty_segmentation,
  duplicate_image,
  non_finite_value,
  index_out_of_range,
  // featurize
  invalid_config,
  insufficient_samples,
  insufficient_cycles,
  missing_step,
  invalid_step_kind,
  // dataset
  missing_metrology,
  missing_target,
  empty_dataset,
  dimension_mismatch,
  singular_covariance,
  unknown_wafer,
  // model
  divergence,
  malformed_model,
  model_dim_mismatch,
  // evaluate
  empty_input,
  too_few_wafers,
  empty_grid,
  invalid_budget,
  leakage,
  // synth
  infeasible_config,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace etchvm
