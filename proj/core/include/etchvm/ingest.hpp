#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace etchvm {

// One run's sensor channels, column-major. Rows are aligned across columns
// and ordered by the (monotonically non-decreasing) time column.
struct SensorTrace {
  std::string wafer_id;
  std::vector<double> time;
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> columns;  // columns[c][row]

  std::size_t row_count() const { return time.size(); }
  std::size_t column_count() const { return column_names.size(); }
  int column_index(const std::string& name) const;
};

enum class StepKind { deposition, activation, other };

StepKind parse_step_kind(const std::string& text);
const char* step_kind_name(StepKind kind);

struct Segment {
  std::string step_id;
  StepKind step_kind = StepKind::other;
  std::size_t cycle_index = 0;
  std::size_t row_start = 0;
  std::size_t row_end = 0;  // exclusive
};

// Validated cycle boundaries: segments non-overlapping and ordered by
// row_start, cycle indices per step forming 0..q-1 with no gaps.
struct SegmentationMap {
  std::vector<Segment> entries;

  std::size_t max_row() const;
  // Cycles of one step ordered by cycle_index; empty when the step is absent.
  std::vector<const Segment*> cycles_of(const std::string& step_id) const;
  std::vector<std::string> step_ids() const;
};

struct MetrologyRecord {
  std::string wafer_id;
  std::string image_id;
  std::map<std::string, double> targets;  // name -> value in nm
};

struct WaferRun {
  std::string wafer_id;
  std::string group_label;
  SensorTrace trace;
  SegmentationMap segmentation;
};

// Parses a trace CSV (header `time,<sensor1>,...`) restricted to the
// requested columns, in request order.
SensorTrace parse_trace(const std::filesystem::path& path,
                        const std::vector<std::string>& variable_names);

// Parses `step_id,step_kind,cycle_index,row_start,row_end` rows and
// validates the segmentation invariants.
SegmentationMap parse_segmentation(const std::filesystem::path& path);

// Validates an in-memory map (same checks as parse_segmentation).
SegmentationMap validate_segmentation(std::vector<Segment> entries,
                                      const std::string& origin);

std::string render_segmentation(const SegmentationMap& map);
void write_segmentation(const std::filesystem::path& path, const SegmentationMap& map);

// Parses `wafer_id,image_id,<target1>,...`; one record per row.
std::vector<MetrologyRecord> parse_metrology(const std::filesystem::path& path);

WaferRun assemble_run(SensorTrace trace, SegmentationMap seg,
                      const std::string& wafer_id, const std::string& group_label);

}  // namespace etchvm
