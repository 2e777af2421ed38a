#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "octder/known.hpp"

namespace octder {

struct SuiteOptions {
  Field field = Field::prime(101);
  std::vector<OctonionType> types = {OctonionType::TypeI};
  /// Also run every row with algebra dimension <= rational_dim_limit over Q.
  bool include_q = false;
  std::size_t rational_dim_limit = 52;
};

struct SuiteRow {
  std::string key;
  nlohmann::json report;
  bool passed = false;
  double seconds = 0.0;
};

struct SuiteResult {
  std::vector<SuiteRow> rows;  // sorted by key

  bool all_passed() const;
  nlohmann::json to_json(bool with_timing = false) const;
  std::string to_text() const;
  std::string to_csv() const;
};

/// h_1..h_5, a_1..a_4 and the three M_2 products over one field and octonion
/// type. h_2/h_3 are dropped in characteristic three; rows above
/// max_algebra_dim are dropped.
std::vector<MatrixSpaceSpec> suite_specs(const Field& field, OctonionType type,
                                         std::size_t max_algebra_dim);

/// der(O), nucleus(O) and the Lie checks on der(O) as one row.
SuiteRow octonion_row(const Field& field, OctonionType type);
/// verify_theorem on one space; h_3 also carries the Lie checks on der(h_3).
SuiteRow space_row(const MatrixSpaceSpec& spec);

SuiteResult verify_suite(const SuiteOptions& options);

}  // namespace octder
