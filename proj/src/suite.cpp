#include "octder/suite.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <limits>
#include <sstream>

namespace octder {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string field_token(const Field& f) {
  return f.is_rational() ? "q" : "mod" + std::to_string(f.modulus());
}

}  // namespace

std::vector<MatrixSpaceSpec> suite_specs(const Field& field, OctonionType type,
                                         std::size_t max_algebra_dim) {
  const bool char3 = !field.is_rational() && field.characteristic() == 3;
  std::vector<MatrixSpaceSpec> out;
  auto add = [&](SpaceKind kind, int n) {
    if (space_dimension(kind, n) <= max_algebra_dim) out.push_back({kind, n, type, field});
  };
  for (int n = 1; n <= 5; ++n) {
    if (char3 && (n == 2 || n == 3)) continue;
    add(SpaceKind::HermitianAnticommutator, n);
  }
  for (int n = 1; n <= 4; ++n) add(SpaceKind::AntihermitianCommutator, n);
  add(SpaceKind::FullStandard, 2);
  add(SpaceKind::FullCommutator, 2);
  add(SpaceKind::FullAnticommutator, 2);
  return out;
}

SuiteRow octonion_row(const Field& field, OctonionType type) {
  const auto start = std::chrono::steady_clock::now();
  const OctonionAlgebra o(field, type);
  const auto a = as_structure_algebra(o);
  const auto der = solve_derivations(a);
  const auto lie = lie_checks(der);
  const auto nuc = nucleus(a);

  SuiteRow row;
  row.key = std::string("O_") + (type == OctonionType::TypeI ? "1" : "2") + "_" + field_token(field);
  row.passed = der.dim() == 14 && lie.closed && lie.center_dim == 0 && lie.derived_dim == 14 &&
               nuc.dim() == 1;
  row.report = {{"algebra", "octonions"},
                {"oct_type", to_string(type)},
                {"field", field.to_string()},
                {"expected_dim", 14},
                {"computed_dim", der.dim()},
                {"lie", lie.to_json()},
                {"nucleus_dim", nuc.dim()},
                {"passed", row.passed}};
  row.seconds = seconds_since(start);
  return row;
}

SuiteRow space_row(const MatrixSpaceSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  DerivationSpace der;
  const auto report = verify_theorem(spec, &der);
  SuiteRow row;
  row.key = spec.key();
  row.report = report.to_json();
  row.passed = report.passed();
  if (spec.kind == SpaceKind::HermitianAnticommutator && spec.n == 3) {
    const auto lie = lie_checks(der);
    row.report["lie"] = lie.to_json();
    row.passed = row.passed && lie.closed && lie.center_dim == 0 && lie.derived_dim == der.dim();
    row.report["passed"] = row.passed;
  }
  row.seconds = seconds_since(start);
  return row;
}

SuiteResult verify_suite(const SuiteOptions& options) {
  std::vector<std::pair<Field, std::size_t>> runs = {
      {options.field, std::numeric_limits<std::size_t>::max()}};
  if (options.include_q && !options.field.is_rational()) {
    runs.emplace_back(Field::rationals(), options.rational_dim_limit);
  }
  if (options.field.is_rational()) runs.front().second = options.rational_dim_limit;

  SuiteResult result;
  for (const auto& [field, limit] : runs) {
    for (const auto type : options.types) {
      result.rows.push_back(octonion_row(field, type));
      for (const auto& spec : suite_specs(field, type, limit)) result.rows.push_back(space_row(spec));
    }
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const SuiteRow& a, const SuiteRow& b) { return a.key < b.key; });
  return result;
}

bool SuiteResult::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.passed; });
}

nlohmann::json SuiteResult::to_json(bool with_timing) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {{"key", r.key}, {"passed", r.passed}, {"report", r.report}};
    if (with_timing) j["seconds"] = r.seconds;
    arr.push_back(std::move(j));
  }
  return {{"rows", std::move(arr)}, {"all_passed", all_passed()}};
}

std::string SuiteResult::to_text() const {
  std::ostringstream os;
  os << std::left << std::setw(22) << "row" << std::setw(10) << "expected" << std::setw(10)
     << "computed" << std::setw(10) << "embedded" << std::setw(8) << "span" << std::setw(10)
     << "seconds" << "result\n";
  for (const auto& r : rows) {
    const auto& j = r.report;
    os << std::setw(22) << r.key << std::setw(10) << j.value("expected_dim", std::size_t{0})
       << std::setw(10) << j.value("computed_dim", std::size_t{0}) << std::setw(10)
       << (j.contains("embedded_dim") ? std::to_string(j["embedded_dim"].get<std::size_t>()) : "-")
       << std::setw(8)
       << (j.contains("span_match") ? (j["span_match"].get<bool>() ? "equal" : "proper") : "-")
       << std::setw(10) << std::fixed << std::setprecision(2) << r.seconds
       << (r.passed ? "PASS" : "FAIL") << '\n';
  }
  os << (all_passed() ? "all rows passed\n" : "SOME ROWS FAILED\n");
  return os.str();
}

std::string SuiteResult::to_csv() const {
  std::ostringstream os;
  os << "key,expected_dim,computed_dim,embedded_dim,span_match,passed\n";
  for (const auto& r : rows) {
    const auto& j = r.report;
    os << r.key << ',' << j.value("expected_dim", std::size_t{0}) << ','
       << j.value("computed_dim", std::size_t{0}) << ','
       << (j.contains("embedded_dim") ? std::to_string(j["embedded_dim"].get<std::size_t>()) : "")
       << ',' << (j.contains("span_match") ? (j["span_match"].get<bool>() ? "true" : "false") : "")
       << ',' << (r.passed ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace octder
