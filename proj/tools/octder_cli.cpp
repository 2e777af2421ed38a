// octder: build octonion matrix algebras, compute their derivation algebras
// and check the known dimension/decomposition results.
//
// Exit codes: 0 success, 1 a verification row failed, 2 usage error.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "octder/derivations.hpp"
#include "octder/known.hpp"
#include "octder/matalg.hpp"
#include "octder/octonion.hpp"
#include "octder/suite.hpp"

namespace {

using namespace octder;
using nlohmann::json;

constexpr std::size_t kRationalDimLimit = 60;

struct RunConfig {
  std::string command;
  std::string space = "h";
  std::string product = "std";
  int n = 1;
  std::string oct_type = "1";
  std::string field;
  std::string output = "json";
  bool emit_basis = false;
  bool timing = false;
  bool force_q = false;
  bool include_q = false;
  bool update_golden = false;
  std::string golden_dir;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OctonionType parse_oct_type(const std::string& s) {
  if (s == "1" || s == "I") return OctonionType::TypeI;
  if (s == "2" || s == "II") return OctonionType::TypeII;
  throw UsageError("--oct-type must be 1 or 2");
}

SpaceKind parse_space(const RunConfig& c) {
  if (c.space == "h") return SpaceKind::HermitianAnticommutator;
  if (c.space == "a") return SpaceKind::AntihermitianCommutator;
  if (c.space == "m") {
    if (c.product == "std") return SpaceKind::FullStandard;
    if (c.product == "comm") return SpaceKind::FullCommutator;
    if (c.product == "anticomm") return SpaceKind::FullAnticommutator;
    throw UsageError("--product must be std, comm or anticomm");
  }
  throw UsageError("--space must be o, h, a or m");
}

Field resolve_field(const RunConfig& c) {
  std::string text = c.field;
  if (text.empty()) {
    const char* env = std::getenv("OCTDER_FIELD");
    text = env ? env : "mod:101";
  }
  return Field::parse(text);
}

MatrixSpaceSpec make_spec(const RunConfig& c, const Field& field) {
  MatrixSpaceSpec spec{parse_space(c), c.n, parse_oct_type(c.oct_type), field};
  spec.validate();
  return spec;
}

void guard_rational_size(const RunConfig& c, const Field& field, std::size_t dim) {
  if (field.is_rational() && dim > kRationalDimLimit && !c.force_q) {
    throw UsageError("rational elimination for algebra dimension " + std::to_string(dim) +
                     " > " + std::to_string(kRationalDimLimit) +
                     " is opt-in; pass --force-q or use --field mod:101");
  }
}

void print(const json& j, const std::string& text, const std::string& csv, const RunConfig& c) {
  if (c.output == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (c.output == "csv") {
    std::cout << csv;
  } else {
    std::cout << text;
  }
}

std::string csv_line(std::initializer_list<std::pair<const char*, std::string>> cols) {
  std::string head, body;
  for (const auto& [k, v] : cols) {
    head += (head.empty() ? "" : ",") + std::string(k);
    body += (body.empty() ? "" : ",") + v;
  }
  return head + "\n" + body + "\n";
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int golden_check(const RunConfig& c, const std::string& key, const json& report) {
  if (c.golden_dir.empty()) return 0;
  const auto path = std::filesystem::path(c.golden_dir) / (key + ".json");
  if (c.update_golden) {
    std::filesystem::create_directories(c.golden_dir);
    std::ofstream(path) << report.dump(2) << '\n';
    std::cerr << "wrote " << path.string() << '\n';
    return 0;
  }
  std::ifstream in(path);
  if (!in) throw UsageError("golden file not found: " + path.string());
  const json expected = json::parse(in);
  if (expected != report) {
    std::cerr << "golden mismatch against " << path.string() << '\n';
    return 1;
  }
  std::cerr << "golden match: " << path.string() << '\n';
  return 0;
}

int cmd_table(const RunConfig& c) {
  const OctonionAlgebra o(resolve_field(c), parse_oct_type(c.oct_type));
  static const char* names[] = {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  std::ostringstream text, csv;
  csv << "i,j,sign,k\n";
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const auto p = o.basis_product(i, j);
      text << std::setw(4) << ((p.sign < 0 ? "-" : "+") + std::string(names[p.index]));
      csv << i << ',' << j << ',' << p.sign << ',' << p.index << '\n';
    }
    text << '\n';
  }
  print(o.table_json(), text.str(), csv.str(), c);
  return 0;
}

StructureAlgebra algebra_for(const RunConfig& c, const Field& field, MatrixSpaceSpec* spec_out) {
  if (c.space == "o") {
    return as_structure_algebra(OctonionAlgebra(field, parse_oct_type(c.oct_type)));
  }
  const auto spec = make_spec(c, field);
  if (spec_out) *spec_out = spec;
  return build_algebra(spec);
}

json spec_json(const RunConfig& c, const Field& field) {
  if (c.space == "o") {
    return {{"space", "o"}, {"oct_type", parse_oct_type(c.oct_type) == OctonionType::TypeI ? "I" : "II"},
            {"field", field.to_string()}};
  }
  return make_spec(c, field).to_json();
}

int cmd_build(const RunConfig& c) {
  const Field field = resolve_field(c);
  MatrixSpaceSpec spec;
  const auto start = std::chrono::steady_clock::now();
  const auto a = algebra_for(c, field, &spec);
  json j = a.to_json();
  j["spec"] = spec_json(c, field);
  if (c.timing) j["seconds"] = elapsed(start);
  std::ostringstream text, csv;
  text << "algebra " << a.name() << " over " << field.to_string() << ": dim " << a.dim() << ", "
       << a.nonzero_constants() << " nonzero structure constants, symmetry "
       << to_string(a.symmetry()) << '\n';
  csv << "i,j,k,value\n";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t jj = 0; jj < a.dim(); ++jj) {
      for (const auto& t : a.product(i, jj)) csv << i << ',' << jj << ',' << t.index << ',' << t.coeff << '\n';
    }
  }
  print(j, text.str(), csv.str(), c);
  return 0;
}

int cmd_derive(const RunConfig& c) {
  const Field field = resolve_field(c);
  const auto start = std::chrono::steady_clock::now();
  MatrixSpaceSpec spec;
  const auto a = algebra_for(c, field, &spec);
  guard_rational_size(c, field, a.dim());
  NullSpaceStats stats;
  SolveOptions opts;
  opts.stats = &stats;
  const auto der = solve_derivations(a, opts);
  const double secs = elapsed(start);

  json j = der.to_json(c.emit_basis);
  j["spec"] = spec_json(c, field);
  j["equations"] = stats.rows_seen;
  j["rank"] = stats.rank;
  if (c.timing) j["seconds"] = secs;
  std::ostringstream text;
  text << "der(" << a.name() << ") over " << field.to_string() << ": dim " << der.dim()
       << " (algebra dim " << a.dim() << ", " << stats.rows_seen << " equations, rank " << stats.rank
       << ", " << std::fixed << std::setprecision(2) << secs << " s)\n";
  const std::string csv = csv_line({{"algebra", a.name()},
                                    {"field", field.to_string()},
                                    {"algebra_dim", std::to_string(a.dim())},
                                    {"dim", std::to_string(der.dim())}});
  print(j, text.str(), csv, c);
  return 0;
}

int cmd_verify(const RunConfig& c) {
  const Field field = resolve_field(c);
  if (c.space == "o") {
    const auto row = octonion_row(field, parse_oct_type(c.oct_type));
    json j = row.report;
    if (c.timing) j["seconds"] = row.seconds;
    std::ostringstream text;
    text << row.key << ": der dim " << row.report["computed_dim"] << ", nucleus dim "
         << row.report["nucleus_dim"] << " -> " << (row.passed ? "PASS" : "FAIL") << '\n';
    print(j, text.str(),
          csv_line({{"key", row.key}, {"passed", row.passed ? "true" : "false"}}), c);
    int rc = row.passed ? 0 : 1;
    return std::max(rc, golden_check(c, row.key, row.report));
  }
  const auto spec = make_spec(c, field);
  guard_rational_size(c, field, space_dimension(spec.kind, spec.n));
  const auto report = verify_theorem(spec);
  const json j = report.to_json(c.timing);
  std::ostringstream text;
  text << spec.label() << ": expected " << report.expected_dim << ", computed "
       << report.computed_dim << ", embedded g2+so_n " << report.embedded_dim
       << (report.span_match ? " (equal)" : " (proper)") << ", commuting "
       << (report.commuting ? "yes" : "no") << ", " << std::fixed << std::setprecision(2)
       << report.seconds << " s -> " << (report.passed() ? "PASS" : "FAIL") << '\n';
  const std::string csv = csv_line({{"key", spec.key()},
                                    {"expected_dim", std::to_string(report.expected_dim)},
                                    {"computed_dim", std::to_string(report.computed_dim)},
                                    {"embedded_dim", std::to_string(report.embedded_dim)},
                                    {"span_match", report.span_match ? "true" : "false"},
                                    {"passed", report.passed() ? "true" : "false"}});
  print(j, text.str(), csv, c);
  const int rc = report.passed() ? 0 : 1;
  return std::max(rc, golden_check(c, spec.key(), report.to_json(false)));
}

int cmd_nucleus(const RunConfig& c) {
  const Field field = resolve_field(c);
  const RunConfig& cc = c;
  const auto a = algebra_for(cc, field, nullptr);
  const auto nuc = nucleus(a);
  json j = {{"spec", spec_json(cc, field)}, {"algebra_dim", a.dim()}, {"dim", nuc.dim()}};
  if (c.emit_basis) j["basis"] = nuc.to_json();
  std::ostringstream text;
  text << "nucleus(" << a.name() << ") over " << field.to_string() << ": dim " << nuc.dim() << '\n';
  print(j, text.str(),
        csv_line({{"algebra", a.name()}, {"dim", std::to_string(nuc.dim())}}), c);
  return 0;
}

int cmd_suite(const RunConfig& c) {
  SuiteOptions opts;
  opts.field = resolve_field(c);
  opts.include_q = c.include_q;
  if (c.oct_type == "both") {
    opts.types = {OctonionType::TypeI, OctonionType::TypeII};
  } else {
    opts.types = {parse_oct_type(c.oct_type)};
  }
  const auto result = verify_suite(opts);
  print(result.to_json(c.timing), result.to_text(), result.to_csv(), c);
  return result.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Derivation algebras of octonion matrix algebras"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_space) {
    if (with_space) {
      sub->add_option("--space", cfg.space, "o (octonions), h (hermitian), a (antihermitian), m (full)")
          ->check(CLI::IsMember({"o", "h", "a", "m"}));
      sub->add_option("--n", cfg.n, "matrix size")->check(CLI::PositiveNumber);
      sub->add_option("--product", cfg.product, "product for --space m")
          ->check(CLI::IsMember({"std", "comm", "anticomm"}));
    }
    sub->add_option("--oct-type", cfg.oct_type, "octonion type: 1 or 2");
    sub->add_option("--field", cfg.field, "q or mod:<p> (default $OCTDER_FIELD or mod:101)");
    sub->add_option("--output", cfg.output, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--timing", cfg.timing, "include wall-clock seconds in JSON output");
  };

  auto* table = app.add_subcommand("table", "print the octonion multiplication table");
  add_common(table, false);
  auto* build = app.add_subcommand("build", "export structure constants");
  add_common(build, true);
  auto* derive = app.add_subcommand("derive", "compute the derivation algebra");
  add_common(derive, true);
  derive->add_flag("--emit-basis", cfg.emit_basis, "include the echelon basis");
  derive->add_flag("--force-q", cfg.force_q, "allow rational elimination above dimension 60");
  auto* verify = app.add_subcommand("verify", "compare der(space) with the embedded g2 + so_n");
  add_common(verify, true);
  verify->add_flag("--force-q", cfg.force_q, "allow rational elimination above dimension 60");
  verify->add_option("--golden", cfg.golden_dir, "directory of expected reports");
  verify->add_flag("--update-golden", cfg.update_golden, "write the report into --golden");
  auto* nuc = app.add_subcommand("nucleus", "nucleus of an algebra");
  add_common(nuc, true);
  nuc->add_flag("--emit-basis", cfg.emit_basis, "include the echelon basis");
  auto* suite = app.add_subcommand("suite", "run the full verification matrix");
  add_common(suite, false);
  suite->add_flag("--include-q", cfg.include_q, "also run rows of dimension <= 52 over Q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (table->parsed()) return cmd_table(cfg);
    if (build->parsed()) return cmd_build(cfg);
    if (derive->parsed()) return cmd_derive(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (nuc->parsed()) {
      if (nuc->count("--space") == 0) cfg.space = "o";
      return cmd_nucleus(cfg);
    }
    if (suite->parsed()) return cmd_suite(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
