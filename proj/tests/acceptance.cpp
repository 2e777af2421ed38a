// Runs the full verification matrix once per field and prints one PASS/FAIL
// line per acceptance criterion. Exit status is 0 iff every line passes.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "octder/known.hpp"
#include "octder/suite.hpp"

using namespace octder;

namespace {

constexpr double kFpBudgetSeconds = 600.0;
constexpr double kRationalBudgetSeconds = 1800.0;
constexpr std::size_t kRationalDimLimit = 52;
constexpr int kNormPairs = 200;
constexpr std::uint64_t kSeed = 20240611;

const std::vector<OctonionType> kTypes = {OctonionType::TypeI, OctonionType::TypeII};

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

struct Line {
  int id;
  std::string title;
  bool passed;
  std::string detail;
};

std::vector<Line> lines;

void report(int id, std::string title, bool passed, std::string detail) {
  std::cout << (passed ? "PASS" : "FAIL") << "  criterion " << id << ": " << title;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  lines.push_back({id, std::move(title), passed, std::move(detail)});
}

template <typename F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Rows that must be present: every suite row over F_101, rows with algebra
// dimension <= 52 over Q.
std::vector<std::string> required_keys() {
  std::vector<std::string> keys;
  for (const auto* tok : {"mod101", "q"}) {
    const bool q = std::string(tok) == "q";
    for (const char* t : {"1", "2"}) {
      keys.push_back(std::string("O_") + t + "_" + tok);
      for (int n = 1; n <= 5; ++n) {
        if (!q || space_dimension(SpaceKind::HermitianAnticommutator, n) <= kRationalDimLimit) {
          keys.push_back("h_" + std::to_string(n) + "_" + t + "_" + tok);
        }
      }
      for (int n = 1; n <= 4; ++n) {
        if (!q || space_dimension(SpaceKind::AntihermitianCommutator, n) <= kRationalDimLimit) {
          keys.push_back("a_" + std::to_string(n) + "_" + t + "_" + tok);
        }
      }
      for (const char* m : {"m-std", "m-comm", "m-anticomm"}) keys.push_back(std::string(m) + "_2_" + t + "_" + tok);
    }
  }
  return keys;
}

const std::map<std::string, std::size_t> kExpectedDims = {
    {"O", 14},   {"h_1", 0},  {"h_2", 36},  {"h_3", 52},         {"h_4", 20},           {"h_5", 24},
    {"a_1", 14}, {"a_2", 15}, {"a_3", 17},  {"a_4", 20},         {"m-std_2", 18},       {"m-anticomm_2", 18},
    {"m-comm_2", 19}};

std::size_t expected_for(const std::string& key) {
  // key = <family>_<n>_<type>_<field>, or O_<type>_<field>
  const auto last = key.rfind('_');
  const auto type_sep = key.rfind('_', last - 1);
  return kExpectedDims.at(key.substr(0, type_sep));
}

void criterion_dimensions(const std::map<std::string, const SuiteRow*>& rows) {
  std::ostringstream bad;
  std::size_t checked = 0;
  for (const auto& key : required_keys()) {
    const auto it = rows.find(key);
    if (it == rows.end()) {
      bad << ' ' << key << "=missing";
      continue;
    }
    ++checked;
    const auto computed = it->second->report.at("computed_dim").get<std::size_t>();
    const auto expected = expected_for(key);
    if (computed != expected) bad << ' ' << key << '=' << computed << "(want " << expected << ')';
  }
  // F_101 and Q agree wherever both were run; a mismatch is only a warning.
  for (const auto& [key, row] : rows) {
    if (!key.ends_with("_q")) continue;
    const auto fp = rows.find(key.substr(0, key.size() - 1) + "mod101");
    if (fp != rows.end() && fp->second->report.at("computed_dim") != row->report.at("computed_dim")) {
      std::cout << "warning: " << key << " differs between Q and F_101" << std::endl;
    }
  }
  const auto s = bad.str();
  report(1, "derivation dimension table, F_101 and Q, both octonion types", s.empty(),
         std::to_string(checked) + " rows checked" + (s.empty() ? "" : "; mismatches:" + s));
}

void criterion_spans(const std::map<std::string, const SuiteRow*>& rows) {
  std::ostringstream bad;
  std::size_t checked = 0;
  for (const auto& [key, row] : rows) {
    const auto& j = row->report;
    if (starts_with(key, "h_4_") || starts_with(key, "a_1_") || starts_with(key, "a_2_") ||
        starts_with(key, "a_3_")) {
      ++checked;
      if (!(j.at("span_match").get<bool>() && j.at("contained").get<bool>())) bad << ' ' << key;
    } else if (starts_with(key, "h_3_")) {
      ++checked;
      const bool ok = j.at("contained").get<bool>() && !j.at("span_match").get<bool>() &&
                      j.at("embedded_dim") == 17 && j.at("computed_dim") == 52;
      if (!ok) bad << ' ' << key;
    }
  }
  const auto s = bad.str();
  report(2, "g2 + so_n span equals der for h_4, a_1..a_3; 17 < 52 containment for h_3",
         s.empty() && checked == 20, std::to_string(checked) + " rows checked" + (s.empty() ? "" : "; failing:" + s));
}

void criterion_lie(const std::map<std::string, const SuiteRow*>& rows) {
  std::ostringstream bad;
  std::size_t checked = 0;
  for (const auto& [key, row] : rows) {
    if (!(starts_with(key, "O_") || starts_with(key, "h_3_"))) continue;
    ++checked;
    const auto& lie = row->report.at("lie");
    const auto full = starts_with(key, "O_") ? 14 : 52;
    if (!(lie.at("closed").get<bool>() && lie.at("center_dim") == 0 && lie.at("derived_dim") == full)) {
      bad << ' ' << key << '=' << lie.dump();
    }
  }
  const auto s = bad.str();
  report(3, "der(O) and der(h_3): closed, trivial center, perfect", s.empty() && checked == 8,
         std::to_string(checked) + " rows checked" + (s.empty() ? "" : "; failing:" + s));
}

OctonionElement random_element(const OctonionAlgebra& o, std::mt19937_64& gen) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  std::array<Scalar, 8> c;
  for (auto& x : c) x = Scalar::fraction(o.field(), num(gen), den(gen));
  return OctonionElement(o, c);
}

void criterion_identities() {
  std::ostringstream bad;
  std::size_t instances = 0;
  std::mt19937_64 gen(kSeed);
  for (const auto t : kTypes) {
    const OctonionAlgebra o(Field::rationals(), t);
    const auto tag = "type " + to_string(t);
    std::size_t alt = 0, moufang = 0, bimul = 0, norms = 0;
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        const auto x = o.basis(a), y = o.basis(b);
        for (int c = 0; c < 8; ++c) {
          const auto u = o.basis(c);
          ++instances;
          // alternativity: [x,x,u] = [u,x,x] = [x,u,x] = 0 at each basis triple
          if (!(associator(x, x, u).is_zero() && associator(u, x, x).is_zero() &&
                associator(x, u, x).is_zero() && associator(x, y, u) == -associator(y, x, u))) {
            ++alt;
          }
          if (x * (y * (x * u)) != ((x * y) * x) * u) ++moufang;
        }
        if (a > 0 && b > 0 && a != b) {
          const auto l = (x * y) * x;
          if (!(l == x * (y * x) && l == -((x * x) * y) && (l == y || l == -y))) ++bimul;
        }
      }
    }
    for (int k = 0; k < kNormPairs; ++k) {
      const auto z = random_element(o, gen), w = random_element(o, gen);
      if (norm(z * w) != norm(z) * norm(w)) ++norms;
    }
    if (alt) bad << ' ' << tag << " alternativity x" << alt;
    if (moufang) bad << ' ' << tag << " moufang x" << moufang;
    if (bimul) bad << ' ' << tag << " e_i e_j e_i x" << bimul;
    if (norms) bad << ' ' << tag << " norm x" << norms;

    for (const auto& spec : {MatrixSpaceSpec{SpaceKind::HermitianAnticommutator, 4, t, Field::prime(101)},
                             MatrixSpaceSpec{SpaceKind::AntihermitianCommutator, 3, t, Field::prime(101)}}) {
      for (const auto& fam : crosscheck_products(spec)) {
        if (!fam.passed() || fam.instances == 0) bad << ' ' << spec.key() << ' ' << fam.family;
      }
    }
  }
  const auto s = bad.str();
  report(4, "alternativity, Moufang, e_i e_j e_i signs, norm multiplicativity, product families", s.empty(),
         std::to_string(instances) + " basis triples" + (s.empty() ? "" : "; failing:" + s));
}

void criterion_nucleus() {
  std::ostringstream dims;
  bool ok = true;
  for (const auto& f : {Field::rationals(), Field::prime(101)}) {
    for (const auto t : kTypes) {
      const auto d = nucleus(as_structure_algebra(OctonionAlgebra(f, t))).dim();
      dims << ' ' << f.to_string() << '/' << to_string(t) << '=' << d;
      ok = ok && d == 1;
    }
  }
  report(5, "nucleus(O) has dimension 1", ok, dims.str().substr(1));
}

}  // namespace

int main() {
  SuiteOptions fp;
  fp.field = Field::prime(101);
  fp.types = kTypes;
  SuiteOptions q;
  q.field = Field::rationals();
  q.types = kTypes;
  q.rational_dim_limit = kRationalDimLimit;

  SuiteResult fp_run, q_run, fp_again;
  const double fp_seconds = timed([&] { fp_run = verify_suite(fp); });
  const double q_seconds = timed([&] { q_run = verify_suite(q); });

  std::map<std::string, const SuiteRow*> rows;
  for (const auto* r : {&fp_run, &q_run}) {
    for (const auto& row : r->rows) rows[row.key] = &row;
  }

  criterion_dimensions(rows);
  criterion_spans(rows);
  criterion_lie(rows);
  criterion_identities();
  criterion_nucleus();

  char perf[160];
  std::snprintf(perf, sizeof perf, "F_101 suite %.1f s (budget %.0f), Q rows %.1f s (budget %.0f)", fp_seconds,
                kFpBudgetSeconds, q_seconds, kRationalBudgetSeconds);
  report(6, "performance envelope", fp_seconds < kFpBudgetSeconds && q_seconds < kRationalBudgetSeconds, perf);

  fp_again = verify_suite(fp);
  const auto first = fp_run.to_json().dump();
  const auto second = fp_again.to_json().dump();
  report(7, "verify_suite JSON byte-identical across runs", first == second,
         std::to_string(first.size()) + " bytes");

  std::size_t failed = 0;
  for (const auto& l : lines) failed += l.passed ? 0 : 1;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
