// Incremental sparse elimination shared by rref() and null_space().
//
// Rows are inserted one at a time. Each incoming row is reduced against the
// stored rows, always eliminating the pivot owned by the earliest stored row
// first. A stored row only ever contains pivots of rows inserted after it, so
// that order terminates, and the stored rows never need updating.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "octder/error.hpp"

namespace octder::detail {

/// F_p with pivots normalized to 1.
struct FpRing {
  using Value = std::uint64_t;
  std::uint64_t p;

  static bool is_zero(Value v) { return v == 0; }
};

/// Z with fraction-free elimination; rows are kept primitive.
struct ZRing {
  using Value = mpz_class;

  static bool is_zero(const Value& v) { return sgn(v) == 0; }
};

inline std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

template <class Ring>
class SemiEchelon {
 public:
  using Value = typename Ring::Value;
  using Entry = std::pair<std::uint32_t, Value>;
  using PivotChooser = std::function<std::uint32_t(const std::vector<Entry>&)>;

  struct Row {
    std::vector<std::uint32_t> cols;
    std::vector<Value> vals;
    std::uint32_t pivot = 0;
    std::size_t pivot_pos = 0;
  };

  SemiEchelon(Ring ring, std::size_t ncols, PivotChooser chooser)
      : ring_(std::move(ring)),
        ncols_(ncols),
        choose_(std::move(chooser)),
        owner_(ncols, kNone),
        acc_(ncols),
        live_(ncols, 0) {}

  /// Returns true when the row was independent of the stored rows.
  bool insert(const std::vector<Entry>& row) {
    load(row);
    while (!heap_.empty()) {
      const std::uint32_t id = heap_.top();
      heap_.pop();
      const Row& p = rows_[id];
      if (!live_[p.pivot] || Ring::is_zero(acc_[p.pivot])) continue;
      eliminate(p);
    }
    std::vector<Entry> rest = collect();
    if (rest.empty()) return false;
    store(std::move(rest));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<Row>& rows() const { return rows_; }
  bool is_pivot(std::uint32_t col) const { return owner_[col] != kNone; }

  std::size_t stored_nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.cols.size();
    return n;
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  void touch(std::uint32_t c) {
    if (!live_[c]) {
      live_[c] = 1;
      acc_[c] = Value(0);
      touched_.push_back(c);
    }
  }

  void load(const std::vector<Entry>& row) {
    for (const auto& [c, v] : row) {
      touch(c);
      acc_[c] = v;
      if (owner_[c] != kNone) heap_.push(owner_[c]);
    }
  }

  void eliminate(const Row& p) {
    const Value v = acc_[p.pivot];
    if constexpr (std::is_same_v<Ring, FpRing>) {
      const std::uint64_t m = ring_.p - v;  // acc -= v * row
      for (std::size_t k = 0; k < p.cols.size(); ++k) {
        const std::uint32_t c = p.cols[k];
        const bool was_zero = !live_[c] || acc_[c] == 0;
        touch(c);
        acc_[c] = (acc_[c] + m * p.vals[k]) % ring_.p;
        if (was_zero && acc_[c] != 0 && owner_[c] != kNone && c != p.pivot) heap_.push(owner_[c]);
      }
      acc_[p.pivot] = 0;
    } else {
      const mpz_class& lead = p.vals[p.pivot_pos];
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), v.get_mpz_t());
      const mpz_class scale_self = lead / g;
      const mpz_class scale_row = v / g;
      const bool scaled = scale_self != 1;
      if (scaled) {
        for (std::uint32_t c : touched_) {
          if (sgn(acc_[c]) != 0) acc_[c] *= scale_self;
        }
      }
      for (std::size_t k = 0; k < p.cols.size(); ++k) {
        const std::uint32_t c = p.cols[k];
        const bool was_zero = !live_[c] || sgn(acc_[c]) == 0;
        touch(c);
        mpz_submul(acc_[c].get_mpz_t(), scale_row.get_mpz_t(), p.vals[k].get_mpz_t());
        if (was_zero && sgn(acc_[c]) != 0 && owner_[c] != kNone && c != p.pivot) {
          heap_.push(owner_[c]);
        }
      }
      acc_[p.pivot] = 0;
      if (scaled) strip_content();
    }
  }

  void strip_content() {
    mpz_class g = 0;
    for (std::uint32_t c : touched_) {
      if (sgn(acc_[c]) != 0) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), acc_[c].get_mpz_t());
        if (g == 1) return;
      }
    }
    if (g <= 1) return;
    for (std::uint32_t c : touched_) {
      if (sgn(acc_[c]) != 0) mpz_divexact(acc_[c].get_mpz_t(), acc_[c].get_mpz_t(), g.get_mpz_t());
    }
  }

  std::vector<Entry> collect() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<Entry> out;
    for (std::uint32_t c : touched_) {
      if (!Ring::is_zero(acc_[c])) out.emplace_back(c, std::move(acc_[c]));
      live_[c] = 0;
    }
    touched_.clear();
    return out;
  }

  void store(std::vector<Entry> entries) {
    const std::uint32_t pivot = choose_(entries);
    Row r;
    r.pivot = pivot;
    r.cols.reserve(entries.size());
    r.vals.reserve(entries.size());
    for (auto& [c, v] : entries) {
      if (c == pivot) r.pivot_pos = r.cols.size();
      r.cols.push_back(c);
      r.vals.push_back(std::move(v));
    }
    if (r.cols[r.pivot_pos] != pivot) throw InternalError("pivot chooser returned a foreign column");
    if constexpr (std::is_same_v<Ring, FpRing>) {
      const std::uint64_t inv = fp_inverse(r.vals[r.pivot_pos], ring_.p);
      for (auto& v : r.vals) v = v * inv % ring_.p;
    } else {
      mpz_class g = 0;
      for (const auto& v : r.vals) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (sgn(r.vals[r.pivot_pos]) < 0) g = -g;
      if (g != 1) {
        for (auto& v : r.vals) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      }
    }
    owner_[pivot] = static_cast<std::uint32_t>(rows_.size());
    rows_.push_back(std::move(r));
  }

  Ring ring_;
  std::size_t ncols_;
  PivotChooser choose_;
  std::vector<Row> rows_;
  std::vector<std::uint32_t> owner_;

  std::vector<Value> acc_;
  std::vector<std::uint8_t> live_;
  std::vector<std::uint32_t> touched_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

}  // namespace octder::detail
