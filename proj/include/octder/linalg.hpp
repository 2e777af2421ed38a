#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "octder/scalar.hpp"

namespace octder {

struct SparseEntry {
  std::size_t col;
  Scalar value;
};

/// Sorted by column, no duplicate columns, no explicit zeros.
using SparseRow = std::vector<SparseEntry>;

/// Sorts, merges duplicate columns and drops zeros.
SparseRow canonical_row(std::vector<SparseEntry> entries);

using RowSink = std::function<void(const SparseRow&)>;
/// A replayable producer of rows. Calling it twice must emit the same rows in
/// the same order; the eliminator relies on that for its counting and
/// residual passes.
using RowSource = std::function<void(const RowSink&)>;

class SparseMatrix {
 public:
  SparseMatrix(Field field, std::size_t rows, std::size_t cols);

  static SparseMatrix from_dense(const Field& field, const std::vector<std::vector<long>>& rows);

  /// Accumulates value into (row, col).
  void add(std::size_t row, std::size_t col, const Scalar& value);
  void set_row(std::size_t row, SparseRow entries);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  const SparseRow& row(std::size_t r) const { return rows_.at(r); }
  std::size_t nonzeros() const;

  RowSource as_source() const;

  /// Text form: header "rows cols field", then one "row col value" per entry.
  std::string to_text() const;
  static SparseMatrix from_text(std::istream& in);

 private:
  Field field_;
  std::size_t cols_;
  std::vector<SparseRow> rows_;
};

/// A subspace of F^ambient in reduced row-echelon form. Two subspaces are
/// equal iff their EchelonBasis objects compare equal.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  EchelonBasis(Field field, std::size_t ambient);

  /// Row-reduces an arbitrary spanning set.
  static EchelonBasis from_vectors(const Field& field, std::size_t ambient,
                                   std::vector<std::vector<Scalar>> vectors);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<std::vector<Scalar>>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// True iff v reduces to zero against this basis.
  bool contains(std::span<const Scalar> v) const;

  nlohmann::json to_json() const;

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.vectors_ == b.vectors_;
  }

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<std::vector<Scalar>> vectors_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  std::size_t rank = 0;
  EchelonBasis row_space;
};

RrefResult rref(const SparseMatrix& m);

enum class PivotRule {
  /// Leading column of the reduced row; yields a true echelon form.
  Leftmost,
  /// Column with the fewest occurrences in the whole system (one extra
  /// counting pass); keeps stored rows from being reused, which limits fill.
  FewestOccurrences,
};

struct NullSpaceStats {
  std::size_t rows_seen = 0;
  std::size_t rank = 0;
  std::size_t stored_nonzeros = 0;
};

/// Kernel {v : Mv = 0} of the streamed system. Verifies rank-nullity and
/// Mv = 0 for every returned vector; throws InternalError otherwise.
EchelonBasis null_space(const RowSource& source, std::size_t cols, const Field& field,
                        PivotRule rule = PivotRule::FewestOccurrences,
                        NullSpaceStats* stats = nullptr);
EchelonBasis null_space(const SparseMatrix& m);

/// Throws PreconditionError on ambient dimension or field mismatch.
bool span_equal(const EchelonBasis& a, const EchelonBasis& b);
bool in_span(std::span<const Scalar> v, const EchelonBasis& basis);

}  // namespace octder
