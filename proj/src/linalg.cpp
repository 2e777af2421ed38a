#include "octder/linalg.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "semi_echelon.hpp"

namespace octder {

using detail::FpRing;
using detail::SemiEchelon;
using detail::ZRing;

SparseRow canonical_row(std::vector<SparseEntry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  SparseRow out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().col == e.col) {
      out.back().value += e.value;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const SparseEntry& e) { return e.value.is_zero(); });
  return out;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), rows_(rows) {}

SparseMatrix SparseMatrix::from_dense(const Field& field,
                                      const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw PreconditionError("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) m.add(r, c, Scalar(field, rows[r][c]));
    }
  }
  return m;
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows_.size() || col >= cols_) throw PreconditionError("matrix index out of range");
  if (value.field() != field_) throw PreconditionError("field mismatch in SparseMatrix::add");
  auto& r = rows_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == col) {
    it->value += value;
    if (it->value.is_zero()) r.erase(it);
  } else if (!value.is_zero()) {
    r.insert(it, SparseEntry{col, value});
  }
}

void SparseMatrix::set_row(std::size_t row, SparseRow entries) {
  if (row >= rows_.size()) throw PreconditionError("matrix row out of range");
  entries = canonical_row(std::move(entries));
  for (const auto& e : entries) {
    if (e.col >= cols_) throw PreconditionError("matrix column out of range");
    if (e.value.field() != field_) throw PreconditionError("field mismatch in SparseMatrix::set_row");
  }
  rows_[row] = std::move(entries);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

RowSource SparseMatrix::as_source() const {
  return [this](const RowSink& sink) {
    for (const auto& r : rows_) sink(r);
  };
}

std::string SparseMatrix::to_text() const {
  std::ostringstream os;
  os << rows_.size() << ' ' << cols_ << ' ' << field_.to_string() << '\n';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& e : rows_[r]) os << r << ' ' << e.col << ' ' << e.value << '\n';
  }
  return os.str();
}

SparseMatrix SparseMatrix::from_text(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  std::string field_text;
  if (!(in >> rows >> cols >> field_text)) throw PreconditionError("malformed matrix header");
  SparseMatrix m(Field::parse(field_text), rows, cols);
  std::size_t r = 0, c = 0;
  std::string value;
  while (in >> r >> c >> value) m.add(r, c, Scalar::parse(m.field(), value));
  if (!in.eof()) throw PreconditionError("malformed matrix entry");
  return m;
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

EchelonBasis EchelonBasis::from_vectors(const Field& field, std::size_t ambient,
                                        std::vector<std::vector<Scalar>> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw PreconditionError("vector length does not match ambient dimension");
  }
  // Dense Gauss-Jordan; spanning sets handed in here are small.
  EchelonBasis out(field, ambient);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ambient && rank < vectors.size(); ++col) {
    std::size_t pick = rank;
    while (pick < vectors.size() && vectors[pick][col].is_zero()) ++pick;
    if (pick == vectors.size()) continue;
    std::swap(vectors[rank], vectors[pick]);
    auto& prow = vectors[rank];
    const Scalar inv = prow[col].inverse();
    for (std::size_t k = col; k < ambient; ++k) {
      if (!prow[k].is_zero()) prow[k] *= inv;
    }
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      if (r == rank || vectors[r][col].is_zero()) continue;
      const Scalar f = vectors[r][col];
      for (std::size_t k = col; k < ambient; ++k) {
        if (!prow[k].is_zero()) vectors[r][k] -= f * prow[k];
      }
    }
    out.pivots_.push_back(col);
    ++rank;
  }
  vectors.resize(rank);
  out.vectors_ = std::move(vectors);
  return out;
}

bool EchelonBasis::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw PreconditionError("dimension mismatch in in_span");
  std::vector<Scalar> w(v.begin(), v.end());
  for (std::size_t r = 0; r < vectors_.size(); ++r) {
    const Scalar f = w[pivots_[r]];
    if (f.is_zero()) continue;
    const auto& b = vectors_[r];
    for (std::size_t k = pivots_[r]; k < ambient_; ++k) {
      if (!b[k].is_zero()) w[k] -= f * b[k];
    }
  }
  return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

nlohmann::json EchelonBasis::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& v : vectors_) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& s : v) row.push_back(s.to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

bool span_equal(const EchelonBasis& a, const EchelonBasis& b) {
  if (a.ambient() != b.ambient()) throw PreconditionError("ambient dimension mismatch");
  if (a.field() != b.field()) throw PreconditionError("field mismatch");
  return a == b;
}

bool in_span(std::span<const Scalar> v, const EchelonBasis& basis) { return basis.contains(v); }

// ---------------------------------------------------------------------------
// Elimination drivers

namespace {

template <class Ring>
std::vector<typename SemiEchelon<Ring>::Entry> to_ring_row(const SparseRow& row, const Ring& ring) {
  std::vector<typename SemiEchelon<Ring>::Entry> out;
  out.reserve(row.size());
  if constexpr (std::is_same_v<Ring, FpRing>) {
    for (const auto& e : row) out.emplace_back(static_cast<std::uint32_t>(e.col), e.value.residue());
    (void)ring;
  } else {
    // clear denominators so the row is integral
    mpz_class lcm = 1;
    for (const auto& e : row) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value.rational().get_den_mpz_t());
    }
    for (const auto& e : row) {
      const mpq_class& q = e.value.rational();
      mpz_class v = q.get_num() * (lcm / q.get_den());
      out.emplace_back(static_cast<std::uint32_t>(e.col), std::move(v));
    }
  }
  return out;
}

std::vector<std::size_t> count_columns(const RowSource& source, std::size_t cols) {
  std::vector<std::size_t> counts(cols, 0);
  source([&](const SparseRow& row) {
    for (const auto& e : row) ++counts.at(e.col);
  });
  return counts;
}

template <class Ring>
typename SemiEchelon<Ring>::PivotChooser make_chooser(PivotRule rule,
                                                      std::vector<std::size_t> counts) {
  using Entry = typename SemiEchelon<Ring>::Entry;
  if (rule == PivotRule::Leftmost) {
    return [](const std::vector<Entry>& row) { return row.front().first; };
  }
  return [counts = std::move(counts)](const std::vector<Entry>& row) {
    std::uint32_t best = row.front().first;
    for (const auto& [c, v] : row) {
      if (counts[c] < counts[best]) best = c;
    }
    return best;
  };
}

template <class Ring>
SemiEchelon<Ring> eliminate(const RowSource& source, std::size_t cols, Ring ring, PivotRule rule,
                            std::size_t* rows_seen) {
  std::vector<std::size_t> counts;
  if (rule == PivotRule::FewestOccurrences) counts = count_columns(source, cols);
  SemiEchelon<Ring> se(ring, cols, make_chooser<Ring>(rule, std::move(counts)));
  std::size_t seen = 0;
  source([&](const SparseRow& row) {
    ++seen;
    for (const auto& e : row) {
      if (e.col >= cols) throw PreconditionError("row entry beyond declared column count");
    }
    if (!row.empty()) se.insert(to_ring_row(row, ring));
  });
  if (rows_seen) *rows_seen = seen;
  return se;
}

// One kernel vector per non-pivot column, by back substitution in reverse
// insertion order.
std::vector<std::vector<Scalar>> kernel_vectors(const SemiEchelon<FpRing>& se, const Field& field) {
  const std::uint64_t p = field.modulus();
  std::vector<std::vector<Scalar>> out;
  std::vector<std::uint64_t> x(se.ncols());
  for (std::uint32_t f = 0; f < se.ncols(); ++f) {
    if (se.is_pivot(f)) continue;
    std::fill(x.begin(), x.end(), 0);
    x[f] = 1;
    const auto& rows = se.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      std::uint64_t sum = 0;
      for (std::size_t k = 0; k < it->cols.size(); ++k) {
        if (k == it->pivot_pos) continue;
        const std::uint64_t xv = x[it->cols[k]];
        if (xv) sum = (sum + xv * it->vals[k]) % p;
      }
      x[it->pivot] = sum == 0 ? 0 : p - sum;  // pivot coefficient is 1
    }
    std::vector<Scalar> v;
    v.reserve(x.size());
    for (auto xv : x) v.emplace_back(field, static_cast<long>(xv));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Scalar>> kernel_vectors(const SemiEchelon<ZRing>& se, const Field& field) {
  std::vector<std::vector<Scalar>> out;
  std::vector<mpq_class> x(se.ncols());
  mpq_class sum;
  for (std::uint32_t f = 0; f < se.ncols(); ++f) {
    if (se.is_pivot(f)) continue;
    for (auto& q : x) q = 0;
    x[f] = 1;
    const auto& rows = se.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      sum = 0;
      for (std::size_t k = 0; k < it->cols.size(); ++k) {
        if (k == it->pivot_pos) continue;
        const mpq_class& xv = x[it->cols[k]];
        if (sgn(xv) != 0) sum += xv * it->vals[k];
      }
      if (sgn(sum) == 0) {
        x[it->pivot] = 0;
      } else {
        x[it->pivot] = -sum / it->vals[it->pivot_pos];
      }
    }
    std::vector<Scalar> v;
    v.reserve(x.size());
    for (const auto& q : x) v.emplace_back(field, q);
    out.push_back(std::move(v));
  }
  return out;
}

void check_residuals(const RowSource& source, const EchelonBasis& basis) {
  if (basis.dim() == 0) return;
  const Field& field = basis.field();
  if (!field.is_rational()) {
    const std::uint64_t p = field.modulus();
    std::vector<std::vector<std::uint64_t>> vs;
    for (const auto& v : basis.vectors()) {
      std::vector<std::uint64_t> w;
      w.reserve(v.size());
      for (const auto& s : v) w.push_back(s.residue());
      vs.push_back(std::move(w));
    }
    source([&](const SparseRow& row) {
      for (const auto& v : vs) {
        std::uint64_t acc = 0;
        for (const auto& e : row) acc = (acc + e.value.residue() * v[e.col]) % p;
        if (acc != 0) throw InternalError("null-space vector violates a system row");
      }
    });
    return;
  }
  source([&](const SparseRow& row) {
    for (const auto& v : basis.vectors()) {
      Scalar acc = Scalar::zero(field);
      for (const auto& e : row) {
        if (!v[e.col].is_zero()) acc += e.value * v[e.col];
      }
      if (!acc.is_zero()) throw InternalError("null-space vector violates a system row");
    }
  });
}

template <class Ring>
EchelonBasis null_space_with(const RowSource& source, std::size_t cols, const Field& field,
                             Ring ring, PivotRule rule, NullSpaceStats* stats) {
  std::size_t seen = 0;
  auto se = eliminate(source, cols, ring, rule, &seen);
  auto basis = EchelonBasis::from_vectors(field, cols, kernel_vectors(se, field));
  if (se.rank() + basis.dim() != cols) throw InternalError("rank-nullity violated");
  check_residuals(source, basis);
  if (stats) {
    stats->rows_seen = seen;
    stats->rank = se.rank();
    stats->stored_nonzeros = se.stored_nonzeros();
  }
  return basis;
}

template <class Ring>
RrefResult rref_with(const SparseMatrix& m, Ring ring) {
  auto se = eliminate(m.as_source(), m.cols(), ring, PivotRule::Leftmost, nullptr);
  const Field& field = m.field();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : se.rows()) {
    std::vector<Scalar> v(m.cols(), Scalar::zero(field));
    for (std::size_t k = 0; k < r.cols.size(); ++k) {
      if constexpr (std::is_same_v<Ring, FpRing>) {
        v[r.cols[k]] = Scalar(field, static_cast<long>(r.vals[k]));
      } else {
        v[r.cols[k]] = Scalar(field, mpq_class(r.vals[k]));
      }
    }
    rows.push_back(std::move(v));
  }
  RrefResult out;
  out.rank = se.rank();
  out.row_space = EchelonBasis::from_vectors(field, m.cols(), std::move(rows));
  if (out.row_space.dim() != out.rank) throw InternalError("rank mismatch after back reduction");
  return out;
}

}  // namespace

RrefResult rref(const SparseMatrix& m) {
  if (m.field().is_rational()) return rref_with(m, ZRing{});
  return rref_with(m, FpRing{m.field().modulus()});
}

EchelonBasis null_space(const RowSource& source, std::size_t cols, const Field& field,
                        PivotRule rule, NullSpaceStats* stats) {
  if (field.is_rational()) return null_space_with(source, cols, field, ZRing{}, rule, stats);
  return null_space_with(source, cols, field, FpRing{field.modulus()}, rule, stats);
}

EchelonBasis null_space(const SparseMatrix& m) {
  return null_space(m.as_source(), m.cols(), m.field());
}

}  // namespace octder
