#include "octder/derivations.hpp"

#include <tuple>

namespace octder {

LinearMap::LinearMap(Field field, std::size_t dim)
    : field_(field), dim_(dim), entries_(dim * dim, Scalar::zero(field)) {}

LinearMap LinearMap::identity(const Field& field, std::size_t dim) {
  LinearMap m(field, dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = Scalar::one(field);
  return m;
}

LinearMap LinearMap::from_flat(const Field& field, std::size_t dim, std::span<const Scalar> flat) {
  if (flat.size() != dim * dim) throw PreconditionError("flattened map has the wrong length");
  LinearMap m(field, dim);
  std::copy(flat.begin(), flat.end(), m.entries_.begin());
  return m;
}

std::vector<Scalar> LinearMap::apply(std::span<const Scalar> v) const {
  if (v.size() != dim_) throw PreconditionError("vector length mismatch");
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (std::size_t k = 0; k < dim_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t l = 0; l < dim_; ++l) {
      const Scalar& e = (*this)(l, k);
      if (!e.is_zero()) out[l] += e * v[k];
    }
  }
  return out;
}

bool LinearMap::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

void LinearMap::require_compatible(const LinearMap& o) const {
  if (dim_ != o.dim_) throw PreconditionError("linear map size mismatch");
  if (field_ != o.field_) throw PreconditionError("linear map field mismatch");
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
  require_compatible(o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& o) {
  require_compatible(o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  a.require_compatible(b);
  const std::size_t d = a.dim_;
  LinearMap out(a.field_, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

LinearMap bracket(const LinearMap& a, const LinearMap& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Leibniz system

namespace {

// (l, m, c): b_l * b_fixed (or b_fixed * b_l) = ... + c b_m + ...
using Contribution = std::tuple<std::size_t, std::size_t, Scalar>;

struct ProductIndex {
  std::vector<std::vector<Contribution>> right;  // right[j]: products b_l b_j
  std::vector<std::vector<Contribution>> left;   // left[i]:  products b_i b_l

  explicit ProductIndex(const StructureAlgebra& a) : right(a.dim()), left(a.dim()) {
    const std::size_t d = a.dim();
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = 0; y < d; ++y) {
        for (const auto& t : a.product(x, y)) {
          right[y].emplace_back(x, t.index, t.coeff);
          left[x].emplace_back(y, t.index, t.coeff);
        }
      }
    }
  }
};

bool pair_in_range(ProductSymmetry sym, PairRange range, std::size_t i, std::size_t j) {
  if (range == PairRange::AllOrdered) return true;
  switch (sym) {
    case ProductSymmetry::Commutative: return i <= j;
    case ProductSymmetry::Anticommutative: return i < j;
    case ProductSymmetry::None: return true;
  }
  return true;
}

}  // namespace

RowSource leibniz_rows(const StructureAlgebra& a, PairRange range) {
  auto index = std::make_shared<ProductIndex>(a);
  return [&a, index, range](const RowSink& sink) {
    const std::size_t d = a.dim();
    std::vector<std::vector<SparseEntry>> rows(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (!pair_in_range(a.symmetry(), range, i, j)) continue;
        for (auto& r : rows) r.clear();
        const auto& prod = a.product(i, j);
        for (std::size_t m = 0; m < d; ++m) {
          for (const auto& t : prod) rows[m].push_back({m * d + t.index, t.coeff});
        }
        for (const auto& [l, m, c] : index->right[j]) rows[m].push_back({l * d + i, -c});
        for (const auto& [l, m, c] : index->left[i]) rows[m].push_back({l * d + j, -c});
        for (std::size_t m = 0; m < d; ++m) {
          if (rows[m].empty()) continue;
          const SparseRow row = canonical_row(std::move(rows[m]));
          rows[m] = {};
          if (!row.empty()) sink(row);
        }
      }
    }
  };
}

SparseMatrix leibniz_system(const StructureAlgebra& a, PairRange range) {
  std::vector<SparseRow> rows;
  leibniz_rows(a, range)([&](const SparseRow& r) { rows.push_back(r); });
  const std::size_t d = a.dim();
  SparseMatrix m(a.field(), rows.size(), d * d);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, std::move(rows[r]));
  return m;
}

bool is_derivation(const StructureAlgebra& a, const LinearMap& map) {
  const std::size_t d = a.dim();
  if (map.dim() != d) throw PreconditionError("map size does not match the algebra");
  if (map.field() != a.field()) throw PreconditionError("map field does not match the algebra");
  const Field& f = a.field();
  // sparse columns of the map
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> col(d);
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t k = 0; k < d; ++k) {
      if (!map(l, k).is_zero()) col[k].emplace_back(l, map(l, k));
    }
  }
  std::vector<Scalar> acc(d, Scalar::zero(f));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& t : a.product(i, j)) {
        for (const auto& [l, v] : col[t.index]) acc[l] += t.coeff * v;
      }
      for (const auto& [l, v] : col[i]) {
        for (const auto& t : a.product(l, j)) acc[t.index] -= v * t.coeff;
      }
      for (const auto& [l, v] : col[j]) {
        for (const auto& t : a.product(i, l)) acc[t.index] -= v * t.coeff;
      }
      for (auto& s : acc) {
        if (!s.is_zero()) return false;
      }
    }
  }
  return true;
}

std::vector<LinearMap> DerivationSpace::maps() const {
  std::vector<LinearMap> out;
  for (const auto& v : basis.vectors()) out.push_back(LinearMap::from_flat(field(), algebra_dim, v));
  return out;
}

nlohmann::json DerivationSpace::to_json(bool include_basis) const {
  nlohmann::json j = {{"algebra", algebra},
                      {"field", field().to_string()},
                      {"algebra_dim", algebra_dim},
                      {"dim", dim()},
                      {"flattening", "row-major: entry l*d+k is D_{lk}; column k is D(b_k)"}};
  if (include_basis) j["basis"] = basis.to_json();
  return j;
}

DerivationSpace solve_derivations(const StructureAlgebra& a, const SolveOptions& options) {
  const std::size_t d = a.dim();
  DerivationSpace s;
  s.algebra = a.name();
  s.algebra_dim = d;
  s.basis = null_space(leibniz_rows(a, options.pairs), d * d, a.field(), options.pivot, options.stats);
  for (const auto& m : s.maps()) {
    if (!is_derivation(a, m)) throw InternalError("computed derivation fails the Leibniz residual");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Lie structure

nlohmann::json LieReport::to_json() const {
  return {{"closed", closed}, {"center_dim", center_dim}, {"derived_dim", derived_dim}};
}

LieReport lie_checks(const DerivationSpace& s) {
  LieReport r;
  const auto maps = s.maps();
  const std::size_t k = maps.size();
  if (k == 0) return r;
  const Field& f = s.field();
  const auto& pivots = s.basis.pivots();

  // Coordinates of [D_a, D_b] against the reduced basis are its entries at the
  // pivot columns; membership holds iff the recombination reproduces it.
  // coeff[(a*k + b)*k + c] = structure constant of [D_a, D_b] along D_c.
  std::vector<Scalar> coeff(k * k * k, Scalar::zero(f));
  std::vector<std::vector<Scalar>> brackets;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const LinearMap br = bracket(maps[a], maps[b]);
      const auto& flat = br.flat();
      if (!s.basis.contains(flat)) r.closed = false;
      for (std::size_t c = 0; c < k; ++c) {
        coeff[(a * k + b) * k + c] = flat[pivots[c]];
        coeff[(b * k + a) * k + c] = -flat[pivots[c]];
      }
      brackets.push_back(flat);
    }
  }

  if (r.closed) {
    // center: x with sum_a x_a [D_a, D_b] = 0 for all b
    SparseMatrix center(f, k * k, k);
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t a = 0; a < k; ++a) {
          const Scalar& v = coeff[(a * k + b) * k + c];
          if (!v.is_zero()) center.add(b * k + c, a, v);
        }
      }
    }
    r.center_dim = null_space(center).dim();
    SparseMatrix derived(f, brackets.size(), k);
    std::size_t row = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b, ++row) {
        for (std::size_t c = 0; c < k; ++c) {
          const Scalar& v = coeff[(a * k + b) * k + c];
          if (!v.is_zero()) derived.add(row, c, v);
        }
      }
    }
    r.derived_dim = rref(derived).rank;
    return r;
  }

  // Not a Lie algebra: fall back to the ambient space.
  r.derived_dim = EchelonBasis::from_vectors(f, s.basis.ambient(), brackets).dim();
  SparseMatrix center(f, k * s.basis.ambient(), k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const auto flat = bracket(maps[a], maps[b]).flat();
      for (std::size_t e = 0; e < flat.size(); ++e) {
        if (!flat[e].is_zero()) center.add(b * s.basis.ambient() + e, a, flat[e]);
      }
    }
  }
  r.center_dim = null_space(center).dim();
  return r;
}

}  // namespace octder
