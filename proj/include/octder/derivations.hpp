#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "octder/linalg.hpp"
#include "octder/structure_algebra.hpp"

namespace octder {

/// Endomorphism of a d-dimensional algebra in its basis: column k holds the
/// coordinates of D(b_k). Flattened row-major, entry D_{lk} sits at l*d + k.
class LinearMap {
 public:
  LinearMap(Field field, std::size_t dim);

  static LinearMap identity(const Field& field, std::size_t dim);
  static LinearMap from_flat(const Field& field, std::size_t dim, std::span<const Scalar> flat);

  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  const Scalar& operator()(std::size_t l, std::size_t k) const { return entries_[l * dim_ + k]; }
  Scalar& operator()(std::size_t l, std::size_t k) { return entries_[l * dim_ + k]; }
  const std::vector<Scalar>& flat() const { return entries_; }

  std::vector<Scalar> apply(std::span<const Scalar> v) const;
  bool is_zero() const;

  LinearMap& operator+=(const LinearMap& o);
  LinearMap& operator-=(const LinearMap& o);
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  /// Composition a . b.
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  void require_compatible(const LinearMap& o) const;

  Field field_;
  std::size_t dim_;
  std::vector<Scalar> entries_;
};

/// D1 D2 - D2 D1
LinearMap bracket(const LinearMap& a, const LinearMap& b);

enum class PairRange {
  /// i <= j for commutative, i < j for anticommutative, all pairs otherwise.
  SymmetryRestricted,
  AllOrdered,
};

/// Streams the Leibniz equations: for each basis pair (i, j) in
/// lexicographic order and each output coordinate m,
///   sum_k c_ij^k D_mk - sum_l D_li c_lj^m - sum_l D_lj c_il^m = 0.
/// Unknowns are the d^2 entries of D in row-major order.
RowSource leibniz_rows(const StructureAlgebra& a, PairRange range = PairRange::SymmetryRestricted);
SparseMatrix leibniz_system(const StructureAlgebra& a,
                            PairRange range = PairRange::SymmetryRestricted);

/// D(b_i b_j) - D(b_i) b_j - b_i D(b_j) vanishes for every ordered pair.
bool is_derivation(const StructureAlgebra& a, const LinearMap& d);

struct DerivationSpace {
  std::string algebra;
  std::size_t algebra_dim = 0;
  EchelonBasis basis;  // ambient dimension algebra_dim^2

  std::size_t dim() const { return basis.dim(); }
  const Field& field() const { return basis.field(); }
  std::vector<LinearMap> maps() const;

  /// {"algebra", "field", "algebra_dim", "dim", "flattening", "basis"?}
  nlohmann::json to_json(bool include_basis) const;
};

struct SolveOptions {
  PairRange pairs = PairRange::SymmetryRestricted;
  PivotRule pivot = PivotRule::FewestOccurrences;
  NullSpaceStats* stats = nullptr;
};

/// der(A) as the null space of the Leibniz system. Every basis element is
/// re-checked against the algebra afterwards; failure throws InternalError.
DerivationSpace solve_derivations(const StructureAlgebra& a, const SolveOptions& options = {});

struct LieReport {
  bool closed = true;
  std::size_t center_dim = 0;
  std::size_t derived_dim = 0;

  nlohmann::json to_json() const;
};

LieReport lie_checks(const DerivationSpace& s);

}  // namespace octder
