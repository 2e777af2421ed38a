#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "octder/octonion.hpp"
#include "octder/structure_algebra.hpp"

namespace octder {

enum class SpaceKind {
  HermitianAnticommutator,   // h_n(O) with x o y = xy + yx
  AntihermitianCommutator,   // a_n(O) with [x, y] = xy - yx
  FullStandard,              // M_n(O) with xy
  FullCommutator,            // M_n(O) with xy - yx
  FullAnticommutator,        // M_n(O) with xy + yx
};

std::string to_string(SpaceKind k);
bool is_full(SpaceKind k);

struct MatrixSpaceSpec {
  SpaceKind kind = SpaceKind::HermitianAnticommutator;
  int n = 1;
  OctonionType oct_type = OctonionType::TypeI;
  Field field;

  /// Stable identifier, e.g. "h_4_1_mod101"; also the golden file stem.
  std::string key() const;
  /// Short human label, e.g. "h4(O_I) over Fp:101".
  std::string label() const;
  nlohmann::json to_json() const;
  void validate() const;
};

/// Closed-form dimension of the space: 4n^2 - 3n, 4n^2 + 3n or 8n^2.
std::size_t space_dimension(SpaceKind kind, int n);

/// n x n matrix with octonion entries.
class OctMatrix {
 public:
  OctMatrix(const OctonionAlgebra& algebra, int n);

  /// z E_ij
  static OctMatrix unit(const OctonionAlgebra& algebra, int n, int i, int j,
                        const OctonionElement& z);

  int size() const { return n_; }
  const OctonionAlgebra& algebra() const { return algebra_; }
  const OctonionElement& operator()(int i, int j) const { return entries_[i * n_ + j]; }
  OctonionElement& operator()(int i, int j) { return entries_[i * n_ + j]; }

  /// Conjugate transpose.
  OctMatrix star() const;
  bool is_hermitian() const;
  bool is_antihermitian() const;
  bool is_zero() const;

  OctMatrix& operator+=(const OctMatrix& y);
  OctMatrix& operator-=(const OctMatrix& y);
  OctMatrix& operator*=(const Scalar& s);
  friend OctMatrix operator+(OctMatrix x, const OctMatrix& y) { return x += y; }
  friend OctMatrix operator-(OctMatrix x, const OctMatrix& y) { return x -= y; }
  friend bool operator==(const OctMatrix& x, const OctMatrix& y) {
    return x.n_ == y.n_ && x.entries_ == y.entries_;
  }

 private:
  void require_compatible(const OctMatrix& y) const;

  OctonionAlgebra algebra_;
  int n_;
  std::vector<OctonionElement> entries_;
};

/// Row-by-column product with octonion entries; no reassociation.
OctMatrix matmul_oct(const OctMatrix& x, const OctMatrix& y);

/// The algebra product of the space: xy, xy + yx or xy - yx.
OctMatrix space_product(SpaceKind kind, const OctMatrix& x, const OctMatrix& y);

struct BasisElement {
  std::string label;
  OctMatrix matrix;
};

/// Diagonal families first by index, then off-diagonal positions in (i, j)
/// lexicographic order, octonion basis index fastest.
std::vector<BasisElement> basis_enumerate(const MatrixSpaceSpec& spec);

/// Coordinates of x in the enumerated basis. Throws InternalError if x is not
/// in the space (wrong symmetry, non-real hermitian diagonal, ...).
std::vector<Scalar> coordinates(const MatrixSpaceSpec& spec, const OctMatrix& x);
/// Inverse of coordinates().
OctMatrix from_coordinates(const MatrixSpaceSpec& spec, std::span<const Scalar> coords);

StructureAlgebra build_algebra(const MatrixSpaceSpec& spec);

/// {"spec", "dim", "labels", "symmetry", "field", "constants"}
nlohmann::json export_algebra(const MatrixSpaceSpec& spec, const StructureAlgebra& a);

struct FamilyCheck {
  std::string family;
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  bool passed() const { return mismatches == 0; }
};

/// Compares every basis product of build_algebra(spec) against the closed
/// product formulas for h_n or a_n. The last entry covers pairs whose product
/// must vanish.
std::vector<FamilyCheck> crosscheck_products(const MatrixSpaceSpec& spec);
std::vector<FamilyCheck> crosscheck_products(const MatrixSpaceSpec& spec, const StructureAlgebra& a);

}  // namespace octder
