#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "octder/derivations.hpp"
#include "octder/matalg.hpp"
#include "octder/octonion.hpp"

namespace octder {

/// der(O) computed by the solver; throws InternalError unless it has
/// dimension 14.
DerivationSpace g2_basis(const OctonionAlgebra& o);

/// The map x -> (alpha applied to every entry of x) on the space, in the
/// enumerated basis. alpha must be a derivation of the octonions.
LinearMap embed_entrywise(const LinearMap& alpha, const MatrixSpaceSpec& spec);

/// x -> Ax - xA for an antisymmetric base-field matrix A.
LinearMap embed_adjoint(const std::vector<std::vector<Scalar>>& a, const MatrixSpaceSpec& spec);

/// E_ij - E_ji for i < j, in (i, j) lexicographic order.
std::vector<std::vector<std::vector<Scalar>>> so_generators(const Field& field, int n);

/// Dimension of der(space) predicted by the known theorems: 0 for h_1, 36
/// and 52 for h_2 and h_3, 14 + n(n-1)/2 for h_n (n >= 4) and a_n, 14 + n^2
/// for M_n under xy and xy + yx, 15 + n^2 under xy - yx.
std::size_t expected_derivation_dim(const MatrixSpaceSpec& spec);
/// Whether der(space) should coincide with the embedded g2 + so_n.
bool expects_span_match(const MatrixSpaceSpec& spec);

struct EmbeddingReport {
  MatrixSpaceSpec spec;
  std::size_t algebra_dim = 0;
  std::size_t expected_dim = 0;
  std::size_t computed_dim = 0;
  std::size_t embedded_dim = 0;
  bool generators_are_derivations = false;
  bool contained = false;
  bool span_match = false;
  bool expected_span_match = false;
  bool commuting = false;
  double seconds = 0.0;

  bool passed() const;
  nlohmann::json to_json(bool with_timing = false) const;
};

/// Solves der(space), embeds g2 entrywise and so_n by the adjoint action, and
/// compares. Throws PreconditionError for h_2/h_3 in characteristic three.
EmbeddingReport verify_theorem(const MatrixSpaceSpec& spec, DerivationSpace* computed = nullptr);

}  // namespace octder
