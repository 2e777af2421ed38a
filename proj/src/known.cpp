#include "octder/known.hpp"

#include <chrono>

namespace octder {

DerivationSpace g2_basis(const OctonionAlgebra& o) {
  auto space = solve_derivations(as_structure_algebra(o));
  if (space.dim() != 14) {
    throw InternalError("der(O) has dimension " + std::to_string(space.dim()) + ", expected 14");
  }
  return space;
}

LinearMap embed_entrywise(const LinearMap& alpha, const MatrixSpaceSpec& spec) {
  spec.validate();
  const OctonionAlgebra o(spec.field, spec.oct_type);
  if (alpha.dim() != 8 || alpha.field() != spec.field) {
    throw PreconditionError("alpha must be an 8x8 map over the space's field");
  }
  if (!is_derivation(as_structure_algebra(o), alpha)) {
    throw PreconditionError("alpha is not a derivation of the octonions");
  }
  const auto basis = basis_enumerate(spec);
  const std::size_t d = basis.size();
  LinearMap out(spec.field, d);
  for (std::size_t k = 0; k < d; ++k) {
    OctMatrix image = basis[k].matrix;
    for (int i = 0; i < spec.n; ++i) {
      for (int j = 0; j < spec.n; ++j) {
        const auto& entry = basis[k].matrix(i, j);
        if (entry.is_zero()) continue;
        const auto mapped = alpha.apply(std::vector<Scalar>(entry.coords().begin(), entry.coords().end()));
        std::array<Scalar, 8> c;
        std::copy(mapped.begin(), mapped.end(), c.begin());
        image(i, j) = OctonionElement(o, std::move(c));
      }
    }
    const auto coords = coordinates(spec, image);
    for (std::size_t l = 0; l < d; ++l) out(l, k) = coords[l];
  }
  return out;
}

LinearMap embed_adjoint(const std::vector<std::vector<Scalar>>& a, const MatrixSpaceSpec& spec) {
  spec.validate();
  const int n = spec.n;
  if (a.size() != static_cast<std::size_t>(n)) throw PreconditionError("A must be n x n");
  for (int i = 0; i < n; ++i) {
    if (a[i].size() != static_cast<std::size_t>(n)) throw PreconditionError("A must be n x n");
    for (int j = 0; j < n; ++j) {
      if (a[i][j].field() != spec.field) throw PreconditionError("A has entries in the wrong field");
      if (a[i][j] != -a[j][i]) throw PreconditionError("A is not antisymmetric");
    }
  }
  const OctonionAlgebra o(spec.field, spec.oct_type);
  OctMatrix am(o, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a[i][j].is_zero()) continue;
      auto e = o.unit();
      e *= a[i][j];
      am(i, j) = e;
    }
  }
  const auto basis = basis_enumerate(spec);
  const std::size_t d = basis.size();
  LinearMap out(spec.field, d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto image = matmul_oct(am, basis[k].matrix) - matmul_oct(basis[k].matrix, am);
    const auto coords = coordinates(spec, image);
    for (std::size_t l = 0; l < d; ++l) out(l, k) = coords[l];
  }
  return out;
}

std::vector<std::vector<std::vector<Scalar>>> so_generators(const Field& field, int n) {
  std::vector<std::vector<std::vector<Scalar>>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, Scalar::zero(field)));
      a[i][j] = Scalar::one(field);
      a[j][i] = -Scalar::one(field);
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::size_t expected_derivation_dim(const MatrixSpaceSpec& spec) {
  const std::size_t n = static_cast<std::size_t>(spec.n);
  const std::size_t so_n = n * (n - 1) / 2;
  switch (spec.kind) {
    case SpaceKind::HermitianAnticommutator:
      if (n == 1) return 0;
      if (n == 2) return 36;
      if (n == 3) return 52;
      return 14 + so_n;
    case SpaceKind::AntihermitianCommutator: return 14 + so_n;
    case SpaceKind::FullStandard:
    case SpaceKind::FullAnticommutator: return 14 + n * n;
    case SpaceKind::FullCommutator: return 15 + n * n;
  }
  return 0;
}

bool expects_span_match(const MatrixSpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceKind::HermitianAnticommutator: return spec.n == 1 || spec.n >= 4;
    case SpaceKind::AntihermitianCommutator: return true;
    default: return false;
  }
}

bool EmbeddingReport::passed() const {
  return computed_dim == expected_dim && generators_are_derivations && contained && commuting &&
         span_match == expected_span_match;
}

nlohmann::json EmbeddingReport::to_json(bool with_timing) const {
  nlohmann::json j = {{"spec", spec.to_json()},
                      {"algebra_dim", algebra_dim},
                      {"expected_dim", expected_dim},
                      {"computed_dim", computed_dim},
                      {"embedded_dim", embedded_dim},
                      {"generators_are_derivations", generators_are_derivations},
                      {"contained", contained},
                      {"span_match", span_match},
                      {"expected_span_match", expected_span_match},
                      {"commuting", commuting},
                      {"passed", passed()}};
  if (with_timing) j["seconds"] = seconds;
  return j;
}

EmbeddingReport verify_theorem(const MatrixSpaceSpec& spec, DerivationSpace* computed) {
  spec.validate();
  if (spec.kind == SpaceKind::HermitianAnticommutator && (spec.n == 2 || spec.n == 3) &&
      !spec.field.is_rational() && spec.field.characteristic() == 3) {
    throw PreconditionError("h2/h3 derivation theorems require characteristic not three");
  }
  const auto start = std::chrono::steady_clock::now();

  EmbeddingReport r;
  r.spec = spec;
  r.expected_dim = expected_derivation_dim(spec);
  r.expected_span_match = expects_span_match(spec);

  const auto algebra = build_algebra(spec);
  r.algebra_dim = algebra.dim();
  const auto der = solve_derivations(algebra);
  r.computed_dim = der.dim();

  const auto g2 = g2_basis(OctonionAlgebra(spec.field, spec.oct_type)).maps();
  std::vector<LinearMap> entrywise, adjoint;
  for (const auto& alpha : g2) entrywise.push_back(embed_entrywise(alpha, spec));
  for (const auto& a : so_generators(spec.field, spec.n)) adjoint.push_back(embed_adjoint(a, spec));

  std::vector<std::vector<Scalar>> flats;
  r.generators_are_derivations = true;
  r.contained = true;
  for (const auto* group : {&entrywise, &adjoint}) {
    for (const auto& m : *group) {
      if (!is_derivation(algebra, m)) r.generators_are_derivations = false;
      if (!der.basis.contains(m.flat())) r.contained = false;
      flats.push_back(m.flat());
    }
  }
  const auto embedded = EchelonBasis::from_vectors(spec.field, algebra.dim() * algebra.dim(), flats);
  r.embedded_dim = embedded.dim();
  r.span_match = span_equal(embedded, der.basis);

  r.commuting = true;
  for (const auto& g : entrywise) {
    for (const auto& a : adjoint) {
      if (!bracket(g, a).is_zero()) r.commuting = false;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (computed) *computed = der;
  return r;
}

}  // namespace octder
