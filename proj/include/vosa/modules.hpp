#pragma once

#include <memory>
#include <vector>

#include "json.hpp"

#include "vosa/graded_module.hpp"
#include "vosa/lie_data.hpp"

namespace vosa {

using ModulePtr = std::shared_ptr<GradedModule>;

// Fock space of `colors` Neveu-Schwarz fermions.
ModulePtr make_fermion_module(int colors);
// Verma module V(c,h) of the Neveu-Schwarz algebra; c, h must be real.
ModulePtr make_ns_verma(const Scalar& c, const Scalar& h);
// Verma module of the Virasoro algebra alone (no G modes).
ModulePtr make_virasoro_verma(const Scalar& c, const Scalar& h);
// Highest-weight module of the affine algebra at level `level` on the floor
// `floor`; irreducible = true stands for L(V, level). Spin floors other than
// the trivial one exist only for sl2.
ModulePtr make_affine_module(std::shared_ptr<const LieAlgebraData> lie, const Scalar& level, HalfInt spin,
                             bool irreducible = true);
// Tensor product of modules with disjoint mode kinds.
ModulePtr make_tensor(const std::vector<ModulePtr>& factors);

// Builds a module from {"type": "ns_verma"|"virasoro_verma"|"affine"|
// "fermion"|"tensor", ...}. Throws std::invalid_argument when malformed.
ModulePtr module_from_json(const nlohmann::json& descriptor);

struct LevelDims {
  HalfInt level;
  std::size_t verma = 0;
  std::size_t irreducible = 0;
};

// Per level from 0 to up_to in half steps: monomial count and Gram rank.
std::vector<LevelDims> irreducible_dims(GradedModule& module, HalfInt up_to);

struct GhostRow {
  HalfInt level;
  Inertia inertia;
};

// Inertia of the Gram matrix of V(c,h) per level, for rational c, h.
std::vector<GhostRow> ghost_report(const Rational& c, const Rational& h, HalfInt up_to);

}  // namespace vosa
