#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "vosa/engine.hpp"
#include "vosa/lie_data.hpp"
#include "vosa/modules.hpp"

namespace vosa {

struct CentralCharges {
  Scalar c_fermion;
  Scalar c_boson;
  Scalar c_total;
  Scalar h;
};

// Closed forms: c_fermion = dim/2, c_boson = l dim/(l+g), h = c_V/(2(l+g)).
// Non-trivial floors are only known for sl2 (spin j, Casimir 2j(j+1)).
CentralCharges central_charges(const LieAlgebraData& lie, const Scalar& level, HalfInt spin = HalfInt(0));

// One named relation checked at a truncation depth.
struct RelationCheck {
  std::string relation;
  HalfInt depth;
  CheckResult result;
};

bool all_pass(const std::vector<RelationCheck>& checks);

// N fermions on F_NS^N with omega = 1/2 sum_a psi^a_{-3/2} psi^a_{-1/2} Omega.
VosaInstance fermion_vosa(int colors = 1);

struct FermionSystem {
  std::shared_ptr<const LieAlgebraData> lie;
  VosaInstance vosa;
  std::vector<StateVector> s;      // s^c = -(i/2) sum Gamma_ab^c psi^a_{-1/2} psi^b_{-1/2} Omega
  std::vector<FieldPtr> currents;  // S^c = V(s^c)
};

FermionSystem g_fermion_system(std::shared_ptr<const LieAlgebraData> lie);

// Affine relations of the currents at level g, the action on psi, sum (S^a_{-1})^2 Omega = 4g omega.
std::vector<RelationCheck> check_fermion_currents(FermionSystem& sys, HalfInt depth);

// Sugawara vector (1/(2(l+g))) sum_a (X^a_{-1})^2 Omega on L(V_0, l).
VosaInstance boson_sugawara(std::shared_ptr<const LieAlgebraData> lie, const Scalar& level);

std::vector<RelationCheck> check_sugawara(VosaInstance& inst, const Scalar& closed_form_c, HalfInt depth);

struct SuperConstruction {
  std::shared_ptr<const LieAlgebraData> lie;
  Scalar level;
  Scalar d;  // l + g
  Scalar sqrt_d;
  VosaInstance vosa;
  CentralCharges charges;
  std::vector<StateVector> s;
  StateVector tau1, tau2;
  std::vector<FieldPtr> psi, x, currents, b;  // B^a = X^a + S^a
  FieldPtr L, G;
};

// L(V_0, l) tensor F_NS^dim with tau = (l+g)^{-1/2}(tau1 + tau2). At l = 0 the
// affine factor is trivial and the construction is the pure fermion one.
SuperConstruction super_construction(std::shared_ptr<const LieAlgebraData> lie, const Scalar& level);

// The Neveu-Schwarz OPEs and brackets, adjoints, and the boson-fermion
// supersymmetry brackets, for mode indices |m| <= max_mode.
std::vector<RelationCheck> check_super_relations(SuperConstruction& sc, HalfInt depth, int max_mode = 2);

// Coefficients k for which psi^a_{1/2} (k sum_b psi^b_{-1/2} s^b) = s^a for every a.
std::vector<Rational> tau2_coefficient_sweep(SuperConstruction& sc, const std::vector<Rational>& candidates);

struct VertexModule {
  HalfInt spin;
  ModulePtr module;  // L(V_j, l) tensor F_NS^dim
  Scalar c, h;
  StateId top;  // Omega^lambda
  FieldPtr L, G;
  std::vector<FieldPtr> psi, x, b;
};

// Throws std::invalid_argument outside the category (2j > l).
VertexModule vertex_module(SuperConstruction& vacuum, HalfInt spin);

// Module axioms: V(Omega) = Id, n-th products transported from the vacuum
// algebra, Neveu-Schwarz relations with adjoints, L_0 and L_{-1}
// commutators, pairwise locality of the generators, and D = L_0 - h Id.
std::vector<RelationCheck> check_vertex_module(VertexModule& vm, SuperConstruction& vacuum, HalfInt depth);

// Per-level dimensions of the span of words in the given fields' creation
// modes applied to start (rank in the quotient for irreducible modules).
std::vector<LevelDims> minimal_submodule_dims(GradedModule& module, const std::vector<FieldPtr>& fields,
                                              const StateVector& start, HalfInt depth);

// Solution of (n-1)A(n+1) = (n+2)A(n) - (2n+1)A(1) from free A(1), A(2); entry k is A(k+1).
std::vector<Rational> solve_cocycle(const Rational& a1, const Rational& a2, int depth);

struct CocycleBasis {
  int depth = 0;
  std::vector<std::vector<Rational>> basis;  // from (1,0) and (0,1)
  bool spans_linear_cubic = false;           // span equals span{n, n^3}
  bool pinned_is_cubic_minus_linear = false; // A(1) = 0 forces A(n) = b(n^3 - n)
};

CocycleBasis cocycle_basis(int depth);

using OddCocycle = std::function<Rational(const Rational&)>;

// (c/6)(n^3-n) + (s-n/2)C(r) + (r-n/2)C(s) = 0 at r+s+n = 0, half-odd |r|,|s| <= depth,
// with C(s) = (c/3)(s^2 - 1/4) unless another C is given.
CheckResult verify_odd_cocycle(const Rational& c, HalfInt depth, OddCocycle C = nullptr);

}  // namespace vosa
