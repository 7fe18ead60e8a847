#include "doctest.h"

#include <memory>

#include "oracles.hpp"
#include "vosa/constructions.hpp"

using namespace vosa;

namespace {

std::shared_ptr<const LieAlgebraData> sl2() { return std::make_shared<LieAlgebraData>(sl2_basis()); }

void require_all(const std::vector<RelationCheck>& checks) {
  for (const auto& c : checks) {
    INFO(c.relation << ": " << c.result.failure);
    CHECK(c.result.ok);
    CHECK(c.result.checked > 0);
  }
}

}  // namespace

TEST_CASE("closed-form central charges") {
  auto lie = sl2();
  auto cc = central_charges(*lie, Scalar(1), kHalf);
  CHECK(cc.c_total == Scalar::fraction(5, 2));
  CHECK(cc.h == Scalar::fraction(1, 4));
  CHECK(cc.c_total == cc.c_fermion + cc.c_boson);
  CHECK(central_charges(*lie, Scalar(2), HalfInt(1)).h == Scalar::fraction(1, 2));
  CHECK(central_charges(*lie, Scalar(0)).c_total == Scalar::fraction(3, 2));
  for (int l = 0; l <= 40; ++l) CHECK(central_charges(*lie, Scalar(l)).c_boson.approx_real() < 3.0);
  CHECK_THROWS_AS(central_charges(*lie, Scalar(1), HalfInt(1)), std::invalid_argument);
}

TEST_CASE("single fermion VOSA") {
  auto f = fermion_vosa(1);
  GradedModule& m = *f.module;
  CHECK(Scalar(2) * m.inner(f.omega, f.omega) == Scalar::fraction(1, 2));
  auto L = f.fields->field_of_state(f.omega);
  // L_1 L_{-2} Omega = 0 and L_2 L_{-2} Omega = (c/2) Omega.
  const StateVector l2 = L->mode(-1, m.vacuum());
  CHECK(l2 == f.omega);
  CHECK(L->mode(2, l2).empty());
  CHECK(L->mode(3, l2) == StateVector::basis(m.vacuum(), Scalar::fraction(1, 4)));
  CHECK(check_vosa_axioms(f, HalfInt(2)).ok());
}

TEST_CASE("g-fermion currents for sl2") {
  auto sys = g_fermion_system(sl2());
  require_all(check_fermion_currents(sys, HalfInt(1)));
  GradedModule& m = *sys.vosa.module;
  // [S^1_1, S^1_{-1}] Omega = g Omega = 2 Omega.
  const StateVector out = sys.currents[1]->mode(1, sys.currents[1]->mode(-1, m.vacuum()));
  CHECK(out == StateVector::basis(m.vacuum(), Scalar(2)));
  // [S^a_m, psi^a_n] = 0
  for (StateId s : m.basis_up_to(HalfInt(1)))
    for (int a = 0; a < 3; ++a)
      for (int p = -1; p <= 1; ++p)
        for (int q = -1; q <= 1; ++q)
          CHECK(graded_commutator(sys.currents[a], sys.vosa.generators[a], p, q, 0, s).empty());
}

TEST_CASE("boson Sugawara central charges") {
  auto lie = sl2();
  for (auto [l, c] : {std::pair{0, Scalar(0)}, {1, Scalar(1)}, {2, Scalar::fraction(3, 2)}}) {
    auto inst = boson_sugawara(lie, Scalar(l));
    CHECK(inst.central_charge == c);
    require_all(check_sugawara(inst, c, HalfInt(1)));
  }
  auto trivial = boson_sugawara(lie, Scalar(0));
  for (HalfInt g(1); g <= HalfInt(3); g += HalfInt(1)) CHECK(trivial.module->quotient_dim(g) == 0);
}

TEST_CASE("supersymmetric construction for sl2 at level one") {
  auto sc = super_construction(sl2(), Scalar(1));
  CHECK(sc.charges.c_total == Scalar::fraction(5, 2));
  CHECK(sc.sqrt_d * sc.sqrt_d == Scalar(3));
  require_all(check_super_relations(sc, HalfInt(1)));
  GradedModule& m = *sc.vosa.module;
  // S^a_0 tau2 = 0 by antisymmetry.
  for (int a = 0; a < 3; ++a) CHECK(m.is_null(sc.currents[a]->mode(0, sc.tau2)));
  // psi^a_{1/2} tau1 = X^a_{-1} Omega
  for (int a = 0; a < 3; ++a)
    CHECK(m.equal(m.apply(Mode::psi(a, kHalf), sc.tau1), m.apply(Mode::boson(a, -1), sc.vosa.vacuum)));
}

TEST_CASE("the tau2 coefficient is pinned to 1/3") {
  auto sc = super_construction(sl2(), Scalar(1));
  std::vector<Rational> sweep;
  for (int k = -6; k <= 6; ++k) sweep.emplace_back(k, 6);
  sweep.emplace_back(1, 2);
  sweep.emplace_back(2, 3);
  const auto ok = tau2_coefficient_sweep(sc, sweep);
  REQUIRE(ok.size() == 1);
  CHECK(ok[0] == Rational(1, 3));
}

TEST_CASE("level zero reduces to the fermion construction") {
  auto sc = super_construction(sl2(), Scalar(0));
  CHECK(sc.charges.c_total == Scalar::fraction(3, 2));
  require_all(check_super_relations(sc, HalfInt(1), 1));
}

TEST_CASE("vertex modules") {
  auto sc = super_construction(sl2(), Scalar(1));
  auto vm = vertex_module(sc, kHalf);
  CHECK(vm.h == Scalar::fraction(1, 4));
  CHECK(vm.c == Scalar::fraction(5, 2));
  require_all(check_vertex_module(vm, sc, HalfInt(1)));
  CHECK_THROWS_AS(vertex_module(sc, HalfInt(1)), std::invalid_argument);

  auto trivial = vertex_module(sc, HalfInt(0));
  CHECK(trivial.h == Scalar(0));
  for (StateId s : trivial.module->basis_up_to(HalfInt(1)))
    CHECK(trivial.module->equal(trivial.L->mode(1, s), trivial.module->operator_D(StateVector::basis(s))));

  const auto dims = minimal_submodule_dims(*vm.module, {vm.L, vm.G}, StateVector::basis(vm.top), HalfInt(2));
  auto verma = make_ns_verma(vm.c, vm.h);
  const auto want = irreducible_dims(*verma, HalfInt(2));
  REQUIRE(dims.size() == want.size());
  for (std::size_t k = 0; k < dims.size(); ++k) CHECK(dims[k].irreducible == want[k].irreducible);
}

TEST_CASE("minimal Virasoro submodule of the fermion Fock space") {
  auto f = fermion_vosa(1);
  auto L = f.fields->field_of_state(f.omega);
  const auto dims = minimal_submodule_dims(*f.module, {L}, f.vacuum, HalfInt(5));
  const auto want = oracle::ising_vacuum_dims(5);
  for (int t = 0; t <= 10; ++t) CHECK(dims[t].irreducible == static_cast<std::size_t>(want[t]));
}

TEST_CASE("two-cocycle recursion") {
  CHECK(solve_cocycle(1, 2, 6) == std::vector<Rational>{1, 2, 3, 4, 5, 6});
  CHECK(solve_cocycle(1, 8, 5) == std::vector<Rational>{1, 8, 27, 64, 125});
  CHECK(solve_cocycle(0, 6, 5) == std::vector<Rational>{0, 6, 24, 60, 120});
  const auto b = cocycle_basis(12);
  CHECK(b.basis.size() == 2);
  CHECK(b.spans_linear_cubic);
  CHECK(b.pinned_is_cubic_minus_linear);
  CHECK_THROWS_AS(cocycle_basis(2), std::invalid_argument);
}

TEST_CASE("odd cocycle constraint") {
  for (auto c : {Rational(0), Rational(1, 2), Rational(5, 2)}) CHECK(verify_odd_cocycle(c, HalfInt(6)).ok);
  CHECK_FALSE(verify_odd_cocycle(Rational(1, 2), HalfInt(6), [](const Rational& s) { return Rational(s * s); }).ok);
  CHECK(verify_odd_cocycle(Rational(0), HalfInt(3), [](const Rational&) { return Rational(0); }).ok);
}

TEST_CASE("axioms hold for every construction") {
  auto lie = sl2();
  auto g = g_fermion_system(lie);
  CHECK(check_vosa_axioms(g.vosa, HalfInt(1)).ok());
  auto s = boson_sugawara(lie, Scalar(1));
  CHECK(check_vosa_axioms(s, HalfInt(2)).ok());
  auto sc = super_construction(lie, Scalar(1));
  const auto rep = check_vosa_axioms(sc.vosa, HalfInt(1));
  for (const auto& a : rep.axioms) {
    INFO(a.name << ": " << a.result.failure);
    CHECK(a.result.ok);
  }
}
