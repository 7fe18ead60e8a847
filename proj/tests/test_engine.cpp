#include "doctest.h"

#include "vosa/engine.hpp"

using namespace vosa;

namespace {

const HalfInt h32 = HalfInt::from_twice(3);

struct FermionFixture {
  ModulePtr f = make_fermion_module(1);
  StateFieldMap V{*f};
  FieldPtr psi = V.generator(ModeKind::fermion);
  StateVector omega = StateVector::basis(f->intern({Mode::psi(0, -h32), Mode::psi(0, -kHalf)}), Scalar::fraction(1, 2));
  FieldPtr L = V.field_of_state(omega);

  VosaInstance instance() {
    VosaInstance inst;
    inst.name = "fermion";
    inst.module = f;
    inst.fields = std::shared_ptr<StateFieldMap>(f, &V);
    inst.generators = {psi};
    inst.vacuum = StateVector::basis(f->vacuum());
    inst.omega = omega;
    inst.central_charge = Scalar::fraction(1, 2);
    return inst;
  }
};

}  // namespace

TEST_CASE("mode windows") {
  const Window w = mode_window(kHalf, HalfInt(2));
  CHECK(w.lo == -2);
  CHECK(w.hi == 1);
  const Window l = mode_window(HalfInt(2), HalfInt(4));
  CHECK(l.lo == -3);
  CHECK(l.hi == 5);
}

TEST_CASE("n-th products of the free fermion") {
  FermionFixture fx;
  const HalfInt depth(3);
  CHECK(fields_agree(nth_product(fx.psi, fx.psi, 0), fx.V.identity(), depth).ok);
  CHECK(fields_agree(nth_product(fx.psi, fx.psi, 1), zero_field(*fx.f), depth).ok);
  CHECK(fields_agree(nth_product(fx.psi, fx.psi, -1), zero_field(*fx.f), depth).ok);
  CHECK(fields_agree(nth_product(fx.psi, fx.psi, -2), scaled(Scalar(2), fx.L), depth).ok);
  CHECK(fx.V.state_of_field(fx.L) == fx.omega);
}

TEST_CASE("locality orders and parities") {
  FermionFixture fx;
  const HalfInt depth(3);
  auto pp = locality_order(fx.psi, fx.psi, depth);
  CHECK(pp.found);
  CHECK(pp.order == 1);
  CHECK(pp.parity == 1);
  auto pl = locality_order(fx.psi, fx.L, depth);
  CHECK(pl.order == 2);
  CHECK(pl.parity == 0);
  auto ll = locality_order(fx.L, fx.L, HalfInt(4));
  CHECK(ll.order == 4);
  CHECK(ll.parity == 0);
  CHECK_FALSE(locality_holds(fx.L, fx.L, 3, 0, HalfInt(4)));
}

TEST_CASE("OPE singular parts reproduce brackets") {
  FermionFixture fx;
  const HalfInt depth(3);
  const auto ope = ope_singular_part(fx.L, fx.L, 4);
  REQUIRE(ope.size() == 4);
  CHECK(fields_agree(ope[0].field, scaled(Scalar::fraction(1, 4), fx.V.identity()), depth).ok);  // c/2
  CHECK(fields_agree(ope[1].field, zero_field(*fx.f), depth).ok);
  CHECK(fields_agree(ope[2].field, scaled(Scalar(2), fx.L), depth).ok);
  CHECK(fields_agree(ope[3].field, derivative(fx.L), depth).ok);
  CHECK(cross_check_bracket(fx.L, fx.L, depth).ok);
  CHECK(cross_check_bracket(fx.psi, fx.L, depth).ok);
  CHECK(cross_check_bracket(fx.psi, fx.psi, depth).ok);

  // [L_m, psi_r] = -(m/2 + r) psi_{m+r} with L_m = L(m+1), psi_r = psi(r-1/2).
  for (StateId s : fx.f->basis_up_to(HalfInt(2)))
    for (int m = -2; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) {
        const HalfInt r = HalfInt(n) + kHalf;
        StateVector got = graded_commutator(fx.L, fx.psi, m + 1, n, 0, s);
        StateVector expect = fx.psi->mode(m + n, s);
        expect.scale(-(Scalar(m) * Scalar::fraction(1, 2) + Scalar(r.to_rational())));
        CHECK(got == expect);
      }
}

TEST_CASE("state-field correspondence round trip") {
  FermionFixture fx;
  for (StateId s : fx.f->basis_up_to(HalfInt(4)))
    CHECK(fx.V.state_of_field(fx.V.field_of_state(s)) == StateVector::basis(s));
}

TEST_CASE("closure of the fermion generator spans the Fock space") {
  FermionFixture fx;
  const auto r = generate_closure(*fx.f, {fx.psi}, HalfInt(3), 5000, HalfInt(2));
  CHECK(r.spans);
  CHECK_FALSE(r.budget_exceeded);
  CHECK(r.local);
  CHECK(r.rank.at(HalfInt(2)) == 1);
  CHECK(r.rank.at(HalfInt(3)) == 1);
  std::size_t total = 0;
  for (HalfInt g(0); g <= HalfInt(3); g += kHalf) total += fx.f->dim(g);
  CHECK(r.fields.size() == total);
}

TEST_CASE("axioms hold for the fermion and fail for perturbed data") {
  FermionFixture fx;
  auto inst = fx.instance();
  const auto rep = check_vosa_axioms(inst, HalfInt(4));
  REQUIRE(rep.axioms.size() == 7);
  for (const auto& a : rep.axioms) {
    INFO(a.name << ": " << a.result.failure);
    CHECK(a.result.ok);
    CHECK(a.result.checked > 0);
  }
  CHECK(rep.ok());

  auto doubled = fx.instance();
  doubled.omega = Scalar(2) * fx.omega;
  const auto bad = check_vosa_axioms(doubled, HalfInt(2));
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.axioms[3].result.ok);

  auto shifted = fx.instance();
  shifted.vacuum = StateVector::basis(fx.f->intern({Mode::psi(0, -kHalf)}));
  const auto wrong = check_vosa_axioms(shifted, HalfInt(2));
  CHECK_FALSE(wrong.axioms[0].result.ok);
  CHECK_FALSE(wrong.axioms[4].result.ok);
}

TEST_CASE("Borcherds identity on sample triples") {
  FermionFixture fx;
  const StateVector p = StateVector::basis(fx.f->intern({Mode::psi(0, -kHalf)}));
  const StateVector p3 = StateVector::basis(fx.f->intern({Mode::psi(0, -h32)}));
  for (StateId v : fx.f->basis_up_to(HalfInt(2))) {
    CHECK(check_borcherds(fx.V, p, p, v, HalfInt(3)).ok);
    CHECK(check_borcherds(fx.V, fx.omega, p, v, HalfInt(3)).ok);
    CHECK(check_borcherds(fx.V, p3, fx.omega, v, HalfInt(3)).ok);
  }
}

TEST_CASE("correlation of two fermions is 1/(z-w)") {
  FermionFixture fx;
  // <Omega, psi(m) psi(n) Omega> = 1 exactly when m = 0, n = -1 in the expansion sum z^{-m-1} w^{-n-1}, |z| > |w|.
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      const Scalar c = fx.f->inner(fx.psi->mode(m, fx.psi->mode(n, fx.f->vacuum())), StateVector::basis(fx.f->vacuum()));
      // 1/(z-w) = sum_{k>=0} w^k z^{-k-1}: m = k, n = -k-1.
      CHECK(c == Scalar(m >= 0 && n == -m - 1 ? 1 : 0));
    }
}

TEST_CASE("D and T agree with L_0 and L_{-1}") {
  FermionFixture fx;
  for (StateId s : fx.f->basis_up_to(HalfInt(3))) {
    const StateVector b = StateVector::basis(s);
    CHECK(fx.L->mode(1, s) == fx.f->operator_D(b));
    CHECK(fx.L->mode(0, s) == fx.f->operator_T(b));
  }
}

TEST_CASE("parity and derivative compatibility") {
  FermionFixture fx;
  CHECK(fx.psi->parity() == 1);
  CHECK(fx.L->parity() == 0);
  CHECK(nth_product(fx.psi, fx.L, 0)->parity() == 1);
  CHECK(nth_product(fx.psi, fx.psi, -2)->parity() == 0);
  const HalfInt depth(3);
  const auto t_psi = fx.V.field_of_state(fx.f->operator_T(StateVector::basis(fx.f->intern({Mode::psi(0, -kHalf)}))));
  CHECK(fields_agree(derivative(fx.psi), t_psi, depth).ok);
  CHECK(fields_agree(nth_product(fx.L, fx.psi, 0), derivative(fx.psi), depth).ok);
}

TEST_CASE("OPE of psi with L and of the identity") {
  FermionFixture fx;
  const HalfInt depth(3);
  const auto ope = ope_singular_part(fx.psi, fx.L, 2);
  REQUIRE(ope.size() == 2);
  CHECK(ope[0].n == 1);
  CHECK(fields_agree(ope[0].field, scaled(Scalar::fraction(1, 2), fx.psi), depth).ok);
  CHECK(fields_agree(ope[1].field, scaled(Scalar::fraction(-1, 2), derivative(fx.psi)), depth).ok);
  const auto id = locality_order(fx.V.identity(), fx.psi, depth);
  CHECK(id.order == 0);
  CHECK(ope_singular_part(fx.V.identity(), fx.psi, id.order).empty());
}

TEST_CASE("closures of smaller generator sets") {
  FermionFixture fx;
  const auto vir = generate_closure(*fx.f, {fx.L}, HalfInt(2));
  CHECK(vir.fields.size() == 2);  // Id and L
  CHECK(fields_agree(vir.fields[1].field, fx.L, HalfInt(2)).ok);
  CHECK_FALSE(vir.spans);  // psi_{-1/2} Omega is missed
  const auto none = generate_closure(*fx.f, {}, HalfInt(2));
  CHECK(none.fields.size() == 1);
  CHECK_FALSE(none.spans);
  const auto tight = generate_closure(*fx.f, {fx.psi}, HalfInt(4), 3);
  CHECK(tight.budget_exceeded);
}
