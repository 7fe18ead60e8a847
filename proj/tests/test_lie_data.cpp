#include "doctest.h"

#include "vosa/json_io.hpp"
#include "vosa/lie_data.hpp"

using namespace vosa;

TEST_CASE("sl2 structure constants") {
  const auto d = sl2_basis();
  CHECK(d.dim() == 3);
  CHECK(d.gamma(0, 1, 2) == Scalar::sqrt(2));
  CHECK(d.gamma(1, 0, 2) == -Scalar::sqrt(2));
  CHECK(d.gamma(0, 0, 2).is_zero());
  CHECK(validate(d).ok());
  CHECK(dual_coxeter(d) == Scalar(2));
}

TEST_CASE("validation catches constructed violations") {
  LieAlgebraData bad("bad", 3);
  bad.set_raw(0, 1, 2, Scalar(1));
  bad.set_raw(1, 0, 2, Scalar(1));
  const auto rep = validate(bad);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.kind == "antisymmetry" && v.indices == std::vector<int>{0, 1, 2}) found = true;
  CHECK(found);

  const auto zero = validate(LieAlgebraData("zero", 3));
  bool jacobi = false, norm = false;
  for (const auto& v : zero.violations) {
    jacobi |= v.kind == "jacobi";
    norm |= v.kind == "normalization";
  }
  CHECK_FALSE(jacobi);
  CHECK(norm);
  CHECK_THROWS_AS(dual_coxeter(LieAlgebraData("zero", 3)), std::domain_error);
}

TEST_CASE("rescaled sl2 fails normalization consistency only through g") {
  // gamma = 2 eps_abc still satisfies every invariant, with g = 4.
  LieAlgebraData d("sl2x", 3);
  d.set_antisymmetric(0, 1, 2, Scalar(2));
  CHECK(validate(d).ok());
  CHECK(dual_coxeter(d) == Scalar(4));
  // Breaking the b-independence of the Casimir column.
  LieAlgebraData skew("skew", 4);
  skew.set_antisymmetric(0, 1, 2, Scalar(1));
  CHECK_FALSE(validate(skew).ok());
  CHECK_THROWS(dual_coxeter(skew));
}

TEST_CASE("Jacobi form matches the standard identity on sl2 orthogonal rotations") {
  // A basis permutation of sl2 is still valid data.
  const auto base = sl2_basis();
  LieAlgebraData p("perm", 3);
  const int perm[3] = {2, 0, 1};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) p.set_raw(perm[a], perm[b], perm[c], base.gamma(a, b, c));
  CHECK(validate(p).ok());
  CHECK(dual_coxeter(p) == Scalar(2));
}

TEST_CASE("Casimir constants") {
  CHECK(casimir_constant_sl2(HalfInt(0)) == Scalar(0));
  CHECK(casimir_constant_sl2(kHalf) == Scalar::fraction(3, 2));
  CHECK(casimir_constant_sl2(HalfInt(1)) == Scalar(4));
  CHECK_THROWS(casimir_constant_sl2(-kHalf));
}

TEST_CASE("catalog table") {
  const auto& rows = catalog();
  REQUIRE(rows.size() == 9);
  CHECK(rows[0].dim_at(1) == 3);
  CHECK(rows[0].dual_coxeter_at(1) == 2);  // A_1 = sl2
  CHECK(rows[0].dual_coxeter_at(4) == 5);
  CHECK(rows[8].family == "G2");
  CHECK(rows[8].dual_coxeter_at(0) == 4);
  CHECK(rows[6].dim_at(0) == 248);
  CHECK(rows[1].dim_at(2) == rows[2].dim_at(2));  // B2 = C2
  CHECK(rows[1].dual_coxeter_at(2) == 3);
  CHECK(rows[2].dual_coxeter_at(2) == 3);
}

TEST_CASE("Lie algebra JSON") {
  const auto j = lie_algebra_to_json(sl2_basis());
  const auto d = lie_algebra_from_json(j);
  CHECK(validate(d).ok());
  CHECK(d.gamma(2, 1, 0) == -Scalar::sqrt(2));
  CHECK_THROWS_AS(lie_algebra_from_json(nlohmann::json::parse(R"({"dim":3,"gamma":[{"a":0,"b":1,"c":7,"val":1}]})")),
                  std::invalid_argument);
}
