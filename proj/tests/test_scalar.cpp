#include "doctest.h"

#include <random>

#include "vosa/half_int.hpp"
#include "vosa/json_io.hpp"
#include "vosa/scalar.hpp"

using vosa::HalfInt;
using vosa::Scalar;

namespace {

Scalar random_scalar(std::mt19937& rng) {
  static const std::int64_t rads[] = {1, 2, 3, -1, 6, -2};
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 3), pick(0, 5), count(0, 3);
  Scalar s;
  for (int k = count(rng); k > 0; --k) s += Scalar::fraction(coef(rng), den(rng)) * Scalar::sqrt(rads[pick(rng)]);
  return s;
}

}  // namespace

TEST_CASE("scalar arithmetic examples") {
  const Scalar r2 = Scalar::sqrt(2), i = Scalar::i();
  CHECK((Scalar(1) + r2) + (Scalar(1) - r2) == Scalar(2));
  CHECK(Scalar() + r2 == r2);
  CHECK(Scalar::fraction(1, 2) * r2 + Scalar::fraction(1, 2) * r2 == r2);
  CHECK(r2 * r2 == Scalar(2));
  CHECK(i * i == Scalar(-1));
  CHECK((Scalar(1) + r2) * (Scalar(1) - r2) == Scalar(-1));
  CHECK(r2.inv() == Scalar::fraction(1, 2) * r2);
  CHECK(i.inv() == -i);
  CHECK(Scalar(3).inv() == Scalar::fraction(1, 3));
  CHECK(i.conj() == -i);
  CHECK(r2.conj() == r2);
  CHECK((Scalar(2) + Scalar(3) * i).conj() == Scalar(2) - Scalar(3) * i);
  CHECK(Scalar::sqrt(2) * Scalar::sqrt(3) == Scalar::sqrt(6));
  CHECK(Scalar::sqrt(-2) == i * r2);
  CHECK(Scalar::sqrt(12) == Scalar(2) * Scalar::sqrt(3));
  CHECK(Scalar::sqrt(vosa::Rational(1, 3)) == Scalar::fraction(1, 3) * Scalar::sqrt(3));
  CHECK_THROWS_AS(Scalar().inv(), std::domain_error);
}

TEST_CASE("scalar rendering") {
  CHECK(Scalar().to_string() == "0");
  CHECK((Scalar::fraction(1, 2) * Scalar::sqrt(2) - Scalar(3) * Scalar::i()).to_string() == "-3*i + 1/2*sqrt(2)");
  CHECK((-Scalar::sqrt(3)).to_string() == "-sqrt(3)");
}

TEST_CASE("scalar field axioms on random elements") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
    if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("conj(a)*a of a complex rational is a non-negative rational") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const Scalar a = Scalar(coef(rng)) + Scalar(coef(rng)) * Scalar::i();
    const Scalar n = a.conj() * a;
    REQUIRE(n.is_rational());
    CHECK(n.sign() >= 0);
  }
}

TEST_CASE("scalar JSON round trip") {
  const Scalar s = Scalar::fraction(1, 2) * Scalar::sqrt(2);
  CHECK(vosa::scalar_to_json(s).dump() == R"([{"den":2,"num":1,"rad":2}])");
  CHECK(vosa::scalar_to_json(Scalar()).dump() == "[]");
  std::mt19937 rng(3);
  for (int k = 0; k < 30; ++k) {
    const Scalar a = random_scalar(rng);
    CHECK(vosa::scalar_from_json(vosa::scalar_to_json(a)) == a);
  }
  CHECK(vosa::scalar_from_json("5/2") == Scalar::fraction(5, 2));
  CHECK_THROWS_AS(vosa::scalar_from_json(nlohmann::json::parse(R"([{"num":1,"den":0}])")), std::invalid_argument);
}

TEST_CASE("half integers") {
  CHECK(HalfInt::parse("3/2").twice() == 3);
  CHECK(HalfInt::parse("-1/2").twice() == -1);
  CHECK(HalfInt::parse("2") == HalfInt(2));
  CHECK(HalfInt::parse("0.5") == vosa::kHalf);
  CHECK_THROWS(HalfInt::parse("1/3"));
  CHECK_THROWS(HalfInt::parse("abc"));
  CHECK(HalfInt::from_twice(-3).floor() == -2);
  CHECK(HalfInt::from_twice(-3).ceil() == -1);
  CHECK(HalfInt::from_twice(3).floor() == 1);
  CHECK(HalfInt::from_twice(5).to_string() == "5/2");
}
