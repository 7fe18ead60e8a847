#include "vosa/json_io.hpp"

#include <stdexcept>

namespace vosa {
namespace {

Rational rational_from_text(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("not a rational: '" + text + "'");
  q.canonicalize();
  return q;
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace

nlohmann::json scalar_to_json(const Scalar& s) {
  auto out = nlohmann::json::array();
  for (const auto& t : s.terms()) {
    nlohmann::json term;
    const auto& num = t.coef.get_num();
    const auto& den = t.coef.get_den();
    term["num"] = num.fits_slong_p() ? nlohmann::json(num.get_si()) : nlohmann::json(num.get_str());
    term["den"] = den.fits_slong_p() ? nlohmann::json(den.get_si()) : nlohmann::json(den.get_str());
    term["rad"] = t.rad;
    out.push_back(std::move(term));
  }
  return out;
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  if (j.is_string()) return Scalar(rational_from_text(j.get<std::string>()));
  if (!j.is_array()) throw std::invalid_argument("scalar must be a term list, integer or rational string");
  Scalar out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("num")) throw std::invalid_argument("bad scalar term " + t.dump());
    const mpz_class num = integer_from_json(t.at("num"));
    const mpz_class den = t.contains("den") ? integer_from_json(t.at("den")) : mpz_class(1);
    const std::int64_t rad = t.contains("rad") ? t.at("rad").get<std::int64_t>() : 1;
    if (den == 0 || rad == 0) throw std::invalid_argument("bad scalar term " + t.dump());
    Rational q(num, den);
    q.canonicalize();
    out += Scalar(q) * Scalar::sqrt(rad);
  }
  return out;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  auto out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

LieAlgebraData lie_algebra_from_json(const nlohmann::json& j) {
  try {
    const int dim = j.at("dim").get<int>();
    LieAlgebraData d(j.value("name", std::string("custom")), dim);
    for (const auto& e : j.at("gamma")) {
      const int a = e.at("a").get<int>(), b = e.at("b").get<int>(), c = e.at("c").get<int>();
      if (a < 0 || b < 0 || c < 0 || a >= dim || b >= dim || c >= dim)
        throw std::invalid_argument("gamma index out of range: " + e.dump());
      d.set_antisymmetric(a, b, c, scalar_from_json(e.at("val")));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed Lie algebra JSON: ") + e.what());
  }
}

nlohmann::json lie_algebra_to_json(const LieAlgebraData& d) {
  auto gamma = nlohmann::json::array();
  for (int a = 0; a < d.dim(); ++a)
    for (int b = a + 1; b < d.dim(); ++b)
      for (int c = b + 1; c < d.dim(); ++c)
        if (!d.gamma(a, b, c).is_zero())
          gamma.push_back({{"a", a}, {"b", b}, {"c", c}, {"val", scalar_to_json(d.gamma(a, b, c))}});
  return {{"name", d.name()}, {"dim", d.dim()}, {"gamma", gamma}};
}

HalfInt half_int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return HalfInt(j.get<int>());
  if (j.is_number()) return HalfInt::parse(std::to_string(j.get<double>()));
  if (j.is_string()) return HalfInt::parse(j.get<std::string>());
  throw std::invalid_argument("expected a half-integer, got " + j.dump());
}

}  // namespace vosa
