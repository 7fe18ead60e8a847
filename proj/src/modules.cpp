#include "vosa/modules.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vosa/json_io.hpp"

namespace vosa {
namespace {

void require_real(const Scalar& s, const char* what) {
  if (!s.is_real()) throw std::invalid_argument(std::string(what) + " must be real, got " + s.to_string());
}

}  // namespace

ModulePtr make_fermion_module(int colors) {
  if (colors <= 0) throw std::invalid_argument("fermion colors must be positive");
  return std::make_shared<GradedModule>("F_NS^" + std::to_string(colors), std::make_shared<FermionAlgebra>(colors),
                                        Floor::trivial(), false);
}

ModulePtr make_ns_verma(const Scalar& c, const Scalar& h) {
  require_real(c, "c");
  require_real(h, "h");
  return std::make_shared<GradedModule>("V(" + c.to_string() + ", " + h.to_string() + ")",
                                        std::make_shared<NeveuSchwarzAlgebra>(c, true), Floor::highest_weight(h),
                                        false);
}

ModulePtr make_virasoro_verma(const Scalar& c, const Scalar& h) {
  require_real(c, "c");
  require_real(h, "h");
  return std::make_shared<GradedModule>("Vir(" + c.to_string() + ", " + h.to_string() + ")",
                                        std::make_shared<NeveuSchwarzAlgebra>(c, false), Floor::highest_weight(h),
                                        false);
}

ModulePtr make_affine_module(std::shared_ptr<const LieAlgebraData> lie, const Scalar& level, HalfInt spin,
                             bool irreducible) {
  require_real(level, "level");
  Floor floor;
  if (spin != HalfInt(0)) {
    if (lie->name() != "sl2" || lie->dim() != 3) throw std::invalid_argument("spin floors are only built for sl2");
    if (level.is_rational() && Rational(spin.twice()) > level.rational())
      throw std::invalid_argument("spin " + spin.to_string() + " exceeds level/2");
    floor = Floor::sl2_spin(spin);
  }
  const std::string name = std::string(irreducible ? "L" : "M") + "(V_" + spin.to_string() + ", " +
                           level.to_string() + ")";
  return std::make_shared<GradedModule>(name, std::make_shared<AffineAlgebra>(std::move(lie), level),
                                        std::move(floor), irreducible);
}

ModulePtr make_tensor(const std::vector<ModulePtr>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty tensor product");
  std::vector<std::shared_ptr<const ModeAlgebra>> parts;
  std::set<ModeKind> kinds;
  Floor floor;
  bool irreducible = false;
  std::string name;
  for (const auto& f : factors) {
    std::set<ModeKind> own;
    for (const auto& fam : f->algebra().families()) own.insert(fam.kind);
    for (auto k : own)
      if (!kinds.insert(k).second)
        throw std::invalid_argument("tensor factors share mode kind " + std::string(kind_name(k)));
    parts.push_back(f->algebra_ptr());
    floor = Floor::tensor(floor, f->floor());
    irreducible = irreducible || f->irreducible();
    name += (name.empty() ? "" : " (x) ") + f->name();
  }
  return std::make_shared<GradedModule>(name, std::make_shared<DirectSumAlgebra>(std::move(parts)), std::move(floor),
                                        irreducible);
}

ModulePtr module_from_json(const nlohmann::json& d) {
  try {
    const std::string type = d.at("type").get<std::string>();
    if (type == "ns_verma") return make_ns_verma(scalar_from_json(d.at("c")), scalar_from_json(d.at("h")));
    if (type == "virasoro_verma") return make_virasoro_verma(scalar_from_json(d.at("c")), scalar_from_json(d.at("h")));
    if (type == "fermion") return make_fermion_module(d.value("colors", 1));
    if (type == "affine") {
      std::shared_ptr<const LieAlgebraData> lie;
      const auto& alg = d.at("algebra");
      if (alg.is_string()) {
        if (alg.get<std::string>() != "sl2") throw std::invalid_argument("only sl2 ships built in; pass algebra JSON");
        lie = std::make_shared<LieAlgebraData>(sl2_basis());
      } else {
        lie = std::make_shared<LieAlgebraData>(lie_algebra_from_json(alg));
        if (!validate(*lie).ok()) throw std::invalid_argument("algebra fails validation");
      }
      const HalfInt spin = d.contains("spin") ? half_int_from_json(d.at("spin")) : HalfInt(0);
      return make_affine_module(lie, scalar_from_json(d.at("level")), spin, d.value("irreducible", true));
    }
    if (type == "tensor") {
      std::vector<ModulePtr> factors;
      for (const auto& f : d.at("factors")) factors.push_back(module_from_json(f));
      return make_tensor(factors);
    }
    throw std::invalid_argument("unknown module type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed module descriptor: ") + e.what());
  }
}

std::vector<LevelDims> irreducible_dims(GradedModule& module, HalfInt up_to) {
  std::vector<LevelDims> out;
  for (HalfInt g(0); g <= up_to; g += kHalf) out.push_back({g, module.dim(g), module.quotient_dim(g)});
  return out;
}

std::vector<GhostRow> ghost_report(const Rational& c, const Rational& h, HalfInt up_to) {
  auto m = make_ns_verma(Scalar(c), Scalar(h));
  std::vector<GhostRow> out;
  for (HalfInt g(0); g <= up_to; g += kHalf) out.push_back({g, inertia(m->gram(g))});
  return out;
}

}  // namespace vosa
