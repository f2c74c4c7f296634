#include "hermcode/json_io.hpp"

#include <stdexcept>

namespace hermcode {

nlohmann::json field_to_json(const FieldCtx& ctx) {
  return {{"p", ctx.p()}, {"e", ctx.e()}, {"modulus", ctx.modulus()}};
}

FieldCtx field_from_json(const nlohmann::json& j) {
  FieldCtx ctx(j.at("p").get<std::uint32_t>(), j.at("e").get<std::uint32_t>());
  if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint32_t>>() != ctx.modulus())
    throw std::invalid_argument("recorded modulus differs from the canonical one");
  return ctx;
}

nlohmann::json form_to_json(const HomogeneousForm& f) {
  std::vector<std::uint32_t> codes;
  codes.reserve(f.coeffs().size());
  for (auto c : f.coeffs()) codes.push_back(c.code);
  return {{"n", f.n()}, {"d", f.d()}, {"coeffs", codes}};
}

HomogeneousForm form_from_json(const nlohmann::json& j) {
  auto basis = monomial_basis(j.at("n").get<std::size_t>(), j.at("d").get<std::size_t>());
  std::vector<FieldElement> coeffs;
  for (auto c : j.at("coeffs").get<std::vector<std::uint32_t>>()) coeffs.push_back(FieldElement{c});
  return HomogeneousForm(std::move(basis), std::move(coeffs));
}

nlohmann::json bound_to_json(const BoundValue& b) {
  nlohmann::json out;
  out["value"] = b.value ? nlohmann::json(*b.value) : nlohmann::json(nullptr);
  out["provenance"] = to_string(b.provenance);
  out["source"] = b.source;
  return out;
}

nlohmann::json oracle_to_json(const OracleResult& r) {
  return {{"n", r.n},
          {"d", r.d},
          {"points", r.points},
          {"total_forms", r.total_forms},
          {"range", {r.range.begin, r.range.end}},
          {"max_count", r.max_count},
          {"n_maximizers", r.n_maximizers},
          {"maximizers", r.maximizers}};
}

OracleResult oracle_from_json(const nlohmann::json& j) {
  OracleResult r;
  r.n = j.at("n").get<std::size_t>();
  r.d = j.at("d").get<std::size_t>();
  r.points = j.at("points").get<std::uint64_t>();
  r.total_forms = j.at("total_forms").get<std::uint64_t>();
  r.range = {j.at("range").at(0).get<std::uint64_t>(), j.at("range").at(1).get<std::uint64_t>()};
  r.max_count = j.at("max_count").get<std::uint64_t>();
  r.n_maximizers = j.at("n_maximizers").get<std::uint64_t>();
  r.maximizers = j.at("maximizers").get<std::vector<std::uint64_t>>();
  return r;
}

}  // namespace hermcode
