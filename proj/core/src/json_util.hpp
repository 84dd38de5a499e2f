#pragma once

#include <json.hpp>

#include "leiblab/subspace.hpp"

namespace leiblab::detail {

using nlohmann::json;

inline json field_to_json(const FieldDescriptor& f) {
  switch (f.kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::GaussianRationals: return "Q(i)";
    case FieldKind::PrimeField: return json{{"GF", f.characteristic}};
  }
  throw std::logic_error("unknown field kind");
}

inline FieldDescriptor field_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q") return FieldDescriptor::rationals();
    if (s == "Q(i)") return FieldDescriptor::gaussian_rationals();
    throw std::invalid_argument("unknown field name '" + s + "' (expected \"Q\", \"Q(i)\" or {\"GF\": p})");
  }
  if (j.is_object() && j.contains("GF") && j["GF"].is_number_unsigned())
    return FieldDescriptor::prime_field(j["GF"].get<std::uint64_t>());
  throw std::invalid_argument("malformed field descriptor");
}

inline json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

inline Vec vec_from_json(const json& j, FieldDescriptor f) {
  Vec v;
  for (const auto& e : j) v.push_back(Scalar::parse(e.get<std::string>(), f));
  return v;
}

inline json subspace_to_json(const Subspace& s) {
  json out = json::array();
  for (const auto& row : s.basis()) out.push_back(vec_to_json(row));
  return out;
}

inline Subspace subspace_from_json(const json& j, FieldDescriptor f, std::size_t ambient) {
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r, f));
  return Subspace::span(f, ambient, rows);
}

}  // namespace leiblab::detail
