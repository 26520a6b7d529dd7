#include "linedyn/field_descriptor.hpp"

#include "linedyn/errors.hpp"

namespace linedyn {

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  FieldDescriptor d;
  d.kind = Kind::Fp;
  d.p = p;
  return d;
}

nlohmann::json FieldDescriptor::to_json() const {
  switch (kind) {
    case Kind::Q:
      return {{"type", "Q"}};
    case Kind::Fp:
      return {{"type", "Fp"}, {"p", p}};
    case Kind::Ext:
      return {{"type", "ext"}, {"base", base->to_json()}, {"minpoly", minpoly}};
    case Kind::RatFun:
      return {{"type", "ratfun"}, {"base", base->to_json()}, {"var", var}};
  }
  return {};
}

FieldDescriptor FieldDescriptor::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type")) throw ParseError("field descriptor needs a \"type\"");
  std::string type = j.at("type").get<std::string>();
  FieldDescriptor d;
  if (type == "Q") return d;
  if (type == "Fp") {
    d.kind = Kind::Fp;
    d.p = j.at("p").get<std::uint64_t>();
    return d;
  }
  if (type == "ext") {
    d.kind = Kind::Ext;
    d.base = std::make_shared<FieldDescriptor>(from_json(j.at("base")));
    d.minpoly = j.at("minpoly").get<std::vector<std::string>>();
    return d;
  }
  if (type == "ratfun") {
    d.kind = Kind::RatFun;
    d.base = std::make_shared<FieldDescriptor>(from_json(j.at("base")));
    d.var = j.value("var", std::string("t"));
    return d;
  }
  throw ParseError("unknown field type '" + type + "'");
}

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) { return a.to_json() == b.to_json(); }

}  // namespace linedyn
