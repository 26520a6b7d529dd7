#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace linedyn {

// Serializable description of a field instance:
//   {"type":"Q"}
//   {"type":"Fp","p":1013}
//   {"type":"ext","base":{...},"minpoly":["1","-1","3","-1","1"]}   (constant term first)
//   {"type":"ratfun","base":{...},"var":"t"}
struct FieldDescriptor {
  enum class Kind { Q, Fp, Ext, RatFun };

  Kind kind = Kind::Q;
  std::uint64_t p = 0;
  std::shared_ptr<const FieldDescriptor> base;
  std::vector<std::string> minpoly;
  std::string var;

  static FieldDescriptor rationals() { return {}; }
  static FieldDescriptor prime(std::uint64_t p);

  nlohmann::json to_json() const;
  static FieldDescriptor from_json(const nlohmann::json& j);

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b);
};

}  // namespace linedyn
