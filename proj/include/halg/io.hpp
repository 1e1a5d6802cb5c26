#pragma once

#include <json.hpp>

#include <map>
#include <variant>

#include "halg/catalog.hpp"
#include "halg/globalization.hpp"

namespace halg {

using json = nlohmann::json;

struct ActionObj {
  std::string coalgebra, hopf;
  ActionMap map;
};
struct DualActionObj {
  std::string algebra, hopf;
  DualActionMap map;
};
struct CoactionObj {
  std::string coalgebra, hopf;
  CoactionMap map;
};
struct MapObj {
  std::string from, to;
  LinearMap map;
};

using BundleObject = std::variant<HopfAlgebra, Coalgebra, Algebra, ActionObj,
                                  DualActionObj, CoactionObj, MapObj>;

/// Named collection of structures over one field; the on-disk unit of the
/// CLI. Serialization is canonical: object keys sorted, scalars in canonical
/// string form, so equal bundles dump to identical bytes.
struct Bundle {
  FieldSpec field;
  std::map<std::string, BundleObject> objects;
  json metadata = json::object();

  bool has(const std::string& name) const { return objects.count(name) != 0; }
  const HopfAlgebra& hopf(const std::string& name) const;
  const Coalgebra& coalgebra(const std::string& name) const;
  const Algebra& algebra(const std::string& name) const;
  const ActionObj& action(const std::string& name) const;
  const DualActionObj& dual_action(const std::string& name) const;
  const CoactionObj& coaction(const std::string& name) const;
  const MapObj& linear_map(const std::string& name) const;
};

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);
json matrix_to_json(const LinearMap& m);
LinearMap matrix_from_json(const json& j, const FieldSpec& f);
json report_to_json(const CheckReport& r);

/// Cayley-table form {"order":n, "table":[[...]], "labels":[...]}; group
/// axioms are validated on load.
json group_table_to_json(const GroupTable& g);
GroupTable group_table_from_json(const json& j);
GroupTable load_group_file(const std::string& path);

json bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const json& j);
std::string canonical_dump(const json& j);

Bundle load_bundle_file(const std::string& path);
void write_bundle_file(const Bundle& b, const std::string& path);

FieldSpec parse_field_name(const std::string& name);  // "Q", "F5", ...

}  // namespace halg
