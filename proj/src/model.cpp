#include "bcint/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "json.hpp"

#include "bcint/error.hpp"
#include "bcint/normalize.hpp"
#include "json_util.hpp"

namespace bcint {

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kEntity: return "entity";
    case ComponentKind::kProcess: return "process";
    case ComponentKind::kUtility: return "utility";
    case ComponentKind::kData: return "data";
  }
  return "entity";
}

std::string_view to_string(ElementKind kind) {
  return kind == ElementKind::kAttribute ? "attribute" : "operation";
}

std::optional<ComponentKind> parse_component_kind(std::string_view literal) {
  const std::string folded = normalize(literal);
  for (auto k : {ComponentKind::kEntity, ComponentKind::kProcess, ComponentKind::kUtility,
                 ComponentKind::kData}) {
    if (folded == to_string(k)) return k;
  }
  return std::nullopt;
}

void ComponentSet::append(const ComponentSet& other) {
  for (const auto& s : other.systems) {
    if (std::find(systems.begin(), systems.end(), s) == systems.end()) systems.push_back(s);
  }
  components.insert(components.end(), other.components.begin(), other.components.end());
}

std::string describe(const Violation& v) { return v.field + ": " + v.rule; }

namespace {

void check_elements(const std::vector<Element>& elements, std::string_view field,
                    ElementKind expected, std::vector<Violation>& out) {
  std::set<std::string> seen;
  std::set<std::string> reported;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    const std::string where = std::string(field) + "[" + std::to_string(i) + "]";
    if (e.element_kind != expected) {
      out.push_back({where, "element kind must be " + std::string(to_string(expected))});
    }
    std::string key = normalize(e.name);
    if (key.empty()) {
      out.push_back({where + ".name", "must be non-empty after normalization"});
      continue;
    }
    if (!seen.insert(key).second && reported.insert(key).second) {
      out.push_back({std::string(field), "duplicate element name '" + key + "'"});
    }
  }
}

}  // namespace

std::vector<Violation> validate_component(const BusinessComponent& bc) {
  std::vector<Violation> out;
  if (normalize(bc.name).empty()) {
    out.push_back({"name", "must be non-empty after normalization"});
  }
  if (normalize(bc.system_id).empty()) {
    out.push_back({"system_id", "must be non-empty"});
  }
  check_elements(bc.attributes, "attributes", ElementKind::kAttribute, out);
  check_elements(bc.operations, "operations", ElementKind::kOperation, out);
  return out;
}

void check_unique_names(const ComponentSet& set) {
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::string> dups;
  for (const auto& bc : set.components) {
    if (!seen.emplace(bc.system_id, normalize(bc.name)).second) {
      dups.push_back("component '" + bc.name + "' appears more than once in system '" +
                     bc.system_id + "'");
    }
  }
  if (!dups.empty()) {
    throw Error(ErrorCode::kUniqueness, "component names must be unique per system",
                std::move(dups));
  }
}

namespace {

using nlohmann::json;

std::vector<Element> read_elements(const json& node, const std::string& path, ElementKind kind) {
  std::vector<Element> out;
  if (node.is_null()) return out;
  const auto& arr = detail::expect_array(node, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = path + "[" + std::to_string(i) + "]";
    const auto& obj = detail::expect_object(arr[i], where);
    Element e;
    e.name = detail::required_string(obj, "name", where);
    e.element_kind = kind;
    e.value_type = detail::optional_string(obj, "type", where);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> read_names(const json& node, const std::string& path) {
  std::vector<std::string> out;
  if (node.is_null()) return out;
  const auto& arr = detail::expect_array(node, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(detail::expect_string(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

ComponentSet parse_component_set(std::string_view document) {
  const json root = detail::parse_json(document);
  const auto& top = detail::expect_object(root, "document");

  ComponentSet set;
  const std::string system = detail::required_string(top, "system", "document");
  set.systems.push_back(system);

  const json& comps = detail::member(top, "components");
  if (!comps.is_null()) {
    const auto& arr = detail::expect_array(comps, "components");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "components[" + std::to_string(i) + "]";
      const auto& obj = detail::expect_object(arr[i], where);
      BusinessComponent bc;
      bc.system_id = system;
      bc.name = detail::required_string(obj, "name", where);
      const std::string kind = detail::required_string(obj, "kind", where);
      auto parsed = parse_component_kind(kind);
      if (!parsed) {
        throw Error(ErrorCode::kValidation,
                    where + ".kind: unknown kind '" + kind +
                        "' (legal kinds: entity, process, utility, data)");
      }
      bc.kind = *parsed;
      bc.attributes = read_elements(detail::member(obj, "attributes"), where + ".attributes",
                                    ElementKind::kAttribute);
      bc.operations = read_elements(detail::member(obj, "operations"), where + ".operations",
                                    ElementKind::kOperation);
      bc.provided_interfaces = read_names(detail::member(obj, "provides"), where + ".provides");
      bc.required_interfaces = read_names(detail::member(obj, "requires"), where + ".requires");
      set.components.push_back(std::move(bc));
    }
  }

  std::vector<std::string> problems;
  for (std::size_t i = 0; i < set.components.size(); ++i) {
    for (const auto& v : validate_component(set.components[i])) {
      problems.push_back("components[" + std::to_string(i) + "] '" + set.components[i].name +
                         "': " + describe(v));
    }
  }
  if (!problems.empty()) {
    throw Error(ErrorCode::kValidation, "component document violates invariants",
                std::move(problems));
  }
  check_unique_names(set);
  return set;
}

namespace {

nlohmann::ordered_json elements_json(const std::vector<Element>& elements) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : elements) {
    nlohmann::ordered_json o;
    o["name"] = e.name;
    if (e.value_type) o["type"] = *e.value_type;
    arr.push_back(std::move(o));
  }
  return arr;
}

}  // namespace

std::string serialize_component_set(const ComponentSet& set) {
  if (set.systems.size() != 1) {
    throw Error(ErrorCode::kValidation,
                "a component document holds exactly one system, got " +
                    std::to_string(set.systems.size()));
  }
  nlohmann::ordered_json doc;
  doc["system"] = set.systems.front();
  auto comps = nlohmann::ordered_json::array();
  for (const auto& bc : set.components) {
    if (bc.system_id != set.systems.front()) {
      throw Error(ErrorCode::kValidation, "component '" + bc.name + "' belongs to system '" +
                                              bc.system_id + "', not '" +
                                              set.systems.front() + "'");
    }
    nlohmann::ordered_json c;
    c["name"] = bc.name;
    c["kind"] = to_string(bc.kind);
    c["attributes"] = elements_json(bc.attributes);
    c["operations"] = elements_json(bc.operations);
    c["provides"] = bc.provided_interfaces;
    c["requires"] = bc.required_interfaces;
    comps.push_back(std::move(c));
  }
  doc["components"] = std::move(comps);
  return doc.dump(2) + "\n";
}

}  // namespace bcint
