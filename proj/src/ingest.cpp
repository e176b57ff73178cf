#include "bcint/ingest.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "bcint/error.hpp"

namespace bcint {

namespace {

namespace pt = boost::property_tree;

constexpr const char* kAttrKey = "<xmlattr>";

bool is_markup_key(const std::string& key) {
  return key == "<xmlcomment>" || key == "<xmltext>";
}

class Importer {
 public:
  std::vector<std::string> warnings;

  std::optional<std::string> attr(const pt::ptree& node, const char* name) {
    if (auto attrs = node.get_child_optional(kAttrKey)) {
      if (auto v = attrs->get_optional<std::string>(name)) return *v;
    }
    return std::nullopt;
  }

  void warn_unknown_attrs(const pt::ptree& node, std::initializer_list<std::string_view> known,
                          const std::string& where) {
    auto attrs = node.get_child_optional(kAttrKey);
    if (!attrs) return;
    for (const auto& [key, value] : *attrs) {
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        warnings.push_back("unknown attribute '" + key + "' on " + where + " ignored");
      }
    }
  }

  std::string required_name(const pt::ptree& node, const std::string& where) {
    auto name = attr(node, "name");
    if (!name) throw Error(ErrorCode::kValidation, where + " has no name attribute");
    return *name;
  }

  BusinessComponent component(const pt::ptree& node, const std::string& system,
                              std::size_t position) {
    const std::string where = "component #" + std::to_string(position + 1);
    BusinessComponent bc;
    bc.system_id = system;
    bc.name = required_name(node, where);
    const std::string named = "component '" + bc.name + "'";
    warn_unknown_attrs(node, {"name", "kind"}, named);

    auto kind = attr(node, "kind");
    if (!kind) throw Error(ErrorCode::kValidation, named + " has no kind attribute");
    auto parsed = parse_component_kind(*kind);
    if (!parsed) {
      throw Error(ErrorCode::kValidation, named + ": unknown kind '" + *kind +
                                              "' (legal kinds: entity, process, utility, data)");
    }
    bc.kind = *parsed;

    for (const auto& [tag, child] : node) {
      if (tag == kAttrKey || is_markup_key(tag)) continue;
      if (tag == "attribute" || tag == "operation") {
        Element e;
        e.name = required_name(child, tag + " in " + named);
        e.value_type = attr(child, "type");
        warn_unknown_attrs(child, {"name", "type"}, tag + " '" + e.name + "'");
        if (tag == "attribute") {
          e.element_kind = ElementKind::kAttribute;
          bc.attributes.push_back(std::move(e));
        } else {
          e.element_kind = ElementKind::kOperation;
          bc.operations.push_back(std::move(e));
        }
      } else if (tag == "provided" || tag == "required") {
        std::string name = required_name(child, tag + " in " + named);
        warn_unknown_attrs(child, {"name"}, tag + " '" + name + "'");
        (tag == "provided" ? bc.provided_interfaces : bc.required_interfaces)
            .push_back(std::move(name));
      } else {
        warnings.push_back("unknown element <" + tag + "> in " + named + " ignored");
      }
    }
    return bc;
  }
};

}  // namespace

ImportResult import_xml(std::string_view document) {
  pt::ptree tree;
  std::istringstream in{std::string(document)};
  try {
    pt::read_xml(in, tree, pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(e.line()) + ": " + e.message());
  }

  const pt::ptree* model = nullptr;
  std::size_t roots = 0;
  for (const auto& [tag, child] : tree) {
    if (is_markup_key(tag)) continue;
    ++roots;
    if (tag == "model") model = &child;
  }
  if (roots != 1 || model == nullptr) {
    throw Error(ErrorCode::kParse, "expected exactly one root <model> element");
  }

  Importer importer;
  ImportResult result;
  auto system = importer.attr(*model, "system");
  if (!system) throw Error(ErrorCode::kValidation, "<model> has no system attribute");
  importer.warn_unknown_attrs(*model, {"system"}, "<model>");
  result.set.systems.push_back(*system);

  std::size_t position = 0;
  for (const auto& [tag, child] : *model) {
    if (tag == kAttrKey || is_markup_key(tag)) continue;
    if (tag != "component") {
      importer.warnings.push_back("unknown element <" + tag + "> in <model> ignored");
      continue;
    }
    result.set.components.push_back(importer.component(child, *system, position++));
  }

  std::vector<std::string> problems;
  for (const auto& bc : result.set.components) {
    for (const auto& v : validate_component(bc)) {
      problems.push_back("component '" + bc.name + "': " + describe(v));
    }
  }
  if (!problems.empty()) {
    throw Error(ErrorCode::kValidation, "imported components violate invariants",
                std::move(problems));
  }
  check_unique_names(result.set);
  result.warnings = std::move(importer.warnings);
  return result;
}

}  // namespace bcint
