#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcint {

enum class ComponentKind { kEntity, kProcess, kUtility, kData };
enum class ElementKind { kAttribute, kOperation };

std::string_view to_string(ComponentKind kind);
std::string_view to_string(ElementKind kind);

// Case-insensitive; nullopt for anything but the four legal literals.
std::optional<ComponentKind> parse_component_kind(std::string_view literal);

struct Element {
  std::string name;
  ElementKind element_kind = ElementKind::kAttribute;
  // Carried through merge untouched; similarity never looks at it.
  std::optional<std::string> value_type;

  bool operator==(const Element&) const = default;
};

struct BusinessComponent {
  std::string name;
  std::string system_id;
  ComponentKind kind = ComponentKind::kEntity;
  std::vector<Element> attributes;
  std::vector<Element> operations;
  std::vector<std::string> provided_interfaces;
  std::vector<std::string> required_interfaces;

  bool operator==(const BusinessComponent&) const = default;
};

// Candidate components drawn from one or more systems. `systems` lists every
// declared system, including ones that contributed no components.
struct ComponentSet {
  std::vector<std::string> systems;
  std::vector<BusinessComponent> components;

  bool operator==(const ComponentSet&) const = default;

  // Appends `other`, keeping the system list free of duplicates. Does not
  // re-check uniqueness; see check_unique_names.
  void append(const ComponentSet& other);
};

struct Violation {
  std::string field;
  std::string rule;

  bool operator==(const Violation&) const = default;
};

std::string describe(const Violation& v);

// Empty iff every BusinessComponent invariant holds.
std::vector<Violation> validate_component(const BusinessComponent& bc);

// Throws Error(kUniqueness) if two components share (system, normalized name).
void check_unique_names(const ComponentSet& set);

// Native component document. Throws Error with kParse (with line:column),
// kValidation or kUniqueness.
ComponentSet parse_component_set(std::string_view document);

// Inverse of parse_component_set. The document format holds exactly one
// system, so any other system count is rejected with kValidation.
std::string serialize_component_set(const ComponentSet& set);

}  // namespace bcint
