#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcint/model.hpp"

namespace bcint {

enum class NodeKind { kComponent, kAttribute, kOperation };

std::string_view to_string(NodeKind kind);

struct ConceptNode {
  std::string label;  // normalized
  NodeKind node_kind = NodeKind::kComponent;
  std::optional<std::string> value_type;
  std::vector<ConceptNode> children;

  bool is_leaf() const { return children.empty(); }
  bool operator==(const ConceptNode&) const = default;
};

struct ComponentRef {
  std::string system_id;
  std::string name;  // as written in the source document

  auto operator<=>(const ComponentRef&) const = default;
};

std::string to_string(const ComponentRef& ref);

// Concept tree of one business component. Root children are the attributes in
// order, then the operations in order.
struct ComponentOntology {
  ConceptNode root;
  ComponentRef source;
  ComponentKind kind = ComponentKind::kEntity;

  bool operator==(const ComponentOntology&) const = default;
};

// Component ontologies of a whole set, with the declared systems carried along
// so that a system without components is still visible downstream.
struct OntologySet {
  std::vector<std::string> systems;
  std::vector<ComponentOntology> ontologies;
};

// Pre: validate_component(bc) is empty.
ComponentOntology transform_bc_to_ontology(const BusinessComponent& bc);

OntologySet transform_component_set(const ComponentSet& set);

}  // namespace bcint
