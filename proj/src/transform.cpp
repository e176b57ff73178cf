#include "bcint/transform.hpp"

#include "bcint/normalize.hpp"

namespace bcint {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kComponent: return "component";
    case NodeKind::kAttribute: return "attribute";
    case NodeKind::kOperation: return "operation";
  }
  return "component";
}

std::string to_string(const ComponentRef& ref) { return ref.system_id + ":" + ref.name; }

ComponentOntology transform_bc_to_ontology(const BusinessComponent& bc) {
  ComponentOntology out;
  out.source = {bc.system_id, bc.name};
  out.kind = bc.kind;
  out.root.label = normalize(bc.name);
  out.root.node_kind = NodeKind::kComponent;
  out.root.children.reserve(bc.attributes.size() + bc.operations.size());
  for (const auto& a : bc.attributes) {
    out.root.children.push_back({normalize(a.name), NodeKind::kAttribute, a.value_type, {}});
  }
  for (const auto& op : bc.operations) {
    out.root.children.push_back({normalize(op.name), NodeKind::kOperation, op.value_type, {}});
  }
  return out;
}

OntologySet transform_component_set(const ComponentSet& set) {
  OntologySet out;
  out.systems = set.systems;
  out.ontologies.reserve(set.components.size());
  for (const auto& bc : set.components) out.ontologies.push_back(transform_bc_to_ontology(bc));
  return out;
}

}  // namespace bcint
