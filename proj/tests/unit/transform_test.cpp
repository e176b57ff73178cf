#include "doctest.h"

#include "bcint/transform.hpp"
#include "test_support.hpp"

using namespace bcint;
using namespace bcint::testing;

namespace {

std::vector<std::string> child_labels(const ComponentOntology& o) {
  std::vector<std::string> out;
  for (const auto& c : o.root.children) out.push_back(c.label);
  return out;
}

}  // namespace

TEST_CASE("Person becomes OntoPerson") {
  const auto set = library_components();
  const auto onto = transform_bc_to_ontology(find_component(set, "Lib1", "Person"));
  CHECK(onto.root.label == "person");
  CHECK(onto.root.node_kind == NodeKind::kComponent);
  CHECK(onto.source == ComponentRef{"Lib1", "Person"});
  CHECK(child_labels(onto) ==
        std::vector<std::string>{"reader number", "first name", "name", "reading"});
  CHECK(onto.root.children[0].node_kind == NodeKind::kAttribute);
  CHECK(onto.root.children[0].value_type == std::optional<std::string>("string"));
  CHECK(onto.root.children[3].node_kind == NodeKind::kOperation);
  for (const auto& c : onto.root.children) CHECK(c.is_leaf());
}

TEST_CASE("Reader becomes OntoReader with four children") {
  const auto set = library_components();
  const auto onto = transform_bc_to_ontology(find_component(set, "Lib2", "Reader"));
  CHECK(child_labels(onto) ==
        std::vector<std::string>{"reader number", "first name", "name", "consulting"});
}

TEST_CASE("component without elements gives a bare root") {
  const auto onto = transform_bc_to_ontology(make_component("S", "Empty", {}));
  CHECK(onto.root.label == "empty");
  CHECK(onto.root.children.empty());
}

TEST_CASE("child count equals attributes plus operations") {
  Rng rng(3);
  for (int round = 0; round < 200; ++round) {
    std::vector<std::string> attrs, ops;
    const auto na = uniform(rng, 0, 6), no = uniform(rng, 0, 6);
    for (std::size_t i = 0; i < na; ++i) attrs.push_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < no; ++i) ops.push_back("op" + std::to_string(i) + "()");
    const auto onto = transform_bc_to_ontology(make_component("S", "C", attrs, ops));
    REQUIRE(onto.root.children.size() == na + no);
    for (std::size_t i = 0; i < no; ++i) {
      CHECK(onto.root.children[na + i].label == "op" + std::to_string(i));
    }
  }
}

TEST_CASE("different element sets give different trees") {
  const auto a = transform_bc_to_ontology(make_component("S", "C", {"x", "y"}));
  const auto b = transform_bc_to_ontology(make_component("S", "C", {"x", "z"}));
  const auto c = transform_bc_to_ontology(make_component("S", "C", {"X ", "y"}));
  CHECK_FALSE(a.root == b.root);
  CHECK(a.root == c.root);
}

TEST_CASE("whole set keeps declared systems") {
  ComponentSet set;
  set.systems = {"A", "B"};
  set.components.push_back(make_component("A", "C", {"x"}));
  const auto onto = transform_component_set(set);
  CHECK(onto.systems == std::vector<std::string>{"A", "B"});
  CHECK(onto.ontologies.size() == 1);
}
