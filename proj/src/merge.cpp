#include "bcint/merge.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "bcint/error.hpp"
#include "bcint/normalize.hpp"

namespace bcint {

std::string_view to_string(CorrespondenceKind kind) {
  switch (kind) {
    case CorrespondenceKind::kOneToOne: return "OneToOne";
    case CorrespondenceKind::kOneToMany: return "OneToMany";
    case CorrespondenceKind::kManyToOne: return "ManyToOne";
    case CorrespondenceKind::kManyToMany: return "ManyToMany";
  }
  return "OneToOne";
}

std::string_view to_string(Relation relation) {
  return relation == Relation::kEqual ? "Equal" : "Synonym";
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller representative wins so group ids follow input order.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

CorrespondenceKind kind_for(std::size_t left, std::size_t right) {
  if (left == 1) return right == 1 ? CorrespondenceKind::kOneToOne : CorrespondenceKind::kOneToMany;
  return right == 1 ? CorrespondenceKind::kManyToOne : CorrespondenceKind::kManyToMany;
}

// Label for a set of unified terms: the thesaurus concept label when the
// distinct terms all sit in one synonym group, else the smallest term.
std::string unified_label(const std::set<std::string>& labels, const DomainOntology& o) {
  if (labels.size() >= 2) {
    const SynonymGroup* group = o.synonym_group_of(*labels.begin());
    const bool same_group =
        group != nullptr && std::all_of(labels.begin(), labels.end(), [&](const auto& l) {
          return o.synonym_group_of(l) == group;
        });
    if (same_group) {
      if (const Concept* c = o.find_concept(group->concept_id)) return c->label;
    }
  }
  return *labels.begin();
}

std::string systems_prefix(const std::set<std::string>& systems) {
  std::string out;
  for (const auto& s : systems) {
    if (!out.empty()) out += '+';
    out += normalize(s);
  }
  return out;
}

std::string claim_label(const std::string& label, const std::set<std::string>& systems,
                        std::set<std::string>& used) {
  if (used.insert(label).second) return label;
  const std::string qualified = systems_prefix(systems) + "." + label;
  if (used.insert(qualified).second) return qualified;
  for (int k = 2;; ++k) {
    std::string candidate = qualified + "#" + std::to_string(k);
    if (used.insert(candidate).second) return candidate;
  }
}

// Emits one correspondence per pair of systems among `members`, which are
// (system, ref, label) triples of a single unified class.
struct Member {
  std::string system;
  ConceptRef ref;
  std::string label;
};

void emit_correspondences(const std::vector<Member>& members, std::vector<Correspondence>& out) {
  std::map<std::string, std::vector<const Member*>> by_system;
  for (const auto& m : members) by_system[m.system].push_back(&m);
  for (auto a = by_system.begin(); a != by_system.end(); ++a) {
    for (auto b = std::next(a); b != by_system.end(); ++b) {
      Correspondence c;
      std::set<std::string> labels;
      for (const auto* m : a->second) {
        c.left.push_back(m->ref);
        labels.insert(m->label);
      }
      for (const auto* m : b->second) {
        c.right.push_back(m->ref);
        labels.insert(m->label);
      }
      std::sort(c.left.begin(), c.left.end());
      std::sort(c.right.begin(), c.right.end());
      c.kind = kind_for(c.left.size(), c.right.size());
      c.relation = labels.size() == 1 ? Relation::kEqual : Relation::kSynonym;
      out.push_back(std::move(c));
    }
  }
}

struct Draft {
  CanonicalConcept concept_;
  std::set<std::string> systems;
  std::vector<std::set<std::string>> child_systems;
};

}  // namespace

RepresentationOntology build_representation(const ConflictReport& report, const OntologySet& set,
                                            const DomainOntology& o) {
  // Components in (system, name) order; all indices below refer to `comps`.
  std::vector<const ComponentOntology*> comps;
  for (const auto& ont : set.ontologies) comps.push_back(&ont);
  std::sort(comps.begin(), comps.end(),
            [](const auto* x, const auto* y) { return x->source < y->source; });
  std::map<ComponentRef, std::size_t> index;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!index.emplace(comps[i]->source, i).second) {
      throw Error(ErrorCode::kConsistency,
                  "component " + to_string(comps[i]->source) + " occurs twice in the set");
    }
  }

  struct Edge {
    std::size_t left, right;
    const PairVerdict* verdict;
  };
  std::vector<Edge> edges;
  std::vector<char> conflicted(comps.size(), 0);
  RepresentationOntology out;

  for (const auto& v : report.verdicts) {
    auto li = index.find(v.left);
    auto ri = index.find(v.right);
    if (li == index.end() || ri == index.end()) {
      throw Error(ErrorCode::kConsistency,
                  "report refers to unknown component " +
                      to_string(li == index.end() ? v.left : v.right));
    }
    const auto& lc = comps[li->second]->root.children;
    const auto& rc = comps[ri->second]->root.children;
    for (auto [i, j] : v.matching) {
      if (i >= lc.size() || j >= rc.size()) {
        throw Error(ErrorCode::kConsistency, "matching of " + to_string(v.left) + " / " +
                                                 to_string(v.right) +
                                                 " does not fit the components");
      }
    }
    if (v.verdict == Verdict::kHomonymNamingConflict) {
      conflicted[li->second] = conflicted[ri->second] = 1;
      out.unresolved_conflicts.push_back(v);
    } else if (v.verdict == Verdict::kEqual || v.verdict == Verdict::kSynonymous) {
      edges.push_back({li->second, ri->second, &v});
    }
  }

  DisjointSets groups(comps.size());
  for (const auto& e : edges) {
    if (!conflicted[e.left] && !conflicted[e.right]) groups.unite(e.left, e.right);
  }
  std::map<std::size_t, std::vector<std::size_t>> members_of;
  for (std::size_t i = 0; i < comps.size(); ++i) members_of[groups.find(i)].push_back(i);

  // Child slots are numbered consecutively per component.
  std::vector<std::size_t> child_base(comps.size() + 1, 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    child_base[i + 1] = child_base[i] + comps[i]->root.children.size();
  }
  DisjointSets child_groups(child_base.back());
  for (const auto& e : edges) {
    if (groups.find(e.left) != groups.find(e.right)) continue;
    for (const auto& f : e.verdict->evidence) {
      if (f.left_index && f.right_index && f.sigma == Score(1)) {
        child_groups.unite(child_base[e.left] + *f.left_index,
                           child_base[e.right] + *f.right_index);
      }
    }
  }

  std::vector<Draft> drafts;
  for (const auto& [root, members] : members_of) {
    Draft d;
    auto& c = d.concept_;
    std::set<std::string> labels;
    std::vector<Member> root_members;
    for (std::size_t m : members) {
      const auto& ont = *comps[m];
      labels.insert(ont.root.label);
      d.systems.insert(ont.source.system_id);
      c.aliases.push_back({ont.source.system_id, ont.root.label});
      c.sources.push_back(ont.source);
      root_members.push_back({ont.source.system_id, {ont.source.system_id, ont.source.name, {}},
                              ont.root.label});
    }
    std::sort(c.aliases.begin(), c.aliases.end());

    c.kind = comps[members.front()]->kind;
    for (std::size_t m : members) {
      if (comps[m]->kind != c.kind) c.kind_conflict = true;
    }
    if (c.kind_conflict) c.kind = ComponentKind::kEntity;

    const bool qualify = members.size() == 1 && conflicted[members.front()];
    if (qualify) {
      c.qualified = true;
      c.label = normalize(comps[members.front()]->source.system_id) + "." + *labels.begin();
    } else {
      c.label = unified_label(labels, o);
      emit_correspondences(root_members, out.correspondences);
    }

    // Child classes in order of first appearance.
    std::map<std::size_t, std::size_t> class_slot;
    std::vector<std::vector<Member>> class_members;
    std::vector<std::vector<const ConceptNode*>> class_nodes;
    for (std::size_t m : members) {
      const auto& ont = *comps[m];
      for (std::size_t k = 0; k < ont.root.children.size(); ++k) {
        const std::size_t cls = child_groups.find(child_base[m] + k);
        auto [it, inserted] = class_slot.emplace(cls, class_members.size());
        if (inserted) {
          class_members.emplace_back();
          class_nodes.emplace_back();
        }
        const auto& node = ont.root.children[k];
        class_members[it->second].push_back(
            {ont.source.system_id, {ont.source.system_id, ont.source.name, node.label},
             node.label});
        class_nodes[it->second].push_back(&node);
      }
    }

    std::set<std::string> used_child_labels;
    for (std::size_t k = 0; k < class_members.size(); ++k) {
      CanonicalChild child;
      std::set<std::string> child_labels;
      std::set<std::string> systems;
      std::set<std::string> types;
      child.node_kind = class_nodes[k].front()->node_kind;
      for (std::size_t x = 0; x < class_members[k].size(); ++x) {
        const auto& mem = class_members[k][x];
        const auto* node = class_nodes[k][x];
        child_labels.insert(mem.label);
        systems.insert(mem.system);
        child.aliases.push_back(mem.ref);
        if (node->node_kind != child.node_kind) child.kind_conflict = true;
        if (node->value_type) types.insert(*node->value_type);
      }
      if (child.kind_conflict) child.node_kind = NodeKind::kAttribute;
      if (!types.empty()) child.value_type = *types.begin();
      child.type_conflict = types.size() > 1;
      std::sort(child.aliases.begin(), child.aliases.end());
      child.label = claim_label(unified_label(child_labels, o), systems, used_child_labels);
      if (!qualify) emit_correspondences(class_members[k], out.correspondences);
      c.children.push_back(std::move(child));
    }
    drafts.push_back(std::move(d));
  }

  // Resolve label clashes between concepts in a fixed order.
  std::sort(drafts.begin(), drafts.end(), [](const Draft& x, const Draft& y) {
    return std::tie(x.concept_.label, x.concept_.qualified, x.concept_.sources) <
           std::tie(y.concept_.label, y.concept_.qualified, y.concept_.sources);
  });
  std::set<std::string> used;
  for (auto& d : drafts) {
    d.concept_.label = claim_label(d.concept_.label, d.systems, used);
    out.canonical_concepts.push_back(std::move(d.concept_));
  }
  std::sort(out.canonical_concepts.begin(), out.canonical_concepts.end(),
            [](const auto& x, const auto& y) { return x.label < y.label; });
  std::sort(out.correspondences.begin(), out.correspondences.end(),
            [](const Correspondence& x, const Correspondence& y) {
              return std::tie(x.left, x.right) < std::tie(y.left, y.right);
            });
  return out;
}

ExtractedComponents extract_result_components(const RepresentationOntology& r) {
  ExtractedComponents out;
  out.set.systems.emplace_back(kResultSystem);
  for (const auto& c : r.canonical_concepts) {
    BusinessComponent bc;
    bc.name = c.label;
    bc.system_id = std::string(kResultSystem);
    bc.kind = c.kind;
    if (c.kind_conflict) {
      out.warnings.push_back("component '" + c.label +
                             "': merged components disagree on kind, using entity");
    }
    for (const auto& child : c.children) {
      if (child.kind_conflict) {
        out.warnings.push_back("element '" + c.label + "." + child.label +
                               "': merged elements mix attributes and operations, using "
                               "attribute");
      }
      if (child.type_conflict) {
        out.warnings.push_back("element '" + c.label + "." + child.label +
                               "': merged elements disagree on type, using '" +
                               *child.value_type + "'");
      }
      Element e;
      e.name = child.label;
      e.value_type = child.value_type;
      if (child.node_kind == NodeKind::kOperation) {
        e.element_kind = ElementKind::kOperation;
        bc.operations.push_back(std::move(e));
      } else {
        e.element_kind = ElementKind::kAttribute;
        bc.attributes.push_back(std::move(e));
      }
    }
    out.set.components.push_back(std::move(bc));
  }
  return out;
}

}  // namespace bcint
