#include "bcint/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace bcint {

namespace {

using Json = nlohmann::ordered_json;

Json ref_json(const ComponentRef& ref, const std::string& label) {
  Json j;
  j["system"] = ref.system_id;
  j["name"] = ref.name;
  j["label"] = label;
  return j;
}

Json optional_index(const std::optional<std::size_t>& i) { return i ? Json(*i) : Json(); }

Json matching_json(const Matching& m) {
  auto arr = Json::array();
  for (auto [i, j] : m) arr.push_back(Json::array({i, j}));
  return arr;
}

Json verdict_json(const PairVerdict& v) {
  Json j;
  j["left"] = ref_json(v.left, v.left_label);
  j["right"] = ref_json(v.right, v.right_label);
  j["verdict"] = to_string(v.verdict);
  j["sigma_prime"] = v.sigma_prime;
  j["sigma"] = format_score(v.sigma);
  j["roots_synonym"] = v.roots_synonym;
  j["matching"] = matching_json(v.matching);
  auto evidence = Json::array();
  for (const auto& f : v.evidence) {
    Json e;
    e["left_index"] = optional_index(f.left_index);
    e["left"] = f.left_index ? Json(f.left) : Json();
    e["right_index"] = optional_index(f.right_index);
    e["right"] = f.right_index ? Json(f.right) : Json();
    e["sigma"] = format_score(f.sigma);
    e["rule"] = to_string(f.rule);
    evidence.push_back(std::move(e));
  }
  j["evidence"] = std::move(evidence);
  return j;
}

Json concept_ref_json(const ConceptRef& r) {
  Json j;
  j["system"] = r.system_id;
  j["component"] = r.component;
  if (r.element) j["element"] = *r.element;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string report_to_json(const ConflictReport& report) {
  Json doc;
  Json summary;
  summary["Synonymous"] = report.counts.synonymous;
  summary["HomonymNamingConflict"] = report.counts.homonym_naming_conflict;
  summary["Equal"] = report.counts.equal;
  summary["Different"] = report.counts.different;
  summary["total"] = report.counts.total();
  doc["summary"] = std::move(summary);
  auto verdicts = Json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(verdict_json(v));
  doc["verdicts"] = std::move(verdicts);
  return dump(doc);
}

std::string representation_to_json(const RepresentationOntology& r) {
  Json doc;
  auto concepts = Json::array();
  for (const auto& c : r.canonical_concepts) {
    Json j;
    j["label"] = c.label;
    j["qualified"] = c.qualified;
    j["kind"] = to_string(c.kind);
    j["kind_conflict"] = c.kind_conflict;
    auto aliases = Json::array();
    for (const auto& a : c.aliases) aliases.push_back({{"system", a.system_id}, {"label", a.label}});
    j["aliases"] = std::move(aliases);
    auto sources = Json::array();
    for (const auto& s : c.sources) sources.push_back({{"system", s.system_id}, {"name", s.name}});
    j["sources"] = std::move(sources);
    auto children = Json::array();
    for (const auto& ch : c.children) {
      Json cj;
      cj["label"] = ch.label;
      cj["kind"] = to_string(ch.node_kind);
      cj["type"] = ch.value_type ? Json(*ch.value_type) : Json();
      cj["kind_conflict"] = ch.kind_conflict;
      cj["type_conflict"] = ch.type_conflict;
      auto refs = Json::array();
      for (const auto& a : ch.aliases) refs.push_back(concept_ref_json(a));
      cj["aliases"] = std::move(refs);
      children.push_back(std::move(cj));
    }
    j["children"] = std::move(children);
    concepts.push_back(std::move(j));
  }
  doc["canonical_concepts"] = std::move(concepts);

  auto corr = Json::array();
  for (const auto& c : r.correspondences) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["relation"] = to_string(c.relation);
    auto left = Json::array();
    for (const auto& ref : c.left) left.push_back(concept_ref_json(ref));
    auto right = Json::array();
    for (const auto& ref : c.right) right.push_back(concept_ref_json(ref));
    j["left"] = std::move(left);
    j["right"] = std::move(right);
    corr.push_back(std::move(j));
  }
  doc["correspondences"] = std::move(corr);

  auto unresolved = Json::array();
  for (const auto& v : r.unresolved_conflicts) unresolved.push_back(verdict_json(v));
  doc["unresolved_conflicts"] = std::move(unresolved);
  return dump(doc);
}

std::string aggregate_to_json(const AggregateResult& result, const ComponentRef& left,
                              const ComponentRef& right) {
  Json doc;
  doc["left"] = {{"system", left.system_id}, {"name", left.name}};
  doc["right"] = {{"system", right.system_id}, {"name", right.name}};
  doc["score"] = format_score(result.score);
  Json matrix;
  matrix["left_labels"] = result.matrix.left_labels;
  matrix["right_labels"] = result.matrix.right_labels;
  auto rows = Json::array();
  for (const auto& row : result.matrix.cells) {
    auto cells = Json::array();
    for (const auto& c : row) cells.push_back(format_score(c));
    rows.push_back(std::move(cells));
  }
  matrix["cells"] = std::move(rows);
  doc["matrix"] = std::move(matrix);
  doc["matching"] = matching_json(result.matching);
  return dump(doc);
}

std::string format_report_text(const ConflictReport& report, bool verbose) {
  const std::string h_left = "LEFT", h_right = "RIGHT", h_sp = "SIGMA'", h_s = "SIGMA",
                    h_v = "VERDICT";
  std::size_t w_left = h_left.size(), w_right = h_right.size(), w_s = h_s.size();
  for (const auto& v : report.verdicts) {
    w_left = std::max(w_left, to_string(v.left).size());
    w_right = std::max(w_right, to_string(v.right).size());
    w_s = std::max(w_s, format_score(v.sigma).size());
  }
  const std::size_t w_sp = h_sp.size();

  std::ostringstream out;
  out << pad(h_left, w_left) << "  " << pad(h_right, w_right) << "  " << pad(h_sp, w_sp) << "  "
      << pad(h_s, w_s) << "  " << h_v << "\n";
  for (const auto& v : report.verdicts) {
    out << pad(to_string(v.left), w_left) << "  " << pad(to_string(v.right), w_right) << "  "
        << pad(std::to_string(v.sigma_prime), w_sp) << "  " << pad(format_score(v.sigma), w_s)
        << "  " << to_string(v.verdict) << "\n";
    if (!verbose) continue;
    for (const auto& f : v.evidence) {
      out << "    " << (f.left_index ? f.left : "-") << " ~ " << (f.right_index ? f.right : "-")
          << " = " << format_score(f.sigma) << " (" << to_string(f.rule) << ")\n";
    }
  }
  const auto& c = report.counts;
  out << "\n"
      << "Synonymous: " << c.synonymous << "  HomonymNamingConflict: " << c.homonym_naming_conflict
      << "  Equal: " << c.equal << "  Different: " << c.different << "  total: " << c.total()
      << "\n";
  return out.str();
}

std::string format_matrix_text(const AggregateResult& result, const ComponentRef& left,
                               const ComponentRef& right) {
  const auto& m = result.matrix;
  std::ostringstream out;
  out << to_string(left) << " vs " << to_string(right) << "\n";

  std::size_t w_label = 0;
  for (const auto& l : m.left_labels) w_label = std::max(w_label, l.size());
  std::vector<std::size_t> widths;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::size_t w = m.right_labels[j].size();
    for (std::size_t i = 0; i < m.rows(); ++i) w = std::max(w, format_score(m.at(i, j)).size());
    widths.push_back(w);
  }
  auto emit = [&out](std::string line) {
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  };
  if (m.cols() > 0) {
    std::string line = pad("", w_label);
    for (std::size_t j = 0; j < m.cols(); ++j) line += "  " + pad(m.right_labels[j], widths[j]);
    emit(line);
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string line = pad(m.left_labels[i], w_label);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      line += "  " + pad(format_score(m.at(i, j)), widths[j]);
    }
    emit(line);
  }
  out << "score: " << format_score(result.score) << "\n";
  return out.str();
}

}  // namespace bcint
