#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "bcint/align.hpp"
#include "bcint/conflicts.hpp"
#include "bcint/error.hpp"
#include "bcint/ingest.hpp"
#include "bcint/merge.hpp"
#include "bcint/model.hpp"
#include "bcint/normalize.hpp"
#include "bcint/ontology.hpp"
#include "bcint/serialize.hpp"
#include "bcint/transform.hpp"

namespace bcint::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

bool looks_like_xml(const std::string& path, const std::string& text) {
  if (fs::path(path).extension() == ".xml") return true;
  auto it = std::find_if_not(text.begin(), text.end(),
                             [](unsigned char c) { return std::isspace(c) != 0; });
  return it != text.end() && *it == '<';
}

// Prefixes library errors with the offending path.
template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message(), e.details());
  }
}

ComponentSet load_components(const std::vector<std::string>& paths, std::ostream& err) {
  ComponentSet all;
  for (const auto& path : paths) {
    const std::string text = read_file(path);
    ComponentSet set = with_path(path, [&] {
      if (looks_like_xml(path, text)) {
        ImportResult imported = import_xml(text);
        for (const auto& w : imported.warnings) err << "warn: " << path << ": " << w << "\n";
        return std::move(imported.set);
      }
      return parse_component_set(text);
    });
    all.append(set);
  }
  check_unique_names(all);
  return all;
}

DomainOntology load_domain(const std::string& path) {
  const std::string text = read_file(path);
  return with_path(path, [&] { return load_domain_ontology(text); });
}

void check_distinct_paths(const RunConfig& cfg) {
  auto key = [](const std::string& p) { return fs::weakly_canonical(fs::absolute(p)); };
  std::vector<fs::path> inputs{key(cfg.domain_path)};
  for (const auto& p : cfg.component_paths) inputs.push_back(key(p));
  std::vector<fs::path> outputs;
  for (const auto& p : {cfg.report_path, cfg.merged_path, cfg.result_path}) {
    if (!p) continue;
    auto k = key(*p);
    if (std::find(inputs.begin(), inputs.end(), k) != inputs.end()) {
      throw Error(ErrorCode::kValidation, "output path '" + *p + "' is also an input");
    }
    if (std::find(outputs.begin(), outputs.end(), k) != outputs.end()) {
      throw Error(ErrorCode::kValidation, "output path '" + *p + "' is given twice");
    }
    outputs.push_back(k);
  }
}

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return kExitInputError;
}

const ComponentOntology* resolve(const std::string& ref, const OntologySet& set,
                                 std::ostream& err) {
  std::string system;
  std::string name = ref;
  if (auto colon = ref.find(':'); colon != std::string::npos) {
    system = ref.substr(0, colon);
    name = ref.substr(colon + 1);
  }
  const std::string wanted = normalize(name);
  std::vector<const ComponentOntology*> hits;
  for (const auto& ont : set.ontologies) {
    if (ont.root.label == wanted && (system.empty() || ont.source.system_id == system)) {
      hits.push_back(&ont);
    }
  }
  if (hits.size() == 1) return hits.front();
  err << "error: " << (hits.empty() ? "no component matches '" : "ambiguous component '") << ref
      << "'; available:";
  for (const auto& ont : set.ontologies) err << " " << to_string(ont.source);
  err << "\n";
  return nullptr;
}

}  // namespace

int run_integrate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.component_paths.empty()) {
      throw Error(ErrorCode::kValidation, "at least one component document is required");
    }
    check_distinct_paths(cfg);
    const DomainOntology domain = load_domain(cfg.domain_path);
    const ComponentSet components = load_components(cfg.component_paths, err);
    const OntologySet ontologies = transform_component_set(components);
    const ConflictReport report = build_report(ontologies, domain);
    const RepresentationOntology merged = build_representation(report, ontologies, domain);
    const ExtractedComponents result = extract_result_components(merged);
    for (const auto& w : result.warnings) err << "warn: " << w << "\n";

    if (cfg.report_path) write_file(*cfg.report_path, report_to_json(report));
    if (cfg.merged_path) write_file(*cfg.merged_path, representation_to_json(merged));
    if (cfg.result_path) write_file(*cfg.result_path, serialize_component_set(result.set));

    if (cfg.format == OutputFormat::kJson) {
      out << report_to_json(report);
    } else {
      out << format_report_text(report, cfg.verbosity > 0);
    }
    return cfg.fail_on_conflict && report.has_conflicts() ? kExitConflicts : kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int run_similarity(const SimilarityConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const DomainOntology domain = load_domain(cfg.domain_path);
    const ComponentSet components = load_components(cfg.component_paths, err);
    const OntologySet ontologies = transform_component_set(components);
    const auto* left = resolve(cfg.left, ontologies, err);
    const auto* right = resolve(cfg.right, ontologies, err);
    if (left == nullptr || right == nullptr) return kExitInputError;
    const AggregateResult result = aggregate_similarity(*left, *right, domain);
    if (cfg.format == OutputFormat::kJson) {
      out << aggregate_to_json(result, left->source, right->source);
    } else {
      out << format_matrix_text(result, left->source, right->source);
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int run_validate(const ValidateConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.domain_path && cfg.component_paths.empty()) {
    err << "error: nothing to validate; pass --domain and/or --components\n";
    return kExitInputError;
  }
  bool failed = false;
  auto check = [&](const std::string& path, auto&& load) {
    try {
      load();
      out << path << ": ok\n";
    } catch (const Error& e) {
      failed = true;
      out << path << ": " << e.what() << "\n";
    }
  };
  if (cfg.domain_path) check(*cfg.domain_path, [&] { load_domain(*cfg.domain_path); });
  for (const auto& p : cfg.component_paths) {
    check(p, [&] { load_components({p}, err); });
  }
  if (cfg.component_paths.size() > 1) {
    check("components", [&] { load_components(cfg.component_paths, err); });
  }
  return failed ? kExitInputError : kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Detect and resolve naming conflicts between business components", "bcint"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::kText},
                                                    {"json", OutputFormat::kJson}};

  RunConfig integrate;
  auto* cmd_integrate = app.add_subcommand("integrate", "Score, classify and merge components");
  cmd_integrate->add_option("--domain", integrate.domain_path, "Domain ontology document")
      ->required();
  cmd_integrate->add_option("--components", integrate.component_paths,
                            "Component documents (native JSON or XML)")
      ->required();
  cmd_integrate->add_option("--report", integrate.report_path, "Write the conflict report here");
  cmd_integrate->add_option("--merged", integrate.merged_path,
                            "Write the representation ontology here");
  cmd_integrate->add_option("--result", integrate.result_path,
                            "Write the integrated component document here");
  cmd_integrate->add_flag("--fail-on-conflict", integrate.fail_on_conflict,
                          "Exit 3 when a homonym naming conflict is found");
  cmd_integrate->add_flag("-v,--verbose", integrate.verbosity, "Print per-element evidence");
  cmd_integrate->add_option("--format", integrate.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  SimilarityConfig similarity;
  auto* cmd_similarity =
      app.add_subcommand("similarity", "Print the similarity matrix of two components");
  cmd_similarity->add_option("--domain", similarity.domain_path, "Domain ontology document")
      ->required();
  cmd_similarity->add_option("--components", similarity.component_paths, "Component documents")
      ->required();
  cmd_similarity->add_option("--left", similarity.left, "System:Name of the left component")
      ->required();
  cmd_similarity->add_option("--right", similarity.right, "System:Name of the right component")
      ->required();
  cmd_similarity->add_option("--format", similarity.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  ValidateConfig validate;
  auto* cmd_validate = app.add_subcommand("validate", "Load documents and print violations");
  cmd_validate->add_option("--domain", validate.domain_path, "Domain ontology document");
  cmd_validate->add_option("--components", validate.component_paths, "Component documents");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (cmd_integrate->parsed()) return run_integrate(integrate, out, err);
  if (cmd_similarity->parsed()) return run_similarity(similarity, out, err);
  return run_validate(validate, out, err);
}

}  // namespace bcint::cli
