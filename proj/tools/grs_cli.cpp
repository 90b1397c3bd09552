#include "grs_cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "grs/cartan_types.hpp"
#include "grs/weyl.hpp"

namespace grs::cli {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json roots_json(const std::vector<Root>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(r.coords);
  return out;
}

Json edges_json(const CarterDiagram& d) {
  Json out = Json::array();
  for (auto [a, b] : d.edges) out.push_back({a, b});
  return out;
}

Json inapplicable(const std::string& reason) { return Json{{"inapplicable", reason}}; }

Json label_json(const GrsSpecFile& spec) {
  return spec.label ? Json(*spec.label) : inapplicable("input has no label");
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Int integer_field(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
      throw ValidationError(where + " does not fit in a signed 64-bit integer");
    return v.get<Int>();
  }
  throw ValidationError(where + " must be an integer");
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

struct Loaded {
  GrsSpecFile spec;
  GrsPresentation grs;
};

Loaded load(const std::string& path) {
  GrsSpecFile spec = parse_spec(read_input(path));
  GrsPresentation grs = to_presentation(spec);
  return {std::move(spec), std::move(grs)};
}

void write_dot(const std::string& path, const std::vector<CarterDiagram>& diagrams) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  for (const auto& d : diagrams) out << to_dot(d);
}

Json classification_json(const std::vector<ComponentClassification>& parts) {
  Json out = Json::array();
  for (const auto& cc : parts) {
    out.push_back({{"basis_indices", cc.basis_indices},
                   {"name", cc.name},
                   {"ambient", cc.ambient},
                   {"root_count", cc.root_count},
                   {"group1", roots_json(cc.rep.group1)},
                   {"group2", roots_json(cc.rep.group2)},
                   {"edges", edges_json(cc.diagram)}});
  }
  return out;
}

Json names_json(const std::vector<ComponentClassification>& parts) {
  Json names = Json::array();
  for (const auto& cc : parts) names.push_back(cc.name);
  return names;
}

std::string not_positive_definite_reason() { return "not enumerable: the Cartan form is not positive definite"; }

Json analyze(const Loaded& in, std::uint64_t cap) {
  const GrsPresentation& g = in.grs;
  const bool pd = g.positive_definite();
  const KernelBasis rad = radical(g);
  const EulerSystemReport euler_sys = euler_system(g);
  const CoxeterOrder order = coxeter_order(g, cap);
  const Components comps = irreducible_components(g);

  Json report;
  report["label"] = label_json(in.spec);
  report["rank"] = g.rank();
  report["cartan"] = matrix_json(g.cartan());
  report["positive_definite"] = pd;
  report["radical_rank"] = rad.rank;
  Json rad_basis = Json::array();
  for (const auto& v : rad.vectors) rad_basis.push_back(v);
  report["radical_basis"] = rad_basis;
  report["euler"] = matrix_json(euler_form(g).matrix);
  report["euler_solution_dimension"] = euler_sys.solution_dimension();
  report["coxeter"] = matrix_json(coxeter_matrix(g).matrix);
  report["coxeter_order"] = order.order ? Json(*order.order) : Json("unknown(" + std::to_string(order.cap) + ")");
  report["coxeter_order_cap"] = order.cap;
  report["root_count"] = pd ? Json(enumerate_roots(g).size()) : inapplicable(not_positive_definite_reason());
  report["components"] = {{"parts", comps.parts}, {"heuristic", comps.heuristic}};
  if (pd) {
    const auto parts = classify_grs(g);
    report["names"] = names_json(parts);
    report["classification"] = classification_json(parts);
  } else {
    report["names"] = inapplicable("classification needs a positive definite Cartan form");
    report["classification"] = inapplicable("classification needs a positive definite Cartan form");
  }
  return report;
}

Json euler(const Loaded& in) {
  const GrsPresentation& g = in.grs;
  const IntMatrix x = euler_form(g).matrix;
  const IntMatrix c = coxeter_matrix(g).matrix;
  const EulerSystemReport sys = euler_system(g);
  Json report;
  report["label"] = label_json(in.spec);
  report["euler"] = matrix_json(x);
  report["sum_is_cartan"] = x + x.transpose() == g.cartan();
  report["twist_identity"] = x * c == -x.transpose();
  report["determinant"] = det_exact(x).get_str();
  report["solution_dimension"] = sys.solution_dimension();
  if (sys.solution_dimension() == 0) {
    report["unique"] = solve_euler_uniqueness(g) == EulerForm{x};
  } else {
    report["unique"] = false;
    Json family = Json::array();
    for (const auto& y : sys.homogeneous) family.push_back(matrix_json(y));
    report["homogeneous_solutions"] = family;
  }
  return report;
}

Json roots(const Loaded& in) {
  const RootSet set = enumerate_roots(in.grs);
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < in.grs.rank(); ++i) bound *= 3;
  bound += in.grs.rank();
  Json report;
  report["label"] = label_json(in.spec);
  report["root_count"] = set.size();
  report["bound"] = bound;
  report["roots"] = roots_json(set.roots);
  return report;
}

Json catalog_json(std::optional<std::size_t> rank, std::vector<CarterDiagram>& diagrams) {
  Json entries = Json::array();
  for (const auto& e : catalog().entries) {
    if (rank && e.diagram.vertex_count != *rank) continue;
    const auto [family, ambient_rank] = ambient_type(e.name);
    entries.push_back({{"name", e.name},
                       {"rank", e.diagram.vertex_count},
                       {"ambient", type_name(family, ambient_rank)},
                       {"edges", edges_json(e.diagram)},
                       {"aliases", e.aliases}});
    diagrams.push_back(e.diagram);
  }
  Json report;
  report["entries"] = entries;
  report["skipped_labels"] = catalog().skipped;
  return report;
}

}  // namespace

GrsSpecFile parse_spec(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what(), line,
                     column);
  }
  if (!doc.is_object()) throw ValidationError("specification must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "rank" && key != "cartan" && key != "label") throw ValidationError("unknown key \"" + key + "\"");
  if (!doc.contains("rank")) throw ValidationError("missing key \"rank\"");
  if (!doc.contains("cartan")) throw ValidationError("missing key \"cartan\"");

  GrsSpecFile spec;
  const Int rank = integer_field(doc["rank"], "rank");
  if (rank < 1) throw ValidationError("rank must be at least 1");
  spec.rank = static_cast<std::size_t>(rank);

  const Json& rows = doc["cartan"];
  if (!rows.is_array()) throw ValidationError("cartan must be an array of rows");
  if (rows.size() != spec.rank)
    throw ValidationError("cartan has " + std::to_string(rows.size()) + " rows but rank is " + std::to_string(spec.rank),
                          ErrorKind::ShapeMismatch);
  spec.cartan = IntMatrix(spec.rank, spec.rank);
  for (std::size_t i = 0; i < spec.rank; ++i) {
    if (!rows[i].is_array()) throw ValidationError("cartan row " + std::to_string(i) + " must be an array");
    if (rows[i].size() != spec.rank)
      throw ValidationError("cartan row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                " entries but rank is " + std::to_string(spec.rank),
                            ErrorKind::NonSquare);
    for (std::size_t j = 0; j < spec.rank; ++j)
      spec.cartan(i, j) = integer_field(rows[i][j], "cartan[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ValidationError("label must be a string");
    spec.label = doc["label"].get<std::string>();
  }
  to_presentation(spec);
  return spec;
}

GrsPresentation to_presentation(const GrsSpecFile& spec) {
  try {
    return GrsPresentation(spec.cartan);
  } catch (const Error& e) {
    throw ValidationError(e.what(), e.kind());
  }
}

std::string spec_to_json(const GrsSpecFile& spec) {
  Json doc;
  doc["rank"] = spec.rank;
  doc["cartan"] = matrix_json(spec.cartan);
  if (spec.label) doc["label"] = *spec.label;
  return doc.dump(2) + "\n";
}

std::string to_dot(const CarterDiagram& d) {
  std::ostringstream out;
  out << "graph \"" << d.name.value_or("diagram") << "\" {\n";
  out << "  node [shape=circle, label=\"\"];\n";
  for (std::size_t v = 0; v < d.vertex_count; ++v) out << "  " << v << ";\n";
  for (auto [a, b] : d.edges) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::NotSymmetric:
    case ErrorKind::BadDiagonal:
    case ErrorKind::NormNotTwo:
    case ErrorKind::SeedNotRoot:
    case ErrorKind::NameUnknown:
      return kExitInvalidInput;
    case ErrorKind::Overflow:
    case ErrorKind::NotPositiveDefinite:
    case ErrorKind::TargetNotEnumerable:
    case ErrorKind::Reducible:
      return kExitUnsupported;
    case ErrorKind::VerificationFailure:
    case ErrorKind::SearchExhausted:
    case ErrorKind::InternalError:
      return kExitVerification;
  }
  return kExitVerification;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized root systems: Euler forms, root enumeration and Carter classification", "grs"};
  app.require_subcommand(1);
  std::uint64_t cap = kDefaultOrderCap;
  app.add_option("--cap", cap, "Coxeter order search cap")->check(CLI::PositiveNumber);

  std::string file, file2, name, dot_path;
  std::optional<std::size_t> rank;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for a specification file");
  analyze_cmd->add_option("FILE", file, "Specification file, or - for standard input")->required();
  auto* euler_cmd = app.add_subcommand("euler", "Euler form and its uniqueness");
  euler_cmd->add_option("FILE", file, "Specification file, or - for standard input")->required();
  auto* roots_cmd = app.add_subcommand("roots", "Real roots of a positive definite system");
  roots_cmd->add_option("FILE", file, "Specification file, or - for standard input")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Carter diagram name of each irreducible component");
  classify_cmd->add_option("FILE", file, "Specification file, or - for standard input")->required();
  classify_cmd->add_option("--dot", dot_path, "Write the diagrams as Graphviz");
  auto* realize_cmd = app.add_subcommand("realize", "Specification realizing a catalog diagram");
  realize_cmd->add_option("NAME", name, "Catalog name such as D_4(a_1)")->required();
  auto* iso_cmd = app.add_subcommand("isomorphic", "Whether two irreducible positive definite systems are isomorphic");
  iso_cmd->add_option("FILE1", file, "First specification")->required();
  iso_cmd->add_option("FILE2", file2, "Second specification")->required();
  auto* catalog_cmd = app.add_subcommand("catalog", "List the diagram catalog");
  catalog_cmd->add_option("--rank", rank, "Only entries of this rank");
  catalog_cmd->add_option("--dot", dot_path, "Write the diagrams as Graphviz");
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    Json report;
    if (analyze_cmd->parsed()) {
      report = analyze(load(file), cap);
    } else if (euler_cmd->parsed()) {
      report = euler(load(file));
    } else if (roots_cmd->parsed()) {
      report = roots(load(file));
    } else if (classify_cmd->parsed()) {
      const Loaded in = load(file);
      const auto parts = classify_grs(in.grs);
      report["label"] = label_json(in.spec);
      report["names"] = names_json(parts);
      report["components"] = classification_json(parts);
      if (!dot_path.empty()) {
        std::vector<CarterDiagram> diagrams;
        for (const auto& cc : parts) diagrams.push_back(cc.diagram);
        write_dot(dot_path, diagrams);
      }
    } else if (realize_cmd->parsed()) {
      const CatalogEntry* entry = catalog().find(name);
      if (!entry) throw Error(ErrorKind::NameUnknown, "no catalog diagram named " + name);
      const GrsPresentation g = realize(entry->name);
      out << spec_to_json({g.rank(), g.cartan(), entry->name});
      return kExitOk;
    } else if (iso_cmd->parsed()) {
      const Loaded a = load(file), b = load(file2);
      const bool iso = are_isomorphic_grs(a.grs, b.grs);
      report["isomorphic"] = iso;
      report["names"] = {classify_grs(a.grs).front().name, classify_grs(b.grs).front().name};
    } else if (catalog_cmd->parsed()) {
      std::vector<CarterDiagram> diagrams;
      report = catalog_json(rank, diagrams);
      if (!dot_path.empty()) write_dot(dot_path, diagrams);
    } else if (selftest_cmd->parsed()) {
      bool all = true;
      acceptance::run_all([&](const acceptance::CriterionResult& r) {
        out << acceptance::format(r) << std::endl;
        all = all && r.passed;
      });
      return all ? kExitOk : kExitVerification;
    }
    out << report.dump(2) << "\n";
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace grs::cli
