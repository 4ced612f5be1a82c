// nashkit command-line front end. Exit codes: 0 analysis done (the verdict is
// in the report), 2 bad input, 3 internal invariant violated.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nashkit/error.hpp"
#include "nashkit/fixtures.hpp"
#include "nashkit/io.hpp"
#include "nashkit/knowledge_base.hpp"
#include "nashkit/reports.hpp"

using namespace nashkit;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "' (not a fixture name either)");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_cluster(const std::string& text) {
  auto doc = io::parse_document(text);
  return doc.value.is_object() && doc.value.contains("points");
}

DualGraph load_graph(const std::string& input) {
  if (auto g = fixtures::graph(input)) return *g;
  if (auto c = fixtures::cluster(input)) return simulate(*c);
  std::string text = read_file(input);
  if (looks_like_cluster(text)) return simulate(io::read_cluster(text));
  return io::read_graph(text);
}

BlowupCluster load_cluster(const std::string& input) {
  if (auto c = fixtures::cluster(input)) return *c;
  return io::read_cluster(read_file(input));
}

std::vector<long> parse_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError(std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw InputError(std::string(what) + " is empty");
  return out;
}

template <class Report>
void emit(const Report& r, const std::string& format) {
  if (format == "structured")
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
}

void write_dot(const std::string& path, const DualGraph& g) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << io::to_dot(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nashkit: exact lattice, valuation and obstruction checks for surface resolutions"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));

  std::function<void()> action;

  // graph
  auto* graph = app.add_subcommand("graph", "Dual graphs")->require_subcommand(1);
  std::string graph_input, dot_path;
  auto* graph_check = graph->add_subcommand("check", "Lattice report: definiteness, det, inverse signs, key");
  graph_check->add_option("input", graph_input, "Fixture (A1..A10, D4..D10, E6..E8, cluster fixtures) or document")->required();
  graph_check->add_option("--dot", dot_path, "Also write a Graphviz file");
  graph_check->callback([&] {
    action = [&] {
      auto g = load_graph(graph_input);
      write_dot(dot_path, g);
      emit(reports::GraphReport::build(g), format);
    };
  });

  // validate
  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a graph, cluster or wedge-model document");
  validate_cmd->add_option("document", validate_path)->required()->check(CLI::ExistingFile);
  int validate_status = 0;
  validate_cmd->callback([&] {
    action = [&] {
      auto diags = io::validate(read_file(validate_path));
      if (format == "structured") {
        io::Json out = io::Json::array();
        for (const auto& d : diags)
          out.push_back({{"path", d.path}, {"line", d.line ? io::Json(*d.line) : io::Json(nullptr)}, {"message", d.message}});
        std::cout << io::Json{{"schema", io::kSchemaVersion}, {"report", "validate"}, {"diagnostics", out}}.dump(2) << "\n";
      } else {
        for (const auto& d : diags) std::cout << validate_path << ": " << io::to_string(d) << "\n";
        if (diags.empty()) std::cout << validate_path << ": ok\n";
      }
      if (!diags.empty()) validate_status = kExitInput;
    };
  });

  // cluster
  auto* cluster = app.add_subcommand("cluster", "Clusters of infinitely near points")->require_subcommand(1);
  std::string cluster_input;
  auto* cluster_build = cluster->add_subcommand("build", "Simulate blow-ups: graph, P, M, M^-1, K coefficients");
  cluster_build->add_option("input", cluster_input, "Cluster fixture (single, chain2, chain3, satellite3, twodir) or document")->required();
  cluster_build->add_option("--dot", dot_path, "Also write a Graphviz file");
  cluster_build->callback([&] {
    action = [&] {
      auto c = load_cluster(cluster_input);
      auto r = reports::ClusterReport::build(c);
      write_dot(dot_path, r.graph);
      emit(r, format);
    };
  });

  // val
  auto* val = app.add_subcommand("val", "Divisorial valuations")->require_subcommand(1);
  PointIndex e = 0, f = 0;
  std::string poly;
  auto* val_compare = val->add_subcommand("compare", "Compare nu_Fe and nu_Ff");
  val_compare->add_option("cluster", cluster_input)->required();
  val_compare->add_option("e", e)->required();
  val_compare->add_option("f", f)->required();
  val_compare->callback([&] {
    action = [&] { emit(reports::CompareReport::build(load_cluster(cluster_input), e, f), format); };
  });
  auto* val_ord = val->add_subcommand("ord", "Orders of a polynomial along every component");
  val_ord->add_option("cluster", cluster_input)->required();
  val_ord->add_option("g", poly, "Polynomial such as \"y^2 - x^3\"")->required();
  val_ord->callback([&] {
    action = [&] { emit(reports::OrdReport::build(load_cluster(cluster_input), parse_polynomial(poly)), format); };
  });

  // adj
  auto* adj = app.add_subcommand("adj", "Adjacency obstructions")->require_subcommand(1);
  std::string adj_input, returns;
  std::optional<PointIndex> opt_e, opt_f, f2;
  std::optional<VertexId> special;
  bool allow_lift = false;
  auto* obstruct = adj->add_subcommand(
      "obstruct", "Valuative test of N_Ff in N_Fe; with --poly/--f2 the refined test of N_Fe in N_Ff; with --returns the returns system");
  obstruct->add_option("input", adj_input, "Cluster, or a graph when --returns is given")->required();
  obstruct->add_option("e", opt_e);
  obstruct->add_option("f", opt_f);
  obstruct->add_option("--poly", poly, "Germ g for the refined criterion");
  obstruct->add_option("--f2", f2, "Component of the lifted return");
  obstruct->add_option("--returns", returns, "Returns b_0,...,b_r (graph vertex order)");
  obstruct->add_option("--special", special, "Vertex id of the component met by the special arc");
  obstruct->add_flag("--allow-lift", allow_lift, "Do not rule out a vanishing a_special");
  obstruct->callback([&] {
    action = [&] {
      if (!returns.empty()) {
        if (!special) throw InputError("--returns needs --special");
        auto g = load_graph(adj_input);
        auto b = parse_list(returns, "--returns");
        emit(reports::ReturnsReport::build(intersection_matrix(g), b, g.index_of(*special), !allow_lift), format);
        return;
      }
      if (!opt_e || !opt_f) throw InputError("adj obstruct needs two component indices e f");
      auto c = load_cluster(adj_input);
      if (!poly.empty() || f2) {
        if (poly.empty() || !f2) throw InputError("the refined criterion needs both --poly and --f2");
        emit(reports::ObstructReport::refined(c, *opt_e, *opt_f, *f2, parse_polynomial(poly)), format);
      } else {
        emit(reports::ObstructReport::valuative(c, *opt_e, *opt_f), format);
      }
    };
  });
  auto* table = adj->add_subcommand("table", "Valuative verdicts for every ordered pair");
  table->add_option("cluster", cluster_input)->required();
  table->callback([&] { action = [&] { emit(reports::TableReport::build(load_cluster(cluster_input)), format); }; });

  // euler
  auto* euler = app.add_subcommand("euler", "Euler characteristic bounds")->require_subcommand(1);
  std::string coeffs;
  VertexId attach = 0;
  auto* bound = euler->add_subcommand("bound", "Partial bounds, final bound and the disk certificate");
  bound->add_option("graph", graph_input)->required();
  bound->add_option("--coeffs", coeffs, "a_0,...,a_r in graph vertex order")->required();
  bound->add_option("--attach", attach, "Vertex id met by the special arc")->required();
  bound->callback([&] {
    action = [&] {
      EulerInput in{load_graph(graph_input), parse_list(coeffs, "--coeffs"), attach};
      emit(reports::EulerReport::build(in), format);
    };
  });

  // dfd
  auto* dfd = app.add_subcommand("dfd", "Relative canonical divisor bookkeeping")->require_subcommand(1);
  std::string model_path;
  bool minimal_target = false, assert_b1 = false, assert_no_lift = false;
  auto* dfd_check = dfd->add_subcommand("check", "Solve or verify (a - b) = M^-1 (c + d) and decide lifting");
  dfd_check->add_option("model", model_path, "Wedge model document")->required();
  dfd_check->add_flag("--minimal-target", minimal_target);
  dfd_check->add_flag("--assert-b1-lt-1", assert_b1);
  dfd_check->add_flag("--assert-no-lift", assert_no_lift);
  dfd_check->callback([&] {
    action = [&] {
      auto model = io::read_wedge_model(read_file(model_path));
      model.minimal_target |= minimal_target;
      model.assert_b1_lt_1 |= assert_b1;
      model.assert_no_lift |= assert_no_lift;
      emit(reports::DfdReport::build(model), format);
    };
  });

  // pair
  auto* pair = app.add_subcommand("pair", "Pair graphs and the verdict store")->require_subcommand(1);
  std::string kb_path, provenance;
  bool store = false;
  auto* canon = pair->add_subcommand("canon", "Canonical key of the pair graph; look up or store its verdict");
  canon->add_option("cluster", cluster_input)->required();
  canon->add_option("e", e)->required();
  canon->add_option("f", f)->required();
  canon->add_option("--kb", kb_path, "Knowledge base file");
  canon->add_flag("--store", store, "Record the computed verdict");
  canon->add_option("--provenance", provenance, "Note stored with the verdict");
  canon->callback([&] {
    action = [&] {
      auto c = load_cluster(cluster_input);
      auto r = reports::PairReport::build(c, e, f);
      if (!kb_path.empty()) {
        KnowledgeBase kb(kb_path);
        if (store) {
          if (!r.computed) throw InputError("nothing to store for e == f");
          std::string note = provenance.empty() ? "valuative criterion on " + cluster_input : provenance;
          auto rec = kb.store(r.key, r.computed->status, note);
          r.kb_status = "stored";
          r.kb_verdict = rec.verdict;
          r.kb_provenance = rec.provenance;
        } else if (auto rec = kb.lookup(r.key)) {
          r.kb_status = "hit";
          r.kb_verdict = rec->verdict;
          r.kb_provenance = rec->provenance;
        } else {
          r.kb_status = "miss";
        }
      } else if (store) {
        throw InputError("--store needs --kb");
      }
      emit(r, format);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    action();
    return validate_status;
  } catch (const io::DocumentError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << "error: " << io::to_string(d) << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  }
}
