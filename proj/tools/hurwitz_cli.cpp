// Command-line front end: enumeration, structure constants, gluing,
// theorem verification, oracle checks. All numeric output is exact.
//
// Exit codes: 0 success, 1 structural failure (a closure or verification
// check failed), 2 usage or parse error.

#include <hurwitz/algebras.hpp>
#include <hurwitz/json_io.hpp>
#include <hurwitz/oracles.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hurwitz;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_edges_cap() {
  const char* env = std::getenv("HURWITZ_MAX_EDGES");
  if (!env) return 4;
  try {
    return std::stoi(env);
  } catch (...) {
    throw UsageError("HURWITZ_MAX_EDGES must be an integer");
  }
}

void check_edge_cap(int m, const std::string& what) {
  int cap = max_edges_cap();
  if (m > cap)
    throw UsageError(what + " exceeds HURWITZ_MAX_EDGES (" + std::to_string(cap) +
                     "); raise the variable to allow larger runs");
}

// Accepts inline JSON (starts with '{') or a file path.
json load_json_arg(const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || arg[0] != '{') {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("bad JSON in '" + arg + "': " + e.what());
  }
}

TwoFoldGraph load_graph_arg(const std::string& arg) {
  try {
    return two_fold_from_json(load_json_arg(arg));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("bad two-fold graph '" + arg + "': " + e.what());
  }
}

OperatorExpr load_expr_arg(const std::string& arg) {
  try {
    return operator_expr_from_json(load_json_arg(arg));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("bad operator expression '" + arg + "': " + e.what());
  }
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Exact computations in the universal cut-and-join and two-fold-graph operator algebras"};
  app.require_subcommand(1);

  // partitions
  int part_n = 0;
  std::string part_format = "json";
  auto* cmd_partitions = app.add_subcommand("partitions", "Enumerate partitions of n");
  cmd_partitions->add_option("--n", part_n, "Size to partition")->required();
  cmd_partitions->add_option("--format", part_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // graphs
  int graphs_m = 0;
  std::string graphs_format = "json";
  auto* cmd_graphs = app.add_subcommand("graphs", "Enumerate two-fold classes with m edges");
  cmd_graphs->add_option("--edges", graphs_m, "Edge count")->required();
  cmd_graphs->add_option("--format", graphs_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // a-const
  std::string d1_str, d2_str;
  std::string aconst_format = "json";
  auto* cmd_aconst = app.add_subcommand("a-const", "Structure constants of W[d1] * W[d2]");
  cmd_aconst->add_option("--d1", d1_str, "Comma-separated parts, e.g. 2,1 (empty = unit)");
  cmd_aconst->add_option("--d2", d2_str, "Comma-separated parts");
  cmd_aconst->add_option("--format", aconst_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // b-const
  std::string g1_str, g2_str;
  int bconst_grade = -1;
  auto* cmd_bconst = app.add_subcommand("b-const", "Structure constants of V(g1) * V(g2)");
  cmd_bconst->add_option("--g1", g1_str, "Two-fold graph JSON (inline or file)")->required();
  cmd_bconst->add_option("--g2", g2_str, "Two-fold graph JSON (inline or file)")->required();
  cmd_bconst->add_option("--grade", bconst_grade,
                         "Restrict to output terms with this edge count");

  // glue
  std::string glue_g1, glue_g2;
  auto* cmd_glue = app.add_subcommand("glue", "Combinatorial gluing product of two classes");
  cmd_glue->add_option("--g1", glue_g1)->required();
  cmd_glue->add_option("--g2", glue_g2)->required();

  // verify-theorem
  int verify_m = 0;
  auto* cmd_verify = app.add_subcommand(
      "verify-theorem", "Check graded structure-constant limits against the gluing product");
  cmd_verify->add_option("--edges", verify_m, "Grade m")->required();

  // oracle-check
  std::vector<std::string> expr_args;
  int oracle_n = 2, oracle_d = 1;
  bool oracle_emit = false;
  auto* cmd_oracle = app.add_subcommand(
      "oracle-check", "Compare an engine product against literal operator matrices");
  cmd_oracle->add_option("--expr", expr_args,
                         "Operator expression JSON (once for x*x, twice for x*y)")
      ->required()
      ->expected(1, 2);
  cmd_oracle->add_option("--n", oracle_n, "Truncation size N")->required();
  cmd_oracle->add_option("--degree", oracle_d, "Polynomial degree d")->required();
  cmd_oracle->add_flag("--emit-matrices", oracle_emit,
                       "Include the dense exact matrices in the output");

  // compare-sm
  int sm_m = 0;
  auto* cmd_sm = app.add_subcommand(
      "compare-sm", "Report: center of the S_m group algebra vs the graded W sector");
  cmd_sm->add_option("--m", sm_m, "Symmetric group size (0..6)")->required();

  // expand
  std::string expand_expr, family;
  auto* cmd_expand = app.add_subcommand("expand", "Expand an expression in the W or V family");
  cmd_expand->add_option("--expr", expand_expr, "Operator expression JSON")->required();
  cmd_expand->add_option("--family", family, "W|V")
      ->required()
      ->check(CLI::IsMember({"W", "V"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_partitions->parsed()) {
    if (part_n < 0) throw UsageError("partitions: --n must be >= 0");
    auto parts = enumerate_partitions(part_n);
    if (part_format == "csv") {
      std::cout << partitions_to_csv(parts);
    } else {
      json a = json::array();
      for (const auto& p : parts) a.push_back(to_json(p));
      emit(a);
    }
    return 0;
  }

  if (cmd_graphs->parsed()) {
    if (graphs_m < 0) throw UsageError("graphs: --edges must be >= 0");
    check_edge_cap(graphs_m, "graphs --edges");
    auto classes = enumerate_two_fold(graphs_m);
    if (graphs_format == "csv") {
      std::cout << graphs_to_csv(classes);
    } else {
      json a = json::array();
      for (const auto& g : classes) a.push_back(to_json(g));
      emit(a);
    }
    return 0;
  }

  if (cmd_aconst->parsed()) {
    Partition d1, d2;
    try {
      d1 = partition_from_string(d1_str);
      d2 = partition_from_string(d2_str);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    check_edge_cap(d1.size(), "a-const --d1 size");
    check_edge_cap(d2.size(), "a-const --d2 size");
    WStructureTable t = a_structure_constants(d1, d2);
    if (aconst_format == "csv")
      std::cout << w_table_to_csv(t);
    else
      emit(to_json(t));
    return 0;
  }

  if (cmd_bconst->parsed()) {
    TwoFoldGraph g1 = load_graph_arg(g1_str), g2 = load_graph_arg(g2_str);
    check_edge_cap(g1.edge_count(), "b-const --g1 edges");
    check_edge_cap(g2.edge_count(), "b-const --g2 edges");
    if (cmd_bconst->count("--grade") && bconst_grade < 0)
      throw UsageError("b-const: --grade must be >= 0");
    VStructureTable t = (bconst_grade >= 0)
                            ? b_structure_constants_graded(g1, g2, bconst_grade)
                            : b_structure_constants(g1, g2);
    emit(to_json(t));
    return 0;
  }

  if (cmd_glue->parsed()) {
    TwoFoldGraph g1 = load_graph_arg(glue_g1), g2 = load_graph_arg(glue_g2);
    check_edge_cap(g1.edge_count(), "glue --g1 edges");
    check_edge_cap(g2.edge_count(), "glue --g2 edges");
    json doc{{"left", to_json(g1)}, {"right", to_json(g2)}, {"entries", to_json(glue_product(g1, g2))}};
    emit(doc);
    return 0;
  }

  if (cmd_verify->parsed()) {
    if (verify_m < 0) throw UsageError("verify-theorem: --edges must be >= 0");
    check_edge_cap(verify_m, "verify-theorem --edges");
    TheoremReport report = verify_theorem(verify_m);
    emit(to_json(report));
    return report.all_pass ? 0 : 1;
  }

  if (cmd_oracle->parsed()) {
    OperatorExpr x = load_expr_arg(expr_args.front());
    OperatorExpr y = expr_args.size() > 1 ? load_expr_arg(expr_args[1]) : x;
    bool pass = oracle_product_check(x, y, oracle_n, oracle_d);
    json doc{{"n", oracle_n}, {"degree", oracle_d}, {"pass", pass}};
    if (oracle_emit) {
      doc["left"] = to_json(realize(x, oracle_n, oracle_d));
      doc["right"] = to_json(realize(y, oracle_n, oracle_d));
      doc["product"] = to_json(realize(free_product(x, y), oracle_n, oracle_d));
    }
    emit(doc);
    return pass ? 0 : 1;
  }

  if (cmd_sm->parsed()) {
    ClassAlgebraReport rep;
    try {
      rep = compare_class_algebra(sm_m);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    emit(to_json(rep));
    return 0;
  }

  if (cmd_expand->parsed()) {
    OperatorExpr x = load_expr_arg(expand_expr);
    if (family == "W") {
      WExpansion e = expand_in_w(x);
      json coeffs = json::array();
      for (const auto& [label, c] : e.coeffs)
        coeffs.push_back(json{{"label", to_json(label)}, {"coeff", to_json(c)}});
      emit(json{{"family", "W"}, {"coeffs", coeffs}, {"residual", to_json(e.residual)}});
    } else {
      VExpansion e = expand_in_v(x);
      json coeffs = json::array();
      for (const auto& [label, c] : e.coeffs)
        coeffs.push_back(json{{"label", to_json(label)}, {"coeff", to_json(c)}});
      emit(json{{"family", "V"}, {"coeffs", coeffs}, {"residual", to_json(e.residual)}});
    }
    return 0;
  }

  throw UsageError("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const hurwitz::ClosureError& e) {
    std::cerr << json{{"error", "structural"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
