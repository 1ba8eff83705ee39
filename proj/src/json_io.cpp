#include <hurwitz/json_io.hpp>

#include <sstream>
#include <stdexcept>

namespace hurwitz {

json bigint_to_json(const BigInt& v) {
  if (fits_int64(v)) return v.convert_to<long long>();
  return v.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

json to_json(const Partition& p) {
  json a = json::array();
  for (int x : p.parts) a.push_back(x);
  return a;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition: expected array");
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(x.get<int>());
  return Partition(std::move(parts));
}

json to_json(const RationalN& r) {
  auto poly = [](const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(bigint_to_json(c));
    if (p.is_zero()) a.push_back(0);
    return a;
  };
  return json{{"num", poly(r.num())}, {"den", poly(r.den())}};
}

RationalN rational_fn_from_json(const json& j) {
  auto poly = [](const json& a) {
    if (!a.is_array()) throw std::invalid_argument("polynomial: expected array");
    std::vector<BigInt> c;
    for (const auto& x : a) c.push_back(bigint_from_json(x));
    return Poly(std::move(c));
  };
  return RationalN(poly(j.at("num")), poly(j.at("den")));
}

json to_json(const PatternGraph& g) {
  json edges = json::array();
  for (auto [t, h] : g.edges()) edges.push_back(json::array({t, h}));
  return json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

PatternGraph pattern_graph_from_json(const json& j) {
  int n = j.at("vertices").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  if (n == 0 && edges.empty()) return PatternGraph();
  return PatternGraph::from_edges(n, edges);
}

json to_json(const TwoFoldGraph& g) {
  json adj = json::array();
  for (int a = 0; a < g.a_count(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.b_count(); ++b) row.push_back(g.mult(a, b));
    adj.push_back(row);
  }
  return json{{"va", g.a_count()}, {"vb", g.b_count()}, {"adj", adj}};
}

TwoFoldGraph two_fold_from_json(const json& j) {
  int va = j.at("va").get<int>();
  int vb = j.at("vb").get<int>();
  std::vector<int> adj;
  const json& rows = j.at("adj");
  if (!rows.is_array() || static_cast<int>(rows.size()) != va)
    throw std::invalid_argument("two-fold graph: adj must have va rows");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != vb)
      throw std::invalid_argument("two-fold graph: each adj row must have vb entries");
    for (const auto& x : row) adj.push_back(x.get<int>());
  }
  return TwoFoldGraph::from_biadjacency(va, vb, adj);
}

json to_json(const OperatorExpr& x) {
  json terms = json::array();
  for (const auto& [g, c] : x.terms())
    terms.push_back(json{{"graph", to_json(g)}, {"coeff", to_json(c)}});
  return json{{"convention", convention_name(x.convention())}, {"terms", terms}};
}

OperatorExpr operator_expr_from_json(const json& j) {
  std::string conv = j.at("convention").get<std::string>();
  Convention c;
  if (conv == "free")
    c = Convention::Free;
  else if (conv == "exact")
    c = Convention::Exact;
  else
    throw std::invalid_argument("operator expression: unknown convention " + conv);
  OperatorExpr x(c);
  for (const auto& t : j.at("terms"))
    x.add_term(pattern_graph_from_json(t.at("graph")),
               rational_fn_from_json(t.at("coeff")));
  return x;
}

json to_json(const WStructureTable& t) {
  json entries = json::array();
  for (const auto& [label, c] : t.entries)
    entries.push_back(json{{"label", to_json(label)}, {"coeff", to_json(c)}});
  return json{{"family", "W"},
              {"left", to_json(t.left)},
              {"right", to_json(t.right)},
              {"grading", t.left.size() + t.right.size()},
              {"entries", entries},
              {"residual", nullptr}};
}

json to_json(const VStructureTable& t) {
  json entries = json::array();
  for (const auto& [label, c] : t.entries)
    entries.push_back(json{{"label", to_json(label)}, {"coeff", to_json(c)}});
  return json{{"family", "V"},
              {"left", to_json(t.left)},
              {"right", to_json(t.right)},
              {"grading", t.left.edge_count() + t.right.edge_count()},
              {"entries", entries},
              {"residual", to_json(t.residual)}};
}

json to_json(const std::map<TwoFoldGraph, Rational>& glue_map) {
  json entries = json::array();
  for (const auto& [label, c] : glue_map)
    entries.push_back(json{{"label", to_json(label)}, {"coeff", rational_str(c)}});
  return entries;
}

json to_json(const TheoremReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json jp{{"g1", to_json(p.g1)},
            {"g2", to_json(p.g2)},
            {"pass", p.pass},
            {"limits_finite", p.limits_finite},
            {"limits", to_json(p.limits)},
            {"glue", to_json(p.glue)},
            {"graded_residual_terms", p.graded_residual_terms}};
    jp["full_residual_terms"] =
        p.full_residual_terms ? json(*p.full_residual_terms) : json(nullptr);
    pairs.push_back(std::move(jp));
  }
  return json{{"edges", r.m}, {"all_pass", r.all_pass}, {"pairs", pairs}};
}

json to_json(const ClassAlgebraReport& r) {
  json sm = json::array();
  for (const auto& [key, row] : r.sm_table) {
    json entries = json::array();
    for (const auto& [d3, c] : row)
      entries.push_back(json{{"label", to_json(d3)}, {"coeff", bigint_to_json(c)}});
    sm.push_back(json{{"left", to_json(key.first)},
                      {"right", to_json(key.second)},
                      {"entries", entries}});
  }
  json wt = json::array();
  for (const auto& [key, row] : r.w_table) {
    json entries = json::array();
    for (const auto& [d3, c] : row)
      entries.push_back(json{{"label", to_json(d3)}, {"coeff", to_json(c)}});
    wt.push_back(json{{"left", to_json(key.first)},
                      {"right", to_json(key.second)},
                      {"entries", entries}});
  }
  json lambda = json::array();
  for (const auto& [d, v] : r.lambda)
    lambda.push_back(json{{"label", to_json(d)}, {"value", rational_str(v)}});
  return json{{"m", r.m},
              {"sm_table", sm},
              {"w_graded_table", wt},
              {"scaling", lambda},
              {"scaling_found", r.scaling_found},
              {"consistent", r.consistent},
              {"discrepancies", r.discrepancies}};
}

json to_json(const ClassTable& t) {
  json entries = json::array();
  for (const auto& [key, row] : t.entries) {
    json cells = json::array();
    for (const auto& [d3, c] : row)
      cells.push_back(json{{"label", to_json(d3)}, {"coeff", c}});
    entries.push_back(json{{"left", to_json(key.first)},
                           {"right", to_json(key.second)},
                           {"entries", cells}});
  }
  return json{{"m", t.m}, {"entries", entries}};
}

json to_json(const OperatorMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim; ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim; ++j) row.push_back(rational_str(m.entry(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.n}, {"degree", m.degree}, {"dim", m.dim}, {"entries", rows}};
}

std::string graphs_to_csv(const std::vector<TwoFoldGraph>& graphs) {
  std::ostringstream out;
  out << "va,vb,adj\n";
  for (const auto& g : graphs) {
    out << g.a_count() << "," << g.b_count() << ",";
    for (int a = 0; a < g.a_count(); ++a) {
      if (a) out << "|";
      for (int b = 0; b < g.b_count(); ++b) {
        if (b) out << " ";
        out << g.mult(a, b);
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string partitions_to_csv(const std::vector<Partition>& parts) {
  std::ostringstream out;
  out << "partition\n";
  for (const auto& p : parts) {
    for (size_t i = 0; i < p.parts.size(); ++i) {
      if (i) out << " ";
      out << p.parts[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string w_table_to_csv(const WStructureTable& t) {
  std::ostringstream out;
  out << "label,coeff\n";
  for (const auto& [label, c] : t.entries) {
    for (size_t i = 0; i < label.parts.size(); ++i) {
      if (i) out << " ";
      out << label.parts[i];
    }
    out << "," << c.str() << "\n";
  }
  return out.str();
}

Partition partition_from_string(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("partition: bad part '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

}  // namespace hurwitz
