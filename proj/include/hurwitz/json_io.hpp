#pragma once

#include <hurwitz/algebras.hpp>
#include <hurwitz/oracles.hpp>

#include <json.hpp>

#include <string>

namespace hurwitz {

using json = nlohmann::json;

// Integer coefficients are emitted as JSON numbers when they fit in 64 bits
// and as decimal strings otherwise; both forms are accepted on input.
json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

json to_json(const Partition& p);                 // sorted integer array
Partition partition_from_json(const json& j);

json to_json(const RationalN& r);                 // {"num":[...], "den":[...]}
RationalN rational_fn_from_json(const json& j);

json to_json(const PatternGraph& g);              // {"vertices":n, "edges":[[t,h],...]}
PatternGraph pattern_graph_from_json(const json& j);

json to_json(const TwoFoldGraph& g);              // {"va":..,"vb":..,"adj":[[..],..]}
TwoFoldGraph two_fold_from_json(const json& j);

json to_json(const OperatorExpr& x);
OperatorExpr operator_expr_from_json(const json& j);

json to_json(const WStructureTable& t);
json to_json(const VStructureTable& t);
json to_json(const std::map<TwoFoldGraph, Rational>& glue_map);
json to_json(const TheoremReport& r);
json to_json(const ClassAlgebraReport& r);
json to_json(const ClassTable& t);
json to_json(const OperatorMatrix& m);            // dense rows of rational strings

std::string graphs_to_csv(const std::vector<TwoFoldGraph>& graphs);
std::string partitions_to_csv(const std::vector<Partition>& parts);
std::string w_table_to_csv(const WStructureTable& t);

/// Comma-separated part list ("2,1"); empty string is the empty diagram.
Partition partition_from_string(const std::string& s);

}  // namespace hurwitz
