#pragma once

#include <string>

#include <json.hpp>

#include "radio/compose.hpp"
#include "radio/labeling.hpp"
#include "radio/oracle.hpp"
#include "radio/tree.hpp"

namespace radio {

// Wire formats.  Trees: {"n": int, "edges": [[u,v],...]} with 0-based ids
// and edges normalized to (min,max), sorted.  Orders: {"order": [...]}.
// Labelings: {"labels": [...], "span": int, "certified_optimal": bool}.
// Everything re-parses to an equal in-memory value.

nlohmann::json tree_to_json(const Tree& t);
Tree tree_from_json(const nlohmann::json& j);

nlohmann::json order_to_json(const LinearOrder& ord);
LinearOrder order_from_json(const nlohmann::json& j);

nlohmann::json labeling_to_json(const RadioLabeling& lab);
RadioLabeling labeling_from_json(const nlohmann::json& j);

nlohmann::json composite_spec_to_json(const CompositeSpec& spec);
CompositeSpec composite_spec_from_json(const nlohmann::json& j);

nlohmann::json solve_result_to_json(const SolveResult& res);

// Graphviz text for the tree; when a labeling is supplied each vertex is
// annotated with its label.
std::string export_dot(const Tree& t, const RadioLabeling* labeling = nullptr);

}  // namespace radio
