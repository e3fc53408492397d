#include "radio/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "radio/errors.hpp"

namespace radio {

namespace {

using nlohmann::json;

const json& require_key(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw BadInput(std::string(what) + " JSON needs a \"" + key + "\" key");
    return j.at(key);
}

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw BadInput(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

json tree_to_json(const Tree& t) {
    json edges = json::array();
    for (auto [u, v] : t.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", t.size()}, {"edges", std::move(edges)}};
}

Tree tree_from_json(const json& j) {
    const int n = require_int(require_key(j, "n", "tree"), "tree n");
    const json& ej = require_key(j, "edges", "tree");
    if (!ej.is_array()) throw BadInput("tree \"edges\" must be an array of pairs");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(ej.size());
    for (const json& e : ej) {
        if (!e.is_array() || e.size() != 2)
            throw BadInput("tree edge must be a pair [u,v]");
        edges.emplace_back(require_int(e[0], "edge endpoint"),
                           require_int(e[1], "edge endpoint"));
    }
    return build_tree(n, std::move(edges));
}

json order_to_json(const LinearOrder& ord) { return json{{"order", ord.seq}}; }

LinearOrder order_from_json(const json& j) {
    const json& oj = require_key(j, "order", "order");
    if (!oj.is_array()) throw BadInput("\"order\" must be an array of vertex ids");
    LinearOrder ord;
    ord.seq.reserve(oj.size());
    for (const json& v : oj) ord.seq.push_back(require_int(v, "order entry"));
    return ord;
}

json labeling_to_json(const RadioLabeling& lab) {
    return json{{"labels", lab.labels},
                {"span", lab.span},
                {"certified_optimal", lab.certified_optimal}};
}

RadioLabeling labeling_from_json(const json& j) {
    const json& lj = require_key(j, "labels", "labeling");
    if (!lj.is_array()) throw BadInput("\"labels\" must be an array of integers");
    RadioLabeling lab;
    lab.labels.reserve(lj.size());
    for (const json& v : lj) {
        if (!v.is_number_integer()) throw BadInput("labels must be integers");
        lab.labels.push_back(v.get<long long>());
    }
    if (j.contains("span")) {
        if (!j.at("span").is_number_integer()) throw BadInput("\"span\" must be an integer");
        lab.span = j.at("span").get<long long>();
    } else if (!lab.labels.empty()) {
        lab.span = *std::max_element(lab.labels.begin(), lab.labels.end());
    }
    if (j.contains("certified_optimal")) {
        if (!j.at("certified_optimal").is_boolean())
            throw BadInput("\"certified_optimal\" must be a boolean");
        lab.certified_optimal = j.at("certified_optimal").get<bool>();
    }
    return lab;
}

json composite_spec_to_json(const CompositeSpec& spec) {
    json components = json::array();
    for (const Tree& c : spec.components) components.push_back(tree_to_json(c));
    json layout = json::array();
    for (const auto& e : spec.layout)
        layout.push_back(json::array({e.comp, e.local, e.global}));
    return json{{"kind", composite_kind_name(spec.kind)},
                {"k", spec.k},
                {"n", spec.composite_n},
                {"diam", spec.composite_diam},
                {"components", std::move(components)},
                {"layout", std::move(layout)}};
}

CompositeSpec composite_spec_from_json(const json& j) {
    CompositeSpec spec;
    const json& kind = require_key(j, "kind", "composition spec");
    if (kind == "wk")
        spec.kind = CompositeKind::merge_centers;
    else if (kind == "sk")
        spec.kind = CompositeKind::star;
    else if (kind == "dk")
        spec.kind = CompositeKind::double_star;
    else
        throw BadInput("composition kind must be one of wk, sk, dk");
    spec.k = require_int(require_key(j, "k", "composition spec"), "k");
    spec.composite_n = require_int(require_key(j, "n", "composition spec"), "n");
    spec.composite_diam = require_int(require_key(j, "diam", "composition spec"), "diam");
    const json& cj = require_key(j, "components", "composition spec");
    if (!cj.is_array() || cj.empty())
        throw BadInput("composition spec needs a non-empty \"components\" array");
    for (const json& c : cj) spec.components.push_back(tree_from_json(c));
    const json& lj = require_key(j, "layout", "composition spec");
    if (!lj.is_array()) throw BadInput("\"layout\" must be an array of triples");
    for (const json& e : lj) {
        if (!e.is_array() || e.size() != 3)
            throw BadInput("layout entry must be a triple [component, local, global]");
        spec.layout.push_back({require_int(e[0], "layout component"),
                               require_int(e[1], "layout local id"),
                               require_int(e[2], "layout global id")});
    }
    // Lookups binary-search the layout, so keep it sorted regardless of the
    // order rows appeared in the file.
    std::sort(spec.layout.begin(), spec.layout.end(), [](const auto& a, const auto& b) {
        if (a.comp != b.comp) return a.comp < b.comp;
        return a.local < b.local;
    });
    return spec;
}

json solve_result_to_json(const SolveResult& res) {
    return json{{"rn", res.rn},
                {"status", solve_status_name(res.status)},
                {"nodes_explored", res.nodes_explored},
                {"witness", labeling_to_json(res.witness)}};
}

std::string export_dot(const Tree& t, const RadioLabeling* labeling) {
    std::ostringstream out;
    out << "graph tree {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < t.size(); ++v) {
        out << "  " << v;
        if (labeling && v < static_cast<int>(labeling->labels.size()))
            out << " [label=\"" << v << "\\nf=" << labeling->labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : t.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace radio
