#include "radio/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "radio/compose.hpp"
#include "radio/errors.hpp"
#include "radio/families.hpp"
#include "radio/json_io.hpp"
#include "radio/labeling.hpp"
#include "radio/oracle.hpp"
#include "radio/rooted_view.hpp"
#include "radio/tree.hpp"

namespace radio {

namespace {

using nlohmann::json;

json read_json(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return json::parse(in);
        std::ifstream f(path);
        if (!f) throw BadInput("cannot open " + path);
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw BadInput("malformed JSON in " + (path == "-" ? "stdin" : path) + ": " + e.what());
    }
}

Tree read_tree(const std::string& path, std::istream& in) {
    return tree_from_json(read_json(path, in));
}

void write_output(const std::string& path, std::ostream& out, const std::string& text) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw BadInput("cannot open " + path + " for writing");
    f << text;
}

void emit_json(const std::string& path, std::ostream& out, const json& j) {
    write_output(path, out, j.dump(2) + "\n");
}

// "k=3,m=4" -> {{"k","3"},{"m","4"}}
std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> params;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw BadParams("parameter \"" + item + "\" is not of the form key=value");
        params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return params;
}

int param_int(const std::map<std::string, std::string>& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end()) throw BadParams("missing parameter \"" + key + "\"");
    try {
        std::size_t used = 0;
        const int value = std::stoi(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing junk");
        return value;
    } catch (const std::exception&) {
        throw BadParams("parameter \"" + key + "\" must be an integer, got \"" + it->second +
                        "\"");
    }
}

FamilySpec spec_from_params(FamilyKind kind, const std::map<std::string, std::string>& params) {
    FamilySpec spec;
    spec.kind = kind;
    switch (kind) {
        case FamilyKind::path:
            spec.n = param_int(params, "n");
            break;
        case FamilyKind::star:
        case FamilyKind::double_star:
            spec.k = param_int(params, "k");
            break;
        case FamilyKind::complete_mary:
            spec.h = param_int(params, "h");
            spec.m = param_int(params, "m");
            break;
        case FamilyKind::levelwise_regular_1root:
        case FamilyKind::levelwise_regular_2root:
            // Degrees by level: m0=..,m1=..,...
            for (int i = 0;; ++i) {
                const std::string key = "m" + std::to_string(i);
                if (!params.count(key)) break;
                spec.degrees.push_back(param_int(params, key));
            }
            if (spec.degrees.empty())
                throw BadParams("level-wise families need degrees m0=..,m1=..,...");
            break;
        case FamilyKind::banana:
        case FamilyKind::firecracker:
        case FamilyKind::caterpillar:
            spec.m = param_int(params, "m");
            spec.k = param_int(params, "k");
            break;
    }
    return spec;
}

struct GenArgs {
    std::string family;
    std::string params;
    std::uint64_t seed = 0;
    std::string out = "-";
};

struct ComposeArgs {
    std::string kind;
    int k = 0;
    std::vector<std::string> files;
    std::string out = "-";
    std::string spec_out;
};

struct OrderArgs {
    std::string method;
    std::string tree = "-";
    std::string spec;
    std::string base_order;
    std::vector<std::string> component_orders;
    std::string order_file;
    bool exhaustive = true;
    std::uint64_t budget = 0;
    std::string out = "-";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    Tree t = [&] {
        if (a.family == "random") {
            const auto params = parse_params(a.params);
            return random_tree(param_int(params, "n"), a.seed);
        }
        const auto kind = family_kind_from_name(a.family);
        if (!kind) throw BadParams("unknown family \"" + a.family + "\"");
        return generate(spec_from_params(*kind, parse_params(a.params)));
    }();
    emit_json(a.out, out, tree_to_json(t));
    return 0;
}

int cmd_compose(const ComposeArgs& a, std::istream& in, std::ostream& out) {
    std::pair<Tree, CompositeSpec> built = [&] {
        if (a.kind == "wk") {
            if (a.k != 0 && a.k != static_cast<int>(a.files.size()))
                throw ArityMismatch("--k says " + std::to_string(a.k) + " components but " +
                                    std::to_string(a.files.size()) + " files were given");
            std::vector<Tree> components;
            components.reserve(a.files.size());
            for (const std::string& f : a.files) components.push_back(read_tree(f, in));
            return compose_merge(std::move(components));
        }
        if (a.files.size() != 1)
            throw BadInput("composition kind \"" + a.kind + "\" takes exactly one base tree");
        const Tree base = read_tree(a.files[0], in);
        if (a.kind == "sk") return compose_star(base, a.k);
        if (a.kind == "dk") return compose_double_star(base, a.k);
        throw BadInput("composition kind must be one of wk, sk, dk");
    }();
    emit_json(a.out, out, tree_to_json(built.first));
    if (!a.spec_out.empty())
        emit_json(a.spec_out, out, composite_spec_to_json(built.second));
    return 0;
}

int cmd_lb(const std::string& tree_path, std::istream& in, std::ostream& out) {
    const Tree t = read_tree(tree_path, in);
    const RootedView rv = root_view(t);
    const long long lb = lower_bound(t, rv);
    json j{{"n", t.size()},
           {"diam", t.diameter()},
           {"epsilon", rv.epsilon},
           {"total_level", rv.total_level},
           {"lb", lb}};
    // The general bound assumes diameter at least 2; the single-edge tree
    // is still answered (correctly) but flagged.
    if (t.diameter() == 1) j["diam1_relaxed"] = true;
    emit_json("-", out, j);
    return 0;
}

int cmd_order(const OrderArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    const Tree t = read_tree(a.tree, in);

    if (a.method == "alg") {
        if (a.spec.empty()) throw BadInput("--method alg needs --spec");
        const CompositeSpec spec = composite_spec_from_json(read_json(a.spec, in));
        if (spec.composite_n != t.size())
            throw LengthMismatch("composition spec is for n=" +
                                 std::to_string(spec.composite_n) + ", tree has n=" +
                                 std::to_string(t.size()));
        LinearOrder ord;
        if (spec.kind == CompositeKind::merge_centers) {
            if (a.component_orders.empty())
                throw BadInput("--method alg with a wk spec needs --component-order files");
            std::vector<LinearOrder> orders;
            orders.reserve(a.component_orders.size());
            for (const std::string& f : a.component_orders)
                orders.push_back(order_from_json(read_json(f, in)));
            ord = order_merge(spec, orders);
        } else {
            if (a.base_order.empty())
                throw BadInput("--method alg with an sk/dk spec needs --base-order");
            const LinearOrder base = order_from_json(read_json(a.base_order, in));
            ord = spec.kind == CompositeKind::star ? order_star(spec, base)
                                                   : order_double_star(spec, base);
        }
        emit_json(a.out, out, order_to_json(ord));
        return 0;
    }

    if (a.method == "search") {
        const RootedView rv = root_view(t);
        const FindOrderResult res = find_lb_order(t, rv, a.exhaustive, a.budget);
        if (res.order) {
            emit_json(a.out, out, order_to_json(*res.order));
            return 0;
        }
        if (res.complete) {
            // A definitive no: the tree has no order meeting the conditions,
            // so its radio number exceeds the lower bound.
            emit_json(a.out, out, json{{"order", nullptr}, {"definitive", true}});
            return 0;
        }
        err << json{{"error", "BudgetExhausted"},
                    {"message", "order search ran out of budget after " +
                                    std::to_string(res.nodes) + " nodes"}}
                   .dump()
            << "\n";
        return 1;
    }

    if (a.method == "file") {
        if (a.order_file.empty()) throw BadInput("--method file needs --order-file");
        const LinearOrder ord = order_from_json(read_json(a.order_file, in));
        // Validation only: the order must be a permutation of the tree.
        check_order(t, root_view(t), ord);
        emit_json(a.out, out, order_to_json(ord));
        return 0;
    }

    throw BadInput("--method must be one of alg, search, file");
}

int cmd_label(const std::string& tree_path, const std::string& order_path, std::istream& in,
              std::ostream& out) {
    const Tree t = read_tree(tree_path, in);
    const LinearOrder ord = order_from_json(read_json(order_path, in));
    const RadioLabeling lab = labels_from_order(t, root_view(t), ord);
    emit_json("-", out, labeling_to_json(lab));
    return 0;
}

int cmd_verify(const std::string& tree_path, const std::string& labeling_path, std::istream& in,
               std::ostream& out) {
    const Tree t = read_tree(tree_path, in);
    const RadioLabeling lab = labeling_from_json(read_json(labeling_path, in));
    const Certificate cert = certify(t, lab);
    json j{{"certificate", certificate_name(cert)}};
    if (!lab.labels.empty())
        j["span"] = *std::max_element(lab.labels.begin(), lab.labels.end());
    if (t.size() >= 2) j["lb"] = lower_bound(t);
    emit_json("-", out, j);
    return 0;
}

int cmd_exact_rn(const std::string& tree_path, std::uint64_t budget, int workers,
                 bool strong_bound, std::istream& in, std::ostream& out) {
    const Tree t = read_tree(tree_path, in);
    const SolveResult res = exact_rn(t, budget, workers, strong_bound);
    emit_json("-", out, solve_result_to_json(res));
    return 0;
}

int cmd_export_dot(const std::string& tree_path, const std::string& labeling_path,
                   std::istream& in, std::ostream& out) {
    const Tree t = read_tree(tree_path, in);
    if (labeling_path.empty()) {
        write_output("-", out, export_dot(t));
    } else {
        const RadioLabeling lab = labeling_from_json(read_json(labeling_path, in));
        if (static_cast<int>(lab.labels.size()) != t.size())
            throw LengthMismatch("labeling has " + std::to_string(lab.labels.size()) +
                                 " labels for a tree on " + std::to_string(t.size()) +
                                 " vertices");
        write_output("-", out, export_dot(t, &lab));
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"radio labelings of trees: bounds, orders, certificates"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a tree from a named family");
    gen->add_option("--family", gen_args.family,
                    "path|star|double_star|complete_mary|levelwise_regular_1root|"
                    "levelwise_regular_2root|banana|firecracker|caterpillar|random")
        ->required();
    gen->add_option("--params", gen_args.params, "comma-separated key=value parameters");
    gen->add_option("--seed", gen_args.seed, "seed for --family random");
    gen->add_option("-o,--out", gen_args.out, "output file, - for stdout");

    ComposeArgs compose_args;
    CLI::App* compose = app.add_subcommand("compose", "compose trees at their weight centers");
    compose->add_option("--kind", compose_args.kind, "wk|sk|dk")->required();
    compose->add_option("--k", compose_args.k, "copy count for sk/dk");
    compose->add_option("trees", compose_args.files, "component tree JSON files")->required();
    compose->add_option("-o,--out", compose_args.out, "output file, - for stdout");
    compose->add_option("--spec-out", compose_args.spec_out,
                        "also write the composition spec JSON here");

    std::string lb_tree = "-";
    CLI::App* lb = app.add_subcommand("lb", "spanning lower bound of a tree");
    lb->add_option("tree", lb_tree, "tree JSON file, - for stdin");

    OrderArgs order_args;
    CLI::App* order = app.add_subcommand("order", "produce a vertex order for tight labeling");
    order->add_option("--method", order_args.method, "alg|search|file")->required();
    order->add_option("tree", order_args.tree, "tree JSON file, - for stdin");
    order->add_option("--spec", order_args.spec, "composition spec JSON (alg)");
    order->add_option("--base-order", order_args.base_order, "base order JSON (alg, sk/dk)");
    order->add_option("--component-order", order_args.component_orders,
                      "component order JSON, repeat per component (alg, wk)");
    order->add_option("--order-file", order_args.order_file, "order JSON to validate (file)");
    order->add_flag("--exhaustive,!--no-exhaustive", order_args.exhaustive,
                    "search the whole space so an empty result is a proof (search)");
    order->add_option("--budget", order_args.budget, "search node budget, 0 = unlimited");
    order->add_option("-o,--out", order_args.out, "output file, - for stdout");

    std::string label_tree = "-", label_order;
    CLI::App* label = app.add_subcommand("label", "labels along an order");
    label->add_option("tree", label_tree, "tree JSON file, - for stdin");
    label->add_option("--order", label_order, "order JSON file")->required();

    std::string verify_tree = "-", verify_labeling;
    CLI::App* verify = app.add_subcommand("verify", "classify a labeling");
    verify->add_option("tree", verify_tree, "tree JSON file, - for stdin");
    verify->add_option("--labeling", verify_labeling, "labeling JSON file")->required();

    std::string exact_tree = "-";
    std::uint64_t exact_budget = 50'000'000;
    int exact_workers = 1;
    bool exact_strong = false;
    CLI::App* exact = app.add_subcommand("exact-rn", "exact radio number by branch and bound");
    exact->add_option("tree", exact_tree, "tree JSON file, - for stdin");
    exact->add_option("--budget", exact_budget, "node budget, 0 = unlimited");
    exact->add_option("--workers", exact_workers, "parallel workers over the label-0 vertex");
    exact->add_flag("--strong-bound", exact_strong, "sharper level-based pruning bound");

    std::string dot_tree = "-", dot_labeling;
    CLI::App* dot = app.add_subcommand("export-dot", "Graphviz text for a tree");
    dot->add_option("tree", dot_tree, "tree JSON file, - for stdin");
    dot->add_option("--labeling", dot_labeling, "annotate vertices with these labels");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_args, out);
        if (compose->parsed()) return cmd_compose(compose_args, in, out);
        if (lb->parsed()) return cmd_lb(lb_tree, in, out);
        if (order->parsed()) return cmd_order(order_args, in, out, err);
        if (label->parsed()) return cmd_label(label_tree, label_order, in, out);
        if (verify->parsed()) return cmd_verify(verify_tree, verify_labeling, in, out);
        if (exact->parsed())
            return cmd_exact_rn(exact_tree, exact_budget, exact_workers, exact_strong, in, out);
        if (dot->parsed()) return cmd_export_dot(dot_tree, dot_labeling, in, out);
        err << nlohmann::json{{"error", "BadInput"}, {"message", "no subcommand"}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        err << nlohmann::json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}

}  // namespace radio
