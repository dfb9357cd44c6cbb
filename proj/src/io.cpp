#include "treeaug/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "treeaug/treewidth.hpp"

namespace treeaug {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::invalid_input, "cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::invalid_input, "cannot write file: " + path);
    out << content;
}

namespace {

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorKind::invalid_input, "malformed JSON document");
    return doc;
}

Weight weight_from_json(const json& j) {
    if (j.is_number_integer()) return Weight(j.get<long long>());
    if (j.is_string()) return parse_weight(j.get<std::string>());
    throw Error(ErrorKind::invalid_input,
                "weights must be integers or rational strings such as \"3/2\"");
}

json weight_to_json(const Weight& w) {
    if (w.denominator() == 1) return json(w.numerator());
    return json(format_weight(w));
}

std::pair<std::string, std::string> string_pair(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw Error(ErrorKind::invalid_input, std::string(what) + " must be [id, id] pairs");
    return {j[0].get<std::string>(), j[1].get<std::string>()};
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw Error(ErrorKind::invalid_input, "instance must be a JSON object");
    for (const char* field : {"nodes", "root", "tree_arcs", "edges"})
        if (!doc.contains(field))
            throw Error(ErrorKind::invalid_input, std::string("missing field: ") + field);

    InstanceFile file;
    Instance& inst = file.instance;

    if (!doc["nodes"].is_array()) throw Error(ErrorKind::invalid_input, "nodes must be a list");
    std::unordered_map<std::string, int> index;
    for (const auto& j : doc["nodes"]) {
        if (!j.is_string()) throw Error(ErrorKind::invalid_input, "node ids must be strings");
        std::string name = j.get<std::string>();
        if (index.count(name))
            throw Error(ErrorKind::invalid_input, "duplicate node identifier: " + name);
        index.emplace(name, static_cast<int>(inst.names.size()));
        inst.names.push_back(name);
    }
    auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end())
            throw Error(ErrorKind::invalid_input, "unknown node identifier: " + name);
        return it->second;
    };

    if (!doc["root"].is_string()) throw Error(ErrorKind::invalid_input, "root must be a string");
    inst.root = lookup(doc["root"].get<std::string>());

    for (const auto& j : doc["tree_arcs"]) {
        auto [c, p] = string_pair(j, "tree_arcs");
        inst.tree_arcs.emplace_back(lookup(c), lookup(p));
    }

    std::set<std::pair<int, int>> seen_edges;
    for (const auto& j : doc["edges"]) {
        auto [u, v] = string_pair(j, "edges");
        int ui = lookup(u), vi = lookup(v);
        auto key = std::minmax(ui, vi);
        if (ui != vi && !seen_edges.insert(key).second) {
            // Parallel edges are orientation-equivalent; keep one.
            file.warnings.push_back("collapsed parallel edge " + u + "," + v);
            continue;
        }
        inst.edges.emplace_back(ui, vi);
    }

    inst.weights.assign(inst.names.size(), Weight(1));
    if (doc.contains("weights")) {
        if (!doc["weights"].is_object())
            throw Error(ErrorKind::invalid_input, "weights must be a map");
        inst.weighted = true;
        for (auto it = doc["weights"].begin(); it != doc["weights"].end(); ++it)
            inst.weights[lookup(it.key())] = weight_from_json(it.value());
    }

    if (doc.contains("embedding")) {
        if (!doc["embedding"].is_object())
            throw Error(ErrorKind::invalid_input, "embedding must be a map");
        std::vector<std::vector<int>> rot(inst.names.size());
        for (auto it = doc["embedding"].begin(); it != doc["embedding"].end(); ++it) {
            int v = lookup(it.key());
            for (const auto& nb : it.value()) rot[v].push_back(lookup(nb.get<std::string>()));
        }
        inst.embedding = std::move(rot);
    }

    if (doc.contains("meta")) {
        for (auto it = doc["meta"].begin(); it != doc["meta"].end(); ++it)
            if (it.value().is_number_integer())
                file.meta[it.key()] = it.value().get<long long>();
    }
    return file;
}

InstanceFile load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string serialize_instance(const Instance& inst, const std::map<std::string, long long>& meta) {
    json doc;
    std::vector<std::string> nodes = inst.names;
    std::sort(nodes.begin(), nodes.end());
    doc["nodes"] = nodes;
    doc["root"] = inst.names[inst.root];

    std::vector<std::pair<std::string, std::string>> arcs;
    for (auto [c, p] : inst.tree_arcs) arcs.emplace_back(inst.names[c], inst.names[p]);
    std::sort(arcs.begin(), arcs.end());
    json jarcs = json::array();
    for (auto& [c, p] : arcs) jarcs.push_back({c, p});
    doc["tree_arcs"] = jarcs;

    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : inst.edges) {
        auto a = inst.names[u], b = inst.names[v];
        if (b < a) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    json jedges = json::array();
    for (auto& [u, v] : edges) jedges.push_back({u, v});
    doc["edges"] = jedges;

    if (inst.weighted) {
        json jw = json::object();
        for (int v = 0; v < inst.node_count(); ++v) jw[inst.names[v]] = weight_to_json(inst.weights[v]);
        doc["weights"] = jw;
    }
    if (inst.embedding) {
        json je = json::object();
        for (int v = 0; v < inst.node_count(); ++v) {
            json rot = json::array();
            for (int nb : (*inst.embedding)[v]) rot.push_back(inst.names[nb]);
            je[inst.names[v]] = rot;
        }
        doc["embedding"] = je;
    }
    if (!meta.empty()) {
        json jm = json::object();
        for (auto& [k, v] : meta) jm[k] = v;
        doc["meta"] = jm;
    }
    return doc.dump(2) + "\n";
}

void save_instance(const std::string& path, const Instance& inst,
                   const std::map<std::string, long long>& meta) {
    write_file(path, serialize_instance(inst, meta));
}

SolutionFile parse_solution(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw Error(ErrorKind::invalid_input, "solution must be a JSON object");
    for (const char* field : {"oriented", "value", "covered"})
        if (!doc.contains(field))
            throw Error(ErrorKind::invalid_input, std::string("missing field: ") + field);
    SolutionFile sol;
    if (doc.contains("algorithm") && doc["algorithm"].is_string())
        sol.algorithm = doc["algorithm"].get<std::string>();
    for (const auto& j : doc["oriented"]) sol.oriented.push_back(string_pair(j, "oriented"));
    sol.value = weight_from_json(doc["value"]);
    for (const auto& j : doc["covered"]) {
        if (!j.is_string()) throw Error(ErrorKind::invalid_input, "covered must list node ids");
        sol.covered.push_back(j.get<std::string>());
    }
    return sol;
}

SolutionFile load_solution(const std::string& path) { return parse_solution(read_file(path)); }

std::string serialize_solution(const SolutionFile& sol) {
    json doc;
    if (!sol.algorithm.empty()) doc["algorithm"] = sol.algorithm;
    auto oriented = sol.oriented;
    std::sort(oriented.begin(), oriented.end());
    json jo = json::array();
    for (auto& [a, b] : oriented) jo.push_back({a, b});
    doc["oriented"] = jo;
    doc["value"] = weight_to_json(sol.value);
    auto covered = sol.covered;
    std::sort(covered.begin(), covered.end());
    doc["covered"] = covered;
    return doc.dump(2) + "\n";
}

void save_solution(const std::string& path, const SolutionFile& sol) {
    write_file(path, serialize_solution(sol));
}

SolutionFile make_solution(const Instance& inst, const std::string& algorithm,
                           const Orientation& o, const CoverageReport& rep) {
    SolutionFile sol;
    sol.algorithm = algorithm;
    for (int e = 0; e < inst.edge_count(); ++e) {
        if (!o.assigned(e)) continue;
        auto [from, to] = o.arc(inst, e);
        sol.oriented.emplace_back(inst.names[from], inst.names[to]);
    }
    sol.value = rep.value;
    for (int v : rep.covered) sol.covered.push_back(inst.names[v]);
    return sol;
}

Orientation orientation_from_solution(const Instance& inst, const SolutionFile& sol) {
    std::map<std::pair<int, int>, int> edge_at;
    for (int e = 0; e < inst.edge_count(); ++e)
        edge_at[std::minmax(inst.edges[e].first, inst.edges[e].second)] = e;

    Orientation o(inst.edge_count());
    std::vector<char> assigned(inst.edge_count(), 0);
    for (auto& [from, to] : sol.oriented) {
        int f = inst.index_of(from), t = inst.index_of(to);
        if (f < 0 || t < 0)
            throw Error(ErrorKind::invalid_input, "solution references unknown node: " +
                                                      (f < 0 ? from : to));
        auto it = edge_at.find(std::minmax(f, t));
        if (it == edge_at.end())
            throw Error(ErrorKind::invalid_input,
                        "solution orients a non-edge: " + from + "->" + to);
        int e = it->second;
        if (assigned[e])
            throw Error(ErrorKind::invalid_input,
                        "solution orients an edge twice: " + from + "->" + to);
        assigned[e] = 1;
        o.set(e, inst.edges[e].first == f ? Dir::forward : Dir::backward);
    }
    for (int e = 0; e < inst.edge_count(); ++e)
        if (!assigned[e])
            throw Error(ErrorKind::invalid_input,
                        "solution leaves an edge unoriented: " + inst.names[inst.edges[e].first] +
                            "," + inst.names[inst.edges[e].second]);
    return o;
}

TreeDecomposition load_decomposition(const std::string& path, const Instance& inst) {
    json doc = parse_json(read_file(path));
    if (!doc.is_object() || !doc.contains("bags") || !doc.contains("parent"))
        throw Error(ErrorKind::invalid_input, "decomposition needs 'bags' and 'parent'");
    TreeDecomposition td;
    for (const auto& jbag : doc["bags"]) {
        std::vector<int> bag;
        for (const auto& j : jbag) {
            int v = inst.index_of(j.get<std::string>());
            if (v < 0)
                throw Error(ErrorKind::invalid_input,
                            "decomposition references unknown node: " + j.get<std::string>());
            bag.push_back(v);
        }
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        td.bags.push_back(std::move(bag));
    }
    for (const auto& j : doc["parent"]) td.parent.push_back(j.get<int>());
    if (td.parent.size() != td.bags.size())
        throw Error(ErrorKind::invalid_input, "bags and parent lists differ in length");
    return td;
}

}  // namespace treeaug
