#include "fuzzyahp/study_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fuzzyahp/error.hpp"
#include "json.hpp"

namespace fahp {

using json = nlohmann::ordered_json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(where + ": missing field '" + key + "'");
    return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) throw ValidationError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

double require_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ValidationError(where + ": expected a number");
    return v.get<double>();
}

Tfn parse_triple(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 3) throw ValidationError(where + ": expected [l, m, u]");
    try {
        return Tfn(require_number(v[0], where + "[0]"), require_number(v[1], where + "[1]"),
                   require_number(v[2], where + "[2]"));
    } catch (const ArgumentError& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

Tfn parse_judgment(const json& v, const LinguisticScale& scale, const std::string& where) {
    if (!v.is_object()) return parse_triple(v, where);
    const std::string term = require_string(v, "term", where);
    try {
        return scale_lookup(term, scale);
    } catch (const LookupError& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

Node parse_node(const json& v, const std::string& where) {
    if (!v.is_object()) throw ValidationError(where + ": expected a node object");
    Node n{require_string(v, "id", where), "", {}};
    if (auto it = v.find("label"); it != v.end()) {
        if (!it->is_string()) throw ValidationError(where + ".label: expected a string");
        n.label = it->get<std::string>();
    }
    if (auto it = v.find("children"); it != v.end()) {
        if (!it->is_array()) throw ValidationError(where + ".children: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
            n.children.push_back(parse_node((*it)[i], where + ".children[" + std::to_string(i) + "]"));
    }
    return n;
}

const Node* find_node(const Node& n, const std::string& id) {
    if (n.id == id) return &n;
    for (const auto& c : n.children)
        if (const Node* hit = find_node(c, id)) return hit;
    return nullptr;
}

json node_to_json(const Node& n) {
    json out{{"id", n.id}, {"label", n.label}};
    if (!n.is_leaf()) {
        json children = json::array();
        for (const auto& c : n.children) children.push_back(node_to_json(c));
        out["children"] = children;
    }
    return out;
}

json tfn_to_json(const Tfn& t) { return json::array({t.lower(), t.mode(), t.upper()}); }

json config_to_json(const SolverConfig& c) {
    return {{"lambda_lo", c.lambda_lo},
            {"lambda_cap", c.lambda_cap},
            {"bisection_tol", c.bisection_tol},
            {"weight_floor", c.weight_floor}};
}

SolverConfig config_from_json(const json& v, SolverConfig base, const std::string& where) {
    if (!v.is_object()) throw ValidationError(where + ": expected an object");
    for (const auto& [key, value] : v.items()) {
        const std::string at = where + "." + key;
        if (key == "lambda_lo")
            base.lambda_lo = require_number(value, at);
        else if (key == "lambda_cap")
            base.lambda_cap = require_number(value, at);
        else if (key == "bisection_tol")
            base.bisection_tol = require_number(value, at);
        else if (key == "weight_floor")
            base.weight_floor = require_number(value, at);
        else
            throw ValidationError(at + ": unknown solver setting");
    }
    try {
        base.check();
    } catch (const ArgumentError& e) {
        throw ValidationError(where + ": " + e.what());
    }
    return base;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed document: ") + e.what());
    }
}

std::vector<std::string> split_csv_line(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        const auto first = cell.find_first_not_of(" \t");
        const auto last = cell.find_last_not_of(" \t");
        cells.push_back(first == std::string::npos ? "" : cell.substr(first, last - first + 1));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    std::size_t used = 0;
    try {
        out = std::stod(s, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == s.size() && std::isfinite(out);
}

} // namespace

Study parse_study(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ValidationError("study: expected an object at the top level");

    Study s;
    s.name = require_string(doc, "name", "study");

    if (auto it = doc.find("scale"); it != doc.end()) {
        if (!it->is_object() || it->empty()) throw ValidationError("scale: expected a non-empty object");
        std::vector<LinguisticScale::Entry> entries;
        for (const auto& [term, value] : it->items()) entries.emplace_back(term, parse_triple(value, "scale." + term));
        std::stable_sort(entries.begin(), entries.end(),
                         [](const auto& a, const auto& b) { return a.second.mode() < b.second.mode(); });
        try {
            s.scale = LinguisticScale(std::move(entries));
        } catch (const ArgumentError& e) {
            throw ValidationError(std::string("scale: ") + e.what());
        }
    }

    s.hierarchy.root = parse_node(require(doc, "hierarchy", "study"), "hierarchy");

    const json& matrices = require(doc, "matrices", "study");
    if (!matrices.is_object()) throw ValidationError("matrices: expected an object keyed by node id");
    for (const auto& [parent, list] : matrices.items()) {
        const std::string where = "matrices." + parent;
        if (!list.is_array()) throw ValidationError(where + ": expected a list of judgments");
        ComparisonMatrix m;
        m.parent = parent;
        if (const Node* node = find_node(s.hierarchy.root, parent))
            for (const auto& c : node->children) m.items.push_back(c.id);
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string at = where + "[" + std::to_string(i) + "]";
            const json& j = list[i];
            if (!j.is_object()) throw ValidationError(at + ": expected {row, col, judgment}");
            m.judgments.push_back({require_string(j, "row", at), require_string(j, "col", at),
                                   parse_judgment(require(j, "judgment", at), s.scale, at + ".judgment")});
        }
        s.hierarchy.matrices.emplace(parent, std::move(m));
    }

    if (auto it = doc.find("solver"); it != doc.end()) s.solver = config_from_json(*it, s.solver, "solver");

    s.hierarchy = validate(std::move(s.hierarchy));
    return s;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Study load_study(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        return parse_study(text);
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

std::string dump_study(const Study& s) {
    json doc;
    doc["name"] = s.name;
    json scale = json::object();
    for (const auto& [term, t] : s.scale.entries()) scale[term] = tfn_to_json(t);
    doc["scale"] = scale;
    doc["hierarchy"] = node_to_json(s.hierarchy.root);
    json matrices = json::object();
    for (const Node* n : internal_nodes(s.hierarchy.root)) {
        auto it = s.hierarchy.matrices.find(n->id);
        if (it == s.hierarchy.matrices.end()) continue;
        json list = json::array();
        for (const auto& j : it->second.judgments)
            list.push_back({{"row", j.row}, {"col", j.col}, {"judgment", tfn_to_json(j.value)}});
        matrices[n->id] = list;
    }
    doc["matrices"] = matrices;
    doc["solver"] = config_to_json(s.solver);
    return doc.dump(2) + "\n";
}

ResultsDocument make_results(const Study& s, const std::map<std::string, SolveResult>& solved,
                             const GlobalRanking& ranking, const SolverConfig& used) {
    ResultsDocument doc;
    doc.tool_version = FUZZYAHP_VERSION;
    doc.study = s.name;
    doc.config = used;
    for (const Node* n : internal_nodes(s.hierarchy.root)) {
        auto it = solved.find(n->id);
        if (it == solved.end()) continue;
        const SolveResult& r = it->second;
        doc.blocks.push_back({n->id, n->label, r.items, r.weights, r.lambda, r.consistent, r.clamped, r.non_unique,
                              r.face_width, r.iterations});
    }
    doc.global = ranking.rows;
    return doc;
}

std::string dump_results(const ResultsDocument& doc) {
    json out;
    out["tool"] = {{"name", "fuzzyahp"}, {"version", doc.tool_version}};
    out["study"] = doc.study;
    if (doc.timestamp) out["timestamp"] = *doc.timestamp;
    out["config"] = config_to_json(doc.config);
    json blocks = json::array();
    for (const auto& b : doc.blocks) {
        json weights = json::array();
        for (std::size_t i = 0; i < b.items.size(); ++i) weights.push_back({{"id", b.items[i]}, {"weight", b.weights[i]}});
        blocks.push_back({{"id", b.id},
                          {"label", b.label},
                          {"weights", weights},
                          {"lambda", b.lambda},
                          {"consistent", b.consistent},
                          {"clamped", b.clamped},
                          {"non_unique", b.non_unique},
                          {"face_width", b.face_width},
                          {"iterations", b.iterations}});
    }
    out["blocks"] = blocks;
    json global = json::array();
    for (const auto& g : doc.global)
        global.push_back({{"leaf", g.leaf},
                          {"category", g.category},
                          {"category_weight", g.category_weight},
                          {"local_weight", g.local_weight},
                          {"global_weight", g.global_weight},
                          {"rank", g.rank}});
    out["global"] = global;
    return out.dump(2) + "\n";
}

ResultsDocument parse_results(std::string_view text) {
    const json in = parse_json(text);
    ResultsDocument doc;
    try {
        doc.tool_version = in.at("tool").at("version").get<std::string>();
        doc.study = in.at("study").get<std::string>();
        if (in.contains("timestamp")) doc.timestamp = in.at("timestamp").get<std::string>();
        doc.config = config_from_json(in.at("config"), {}, "config");
        for (const auto& b : in.at("blocks")) {
            BlockResult r;
            r.id = b.at("id").get<std::string>();
            r.label = b.at("label").get<std::string>();
            for (const auto& w : b.at("weights")) {
                r.items.push_back(w.at("id").get<std::string>());
                r.weights.push_back(w.at("weight").get<double>());
            }
            r.lambda = b.at("lambda").get<double>();
            r.consistent = b.at("consistent").get<bool>();
            r.clamped = b.at("clamped").get<bool>();
            r.non_unique = b.at("non_unique").get<bool>();
            r.face_width = b.at("face_width").get<double>();
            r.iterations = b.at("iterations").get<std::size_t>();
            doc.blocks.push_back(std::move(r));
        }
        for (const auto& g : in.at("global"))
            doc.global.push_back({g.at("leaf").get<std::string>(), g.at("category").get<std::string>(),
                                  g.at("category_weight").get<double>(), g.at("local_weight").get<double>(),
                                  g.at("global_weight").get<double>(), g.at("rank").get<int>()});
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed results document: ") + e.what());
    }
    return doc;
}

DelphiRatings read_ratings_csv(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) throw ValidationError(source + ": empty file");
    if (split_csv_line(line) != std::vector<std::string>{"item", "expert", "rating"})
        throw ValidationError(source + ":1: header must be exactly 'item,expert,rating'");

    std::vector<std::string> items, experts;
    std::map<std::string, std::size_t> item_index, expert_index;
    std::map<std::pair<std::size_t, std::size_t>, std::pair<int, std::size_t>> cells;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto c = split_csv_line(line);
        const std::string at = source + ":" + std::to_string(row);
        if (c.size() != 3) throw ValidationError(at + ": expected 3 fields, found " + std::to_string(c.size()));
        if (c[0].empty() || c[1].empty()) throw ValidationError(at + ": empty item or expert");
        double value = 0;
        if (!parse_double(c[2], value) || value != static_cast<int>(value) || value < 0 || value > 4)
            throw ValidationError(at + ": rating '" + c[2] + "' is not an integer in 0..4");
        auto [it_item, new_item] = item_index.emplace(c[0], items.size());
        if (new_item) items.push_back(c[0]);
        auto [it_expert, new_expert] = expert_index.emplace(c[1], experts.size());
        if (new_expert) experts.push_back(c[1]);
        auto [cell, fresh] = cells.emplace(std::pair{it_item->second, it_expert->second},
                                           std::pair{static_cast<int>(value), row});
        if (!fresh)
            throw ValidationError(at + ": second rating of item '" + c[0] + "' by expert '" + c[1] + "' (first on line " +
                                  std::to_string(cell->second.second) + ")");
    }
    if (items.empty()) throw ValidationError(source + ": no ratings");

    std::vector<std::vector<int>> ratings(items.size(), std::vector<int>(experts.size()));
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t e = 0; e < experts.size(); ++e) {
            auto it = cells.find({i, e});
            if (it == cells.end())
                throw ValidationError(source + ": missing rating of item '" + items[i] + "' by expert '" + experts[e] +
                                      "'");
            ratings[i][e] = it->second.first;
        }
    try {
        return DelphiRatings(items, experts, ratings);
    } catch (const Error& e) {
        throw ValidationError(source + ": " + e.what());
    }
}

ItemResponses read_responses_csv(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) throw ValidationError(source + ": empty file");
    const auto items = split_csv_line(line);
    for (const auto& id : items)
        if (id.empty()) throw ValidationError(source + ":1: empty item id in header");

    std::vector<std::vector<double>> rows;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto c = split_csv_line(line);
        const std::string at = source + ":" + std::to_string(row);
        if (c.size() != items.size())
            throw ValidationError(at + ": expected " + std::to_string(items.size()) + " responses, found " +
                                  std::to_string(c.size()));
        std::vector<double> values(c.size());
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!parse_double(c[k], values[k]))
                throw ValidationError(at + ": response '" + c[k] + "' for item '" + items[k] + "' is not a number");
        rows.push_back(std::move(values));
    }
    try {
        return ItemResponses(items, rows);
    } catch (const Error& e) {
        throw ValidationError(source + ": " + e.what());
    }
}

} // namespace fahp
