#include "netgood/game_document.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "netgood/errors.hpp"
#include "netgood/report_writer.hpp"

namespace netgood {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ValidationError("invalid game document: field '" + field + "': " + why);
}

double require_finite_number(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(field, "must be finite");
    return v;
}

BenefitFunction parse_benefit(const json& j, const std::string& field) {
    if (!j.is_object()) fail(field, "expected an object {family, params}");
    if (!j.contains("family") || !j.at("family").is_string())
        fail(field + ".family", "expected a string");
    const std::string family = j.at("family").get<std::string>();
    const json params = j.contains("params") ? j.at("params") : json::object();
    if (!params.is_object()) fail(field + ".params", "expected an object");

    if (family == "exponential") {
        double s = 1.0;
        if (params.contains("saturation"))
            s = require_finite_number(params.at("saturation"), field + ".params.saturation");
        if (!(s > 0.0)) fail(field + ".params.saturation", "must be positive");
        return BenefitFunction::exponential(s);
    }
    if (family == "logarithmic") {
        double a = 1.0;
        if (params.contains("scale"))
            a = require_finite_number(params.at("scale"), field + ".params.scale");
        if (!(a > 0.0)) fail(field + ".params.scale", "must be positive");
        return BenefitFunction::logarithmic(a);
    }
    fail(field + ".family", "unknown family '" + family +
                                "' (expected exponential or logarithmic)");
}

}  // namespace

GameDocument GameDocument::parse_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("invalid game document: not valid JSON: ") +
                              e.what());
    }
    if (!j.is_object()) fail("<root>", "expected a JSON object");

    GameDocument doc;

    if (!j.contains("schema_version") || !j.at("schema_version").is_string())
        fail("schema_version", "expected string \"1\"");
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != "1")
        fail("schema_version", "unsupported version '" + doc.schema_version + "'");

    if (!j.contains("n") || !j.at("n").is_number_integer())
        fail("n", "expected a positive integer");
    doc.n = j.at("n").get<int>();
    if (doc.n < 1) fail("n", "expected a positive integer");

    if (!j.contains("edges") || !j.at("edges").is_array())
        fail("edges", "expected an array");
    std::set<std::pair<int, int>> seen;
    int edge_idx = 0;
    for (const auto& je : j.at("edges")) {
        const std::string field = "edges[" + std::to_string(edge_idx++) + "]";
        if (!je.is_object()) fail(field, "expected {from, to, weight}");
        for (const char* k : {"from", "to", "weight"})
            if (!je.contains(k)) fail(field, std::string("missing '") + k + "'");
        if (!je.at("from").is_number_integer() || !je.at("to").is_number_integer())
            fail(field, "from/to must be integers");
        Edge e;
        e.from = je.at("from").get<int>();
        e.to = je.at("to").get<int>();
        e.weight = require_finite_number(je.at("weight"), field + ".weight");
        if (e.from < 0 || e.from >= doc.n || e.to < 0 || e.to >= doc.n)
            fail(field, "agent index out of range [0, " + std::to_string(doc.n) + ")");
        if (e.from == e.to) fail(field, "self-loop edges are not allowed");
        if (!seen.insert({e.from, e.to}).second)
            fail(field, "duplicate edge (" + std::to_string(e.from) + ", " +
                            std::to_string(e.to) + ")");
        doc.edges.push_back(e);
    }

    if (!j.contains("benefit")) fail("benefit", "missing");
    const json& jb = j.at("benefit");
    if (jb.is_array()) {
        if (static_cast<int>(jb.size()) != doc.n)
            fail("benefit", "array must have exactly n entries");
        for (int i = 0; i < doc.n; ++i)
            doc.benefits.push_back(parse_benefit(jb.at(i), "benefit[" + std::to_string(i) + "]"));
    } else {
        const BenefitFunction b = parse_benefit(jb, "benefit");
        doc.benefits.assign(doc.n, b);
    }

    if (!j.contains("costs") || !j.at("costs").is_array())
        fail("costs", "expected an array of n positive numbers");
    if (static_cast<int>(j.at("costs").size()) != doc.n)
        fail("costs", "expected exactly n entries");
    for (int i = 0; i < doc.n; ++i) {
        const double c = require_finite_number(j.at("costs").at(i),
                                               "costs[" + std::to_string(i) + "]");
        if (!(c > 0.0)) fail("costs[" + std::to_string(i) + "]", "must be positive");
        doc.costs.push_back(c);
    }

    if (j.contains("coalitions")) {
        if (!j.at("coalitions").is_array()) fail("coalitions", "expected an array of arrays");
        std::vector<std::vector<int>> blocks;
        int bi = 0;
        for (const auto& jb2 : j.at("coalitions")) {
            const std::string field = "coalitions[" + std::to_string(bi++) + "]";
            if (!jb2.is_array()) fail(field, "expected an array of agent indices");
            std::vector<int> block;
            for (const auto& jm : jb2) {
                if (!jm.is_number_integer()) fail(field, "agent indices must be integers");
                block.push_back(jm.get<int>());
            }
            blocks.push_back(std::move(block));
        }
        try {
            CoalitionPartition::from_blocks(blocks, doc.n);
        } catch (const ValidationError& e) {
            fail("coalitions", e.what());
        }
        doc.coalitions = std::move(blocks);
    }

    if (j.contains("lambda")) {
        if (!j.at("lambda").is_array() || static_cast<int>(j.at("lambda").size()) != doc.n)
            fail("lambda", "expected an array of n positive numbers");
        Vector lam;
        for (int i = 0; i < doc.n; ++i) {
            const double v = require_finite_number(j.at("lambda").at(i),
                                                   "lambda[" + std::to_string(i) + "]");
            if (!(v > 0.0)) fail("lambda[" + std::to_string(i) + "]", "must be positive");
            lam.push_back(v);
        }
        doc.lambda = std::move(lam);
    }

    return doc;
}

GameDocument GameDocument::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open game document '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

DependenceMatrix GameDocument::dependence_matrix() const {
    Matrix g(n, n, 0.0);
    for (const Edge& e : edges) g(e.from, e.to) = e.weight;
    return DependenceMatrix::from_matrix(std::move(g));
}

GameSpec GameDocument::to_game() const {
    return make_game(dependence_matrix(), benefits, costs);
}

namespace {

std::vector<GameDocument::Edge> sorted_edges(const GameDocument& doc) {
    auto edges = doc.edges;
    std::sort(edges.begin(), edges.end(),
              [](const GameDocument::Edge& a, const GameDocument::Edge& b) {
                  return a.from != b.from ? a.from < b.from : a.to < b.to;
              });
    return edges;
}

}  // namespace

std::string export_dot(const GameDocument& doc) {
    std::string out = "digraph dependence {\n";
    for (int i = 0; i < doc.n; ++i) out += "  " + std::to_string(i) + ";\n";
    for (const auto& e : sorted_edges(doc))
        out += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to) +
               " [label=\"" + format_report_float(e.weight) + "\"];\n";
    out += "}\n";
    return out;
}

std::string export_csv(const GameDocument& doc) {
    std::string out = "from,to,weight\n";
    for (const auto& e : sorted_edges(doc))
        out += std::to_string(e.from) + "," + std::to_string(e.to) + "," +
               format_exact_float(e.weight) + "\n";
    return out;
}

std::vector<GameDocument::Edge> edges_from_csv(const std::string& text) {
    std::vector<GameDocument::Edge> edges;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {  // header
            first = false;
            if (line != "from,to,weight")
                throw ValidationError("unexpected CSV header: " + line);
            continue;
        }
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ValidationError("malformed CSV row: " + line);
        GameDocument::Edge e;
        e.from = std::atoi(line.substr(0, c1).c_str());
        e.to = std::atoi(line.substr(c1 + 1, c2 - c1 - 1).c_str());
        e.weight = std::strtod(line.substr(c2 + 1).c_str(), nullptr);
        edges.push_back(e);
    }
    return edges;
}

}  // namespace netgood
