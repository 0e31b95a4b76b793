#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netgood/game_model.hpp"

namespace netgood {

/// On-disk description of a game. Agents are indexed 0..n-1.
///
/// {
///   "schema_version": "1",
///   "n": 2,
///   "edges": [ {"from": 0, "to": 1, "weight": 0.5}, ... ],
///   "benefit": {"family": "exponential", "params": {"saturation": 1}},
///   "costs": [0.367879441171442, 0.367879441171442],
///   "coalitions": [[0], [1]],      // optional
///   "lambda": [1, 1]               // optional
/// }
///
/// "benefit" is one object applied to every agent, or an array of n
/// objects. Families: "exponential" (params.saturation > 0) and
/// "logarithmic" (params.scale > 0); omitted params default to 1.
struct GameDocument {
    struct Edge {
        int from = 0;
        int to = 0;
        double weight = 0.0;
    };

    std::string schema_version;
    int n = 0;
    std::vector<Edge> edges;
    std::vector<BenefitFunction> benefits;
    Vector costs;
    std::optional<std::vector<std::vector<int>>> coalitions;
    std::optional<Vector> lambda;

    /// Throws ValidationError with a field diagnostic on any violation.
    static GameDocument parse_string(const std::string& text);
    static GameDocument parse_file(const std::string& path);

    DependenceMatrix dependence_matrix() const;
    GameSpec to_game() const;
};

/// DOT digraph with weight-labelled arcs, deterministic node and edge order.
std::string export_dot(const GameDocument& doc);

/// "from,to,weight" CSV, weights at full precision so a re-parse is
/// bit-exact. Deterministic edge order.
std::string export_csv(const GameDocument& doc);

/// Parse the CSV produced by export_csv back into an edge list.
std::vector<GameDocument::Edge> edges_from_csv(const std::string& text);

}  // namespace netgood
